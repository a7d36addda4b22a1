import pytest

from afkit.core import ArgumentationFramework

# Acceptance criteria report one PASS/FAIL line each in the terminal summary.
ACCEPTANCE_LINES = {}


def record_acceptance(number, line):
    ACCEPTANCE_LINES[number] = line


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call" or not item.name.startswith("test_criterion_"):
        return
    number = int(item.name.split("_")[2])
    label = item.name.partition(f"criterion_{number}_")[2].replace("_", " ")
    if report.failed:
        ACCEPTANCE_LINES[number] = f"ACCEPTANCE {number} {label}: FAIL"
    elif number not in ACCEPTANCE_LINES:
        ACCEPTANCE_LINES[number] = f"ACCEPTANCE {number} {label}: PASS"


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[number])

# The eight-argument framework used as the running example throughout the
# competition design, with its known extension sets per semantics.
EXAMPLE1_ARGS = list("abcdefgh")
EXAMPLE1_ATTACKS = [
    ("a", "b"), ("b", "a"), ("b", "c"), ("c", "d"), ("d", "e"), ("d", "g"),
    ("e", "c"), ("e", "f"), ("f", "f"), ("g", "g"), ("g", "h"), ("h", "g"),
]

EXAMPLE1_EXPECTED = {
    "CO": [(), ("a",), ("h",), ("a", "h"), ("b", "d", "h")],
    "PR": [("a", "h"), ("b", "d", "h")],
    "ST": [],
    "SST": [("b", "d", "h")],
    "STG": [("a", "e", "h"), ("b", "d", "h"), ("b", "e", "h")],
    "GR": [()],
    "ID": [("h",)],
}

EXAMPLE1_CONFLICT_FREE = [
    (), ("a",), ("b",), ("c",), ("d",), ("e",), ("h",),
    ("a", "c"), ("a", "d"), ("a", "e"), ("a", "h"), ("b", "d"), ("b", "e"),
    ("b", "h"), ("c", "h"), ("d", "h"), ("e", "h"),
    ("a", "c", "h"), ("a", "d", "h"), ("a", "e", "h"), ("b", "d", "h"),
    ("b", "e", "h"),
]

EXAMPLE1_ADMISSIBLE = [
    (), ("a",), ("b",), ("h",), ("a", "h"), ("b", "d"), ("b", "h"),
    ("b", "d", "h"),
]


@pytest.fixture
def example1() -> ArgumentationFramework:
    return ArgumentationFramework(EXAMPLE1_ARGS, EXAMPLE1_ATTACKS)


def as_tuples(extensions):
    """Canonicalize an iterable of extensions for comparison."""
    return sorted(tuple(sorted(e)) for e in extensions)
