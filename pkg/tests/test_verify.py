import itertools

import pytest

from afkit.core import ArgumentationFramework
from afkit.errors import UnknownArgumentError
from afkit.oracle import oracle_enumerate
from afkit.rng import SeededRng
from afkit.generators import ErdosRenyi, gen_erdos
from afkit.tasks import Semantics
from afkit.verify import verify


def test_incomplete_because_it_defends_more(example1):
    assert not verify(Semantics.CO, example1, {"b", "d"})  # defends h


def test_ideal_singleton(example1):
    assert verify(Semantics.ID, example1, {"h"})
    assert not verify(Semantics.ID, example1, {"a", "h"})


def test_unattacked_single_argument_is_stable():
    af = ArgumentationFramework(["a"])
    assert verify(Semantics.ST, af, {"a"})


def test_unknown_argument(example1):
    with pytest.raises(UnknownArgumentError):
        verify(Semantics.CO, example1, {"nope"})


def test_example1_all_semantics_all_small_sets(example1):
    # verify agrees with oracle membership over every subset of 4 key args.
    for sem in Semantics:
        truth = set(oracle_enumerate(sem, example1))
        for r in range(4):
            for combo in itertools.combinations("abdh", r):
                assert verify(sem, example1, set(combo)) == \
                    (frozenset(combo) in truth), (sem, combo)


def test_verify_matches_oracle_membership_on_random_frameworks():
    rng = SeededRng(17)
    for i in range(25):
        sub = rng.split(f"af{i}")
        af = gen_erdos(ErdosRenyi(n=sub.randint(1, 6), prob_attacks=0.4), sub)
        names = list(af.args)
        subsets = [frozenset(c) for r in range(len(names) + 1)
                   for c in itertools.combinations(names, r)]
        for sem in Semantics:
            truth = set(oracle_enumerate(sem, af))
            for s in subsets:
                assert verify(sem, af, s) == (s in truth), (sem, sorted(s))


def test_grounded_verifies_for_exactly_one_set():
    rng = SeededRng(23)
    for i in range(15):
        sub = rng.split(f"af{i}")
        af = gen_erdos(ErdosRenyi(n=sub.randint(1, 6), prob_attacks=0.35), sub)
        names = list(af.args)
        hits = [frozenset(c) for r in range(len(names) + 1)
                for c in itertools.combinations(names, r)
                if verify(Semantics.GR, af, frozenset(c))]
        assert len(hits) == 1


def test_stable_implies_semi_stable_and_stage():
    rng = SeededRng(29)
    checked = 0
    for i in range(40):
        sub = rng.split(f"af{i}")
        af = gen_erdos(ErdosRenyi(n=sub.randint(2, 7), prob_attacks=0.3), sub)
        for s in oracle_enumerate(Semantics.ST, af):
            checked += 1
            assert verify(Semantics.SST, af, s)
            assert verify(Semantics.STG, af, s)
            assert verify(Semantics.PR, af, s)
    assert checked > 10
