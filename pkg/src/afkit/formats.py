"""Instance file formats: APX (fact-style) and TGF (trivial graph format).

APX files hold ``arg(<id>).`` and ``att(<id>,<id>).`` lines; TGF files hold
one node id per line, a ``#`` separator, then ``src dst`` edge lines.
Identifiers are nonempty strings over letters, digits, and underscore.
Readers accept LF or CRLF and ignore blank lines; writers emit LF and sort
attacks for byte-stable output.
"""

from __future__ import annotations

import re
from typing import Tuple

from .core import ArgumentationFramework
from .errors import FormatError

FORMATS = ("apx", "tgf")

_ID = r"[A-Za-z0-9_]+"
_ARG_RE = re.compile(rf"^arg\(\s*({_ID})\s*\)\.$")
_ATT_RE = re.compile(rf"^att\(\s*({_ID})\s*,\s*({_ID})\s*\)\.$")
_ID_RE = re.compile(rf"^{_ID}$")


def parse_apx(text: str) -> ArgumentationFramework:
    """Parse APX text; attack endpoints must be declared arguments."""
    args: list[str] = []
    seen = set()
    attacks: list[Tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        m = _ARG_RE.match(line)
        if m:
            name = m.group(1)
            if name not in seen:
                seen.add(name)
                args.append(name)
            continue
        m = _ATT_RE.match(line)
        if m:
            src, dst = m.group(1), m.group(2)
            if src not in seen:
                raise FormatError(f"attack endpoint {src!r} is not a declared argument",
                                  line=lineno)
            if dst not in seen:
                raise FormatError(f"attack endpoint {dst!r} is not a declared argument",
                                  line=lineno)
            attacks.append((src, dst))
            continue
        raise FormatError(f"unrecognised APX line: {raw!r}", line=lineno)
    return ArgumentationFramework(args, attacks)


def write_apx(af: ArgumentationFramework) -> str:
    lines = [f"arg({a})." for a in af.args]
    lines += [f"att({s},{t})." for s, t in sorted(af.attacks)]
    return "\n".join(lines) + ("\n" if lines else "")


def parse_tgf(text: str) -> ArgumentationFramework:
    """Parse TGF text: node lines, one ``#`` separator, then edge lines."""
    args: list[str] = []
    seen = set()
    attacks: list[Tuple[str, str]] = []
    in_edges = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line == "#":
            if in_edges:
                raise FormatError("second '#' separator", line=lineno)
            in_edges = True
            continue
        if not in_edges:
            if not _ID_RE.match(line):
                raise FormatError(f"bad node id {raw!r}", line=lineno)
            if line not in seen:
                seen.add(line)
                args.append(line)
        else:
            parts = line.split()
            if len(parts) != 2 or not all(_ID_RE.match(p) for p in parts):
                raise FormatError(f"bad edge line {raw!r}", line=lineno)
            src, dst = parts
            if src not in seen or dst not in seen:
                raise FormatError(f"edge endpoint not declared: {raw!r}", line=lineno)
            attacks.append((src, dst))
    if not in_edges:
        raise FormatError("missing '#' separator between nodes and edges")
    return ArgumentationFramework(args, attacks)


def write_tgf(af: ArgumentationFramework) -> str:
    lines = list(af.args)
    lines.append("#")
    lines += [f"{s} {t}" for s, t in sorted(af.attacks)]
    return "\n".join(lines) + "\n"


def parse_framework(text: str, fmt: str) -> ArgumentationFramework:
    if fmt == "apx":
        return parse_apx(text)
    if fmt == "tgf":
        return parse_tgf(text)
    raise FormatError(f"unknown input format {fmt!r}")


def write_framework(af: ArgumentationFramework, fmt: str) -> str:
    if fmt == "apx":
        return write_apx(af)
    if fmt == "tgf":
        return write_tgf(af)
    raise FormatError(f"unknown input format {fmt!r}")


def load_framework(path, fmt: str | None = None) -> ArgumentationFramework:
    """Read an instance file; the format defaults to the file extension."""
    from pathlib import Path
    p = Path(path)
    if fmt is None:
        fmt = p.suffix.lstrip(".").lower()
    return parse_framework(p.read_text(encoding="utf-8"), fmt)
