"""Exhaustive ground-truth enumeration over all argument subsets.

This is the reference backend: every semantics is evaluated by scanning the
full power set of arguments and applying the defining conditions directly.
It is exact and independent of the optimized search engine, and is capped
(default 20 arguments) so a mistaken call cannot scan 2^1000 subsets.
"""

from __future__ import annotations

from typing import List, Tuple

from .core import (ArgumentationFramework, admissible_mask, attacked_mask,
                   complete_mask, conflict_free_mask, grounded_extension)
from .errors import OracleSizeError
from .tasks import (AllExtensions, Answer, OneExtension, Semantics, TaskSpec,
                    Triathlon, YesNo, canonical_extensions, sorted_members)

DEFAULT_SIZE_CAP = 20


def _scan_masks(af: ArgumentationFramework, predicate) -> List[int]:
    n = len(af)
    return [m for m in range(1 << n) if predicate(af, m)]


def _complete_masks(af: ArgumentationFramework) -> List[int]:
    return _scan_masks(af, complete_mask)


def _maximal(items: List[int]) -> List[int]:
    """Masks with no proper superset in ``items``."""
    out = []
    for m in items:
        if not any(m != o and m & o == m for o in items):
            out.append(m)
    return out


def _range_maximal(candidates: List[int], ranges: List[int]) -> List[int]:
    out = []
    for i, m in enumerate(candidates):
        r = ranges[i]
        if not any(r != o and r & o == r for o in ranges):
            out.append(m)
    return out


def _maximal_conflict_free_masks(af: ArgumentationFramework) -> List[int]:
    n = len(af)
    tm = af.target_masks()
    am = af.attacker_masks()
    out = []
    for m in range(1 << n):
        if not conflict_free_mask(af, m):
            continue
        # Maximal iff no outside argument can be added conflict-free.
        maximal = True
        for i in range(n):
            if (m >> i) & 1:
                continue
            if tm[i] & (m | (1 << i)) == 0 and am[i] & m == 0:
                maximal = False
                break
        if maximal:
            out.append(m)
    return out


def oracle_enumerate(sem: Semantics, af: ArgumentationFramework,
                     size_cap: int = DEFAULT_SIZE_CAP) -> Tuple:
    """Exact extension set of ``af`` under ``sem``, in canonical order."""
    n = len(af)
    if n > size_cap:
        raise OracleSizeError(
            f"{n} arguments exceed the oracle size cap of {size_cap}")
    sem = Semantics(sem)
    full = (1 << n) - 1

    if sem == Semantics.CO:
        masks = _complete_masks(af)
    elif sem == Semantics.PR:
        masks = _maximal(_complete_masks(af))
    elif sem == Semantics.ST:
        masks = [m for m in _complete_masks(af)
                 if m | attacked_mask(af, m) == full]
    elif sem == Semantics.GR:
        completes = _complete_masks(af)
        masks = [m for m in completes
                 if not any(m != o and m & o == o for o in completes)]
        if len(masks) != 1:
            raise AssertionError("grounded extension must be unique")
    elif sem == Semantics.SST:
        completes = _complete_masks(af)
        ranges = [m | attacked_mask(af, m) for m in completes]
        masks = _range_maximal(completes, ranges)
    elif sem == Semantics.STG:
        # Any conflict-free set extends to a maximal one whose range contains
        # its own, so range-maximality over maximal conflict-free sets decides
        # range-maximality over all conflict-free sets; and a range-maximal
        # set is itself maximal (growing a conflict-free set strictly grows
        # its range).  The scan below still visits every subset.
        candidates = _maximal_conflict_free_masks(af)
        ranges = [m | attacked_mask(af, m) for m in candidates]
        masks = _range_maximal(candidates, ranges)
    elif sem == Semantics.ID:
        preferred = _maximal(_complete_masks(af))
        base = full
        for m in preferred:
            base &= m
        # Admissible subsets of the preferred intersection are conflict-free
        # and closed under union, so their union is the unique maximal one.
        union = 0
        for m in range(1 << n):
            if m & ~base == 0 and admissible_mask(af, m):
                union |= m
        if not admissible_mask(af, union):
            raise AssertionError("ideal candidate must be admissible")
        masks = [union]
    else:  # pragma: no cover
        raise ValueError(f"unhandled semantics {sem}")

    return canonical_extensions(af.set_of(m) for m in masks)


def solve(task: TaskSpec, af: ArgumentationFramework,
          size_cap: int = DEFAULT_SIZE_CAP) -> Answer:
    """Reference task solver, backed entirely by exhaustive enumeration.

    DC holds iff the query is in some extension, DS iff it is in all of them
    (vacuously yes for ST when no stable extension exists).  SE returns the
    extension whose sorted member list is lexicographically least, or the
    distinguished "no extension" value.
    """
    if task.problem == "D3":
        return Triathlon.of(oracle_enumerate(Semantics.GR, af, size_cap),
                            oracle_enumerate(Semantics.ST, af, size_cap),
                            oracle_enumerate(Semantics.PR, af, size_cap))
    extensions = oracle_enumerate(task.semantics, af, size_cap)
    if task.problem == "EE":
        return AllExtensions(extensions)
    if task.problem == "SE":
        if not extensions:
            return OneExtension(None)
        return OneExtension(min(extensions, key=sorted_members))
    query = task.query
    af.index_of(query)  # unknown-argument check
    if task.problem == "DC":
        return YesNo(any(query in ext for ext in extensions))
    if task.problem == "DS":
        return YesNo(all(query in ext for ext in extensions))
    raise AssertionError(f"unhandled problem {task.problem}")  # pragma: no cover


def conflict_free_sets(af: ArgumentationFramework,
                       size_cap: int = DEFAULT_SIZE_CAP) -> Tuple:
    """All conflict-free sets, in canonical order (exhaustive scan)."""
    if len(af) > size_cap:
        raise OracleSizeError(
            f"{len(af)} arguments exceed the oracle size cap of {size_cap}")
    masks = _scan_masks(af, conflict_free_mask)
    return canonical_extensions(af.set_of(m) for m in masks)


def admissible_sets(af: ArgumentationFramework,
                    size_cap: int = DEFAULT_SIZE_CAP) -> Tuple:
    """All admissible sets, in canonical order (exhaustive scan)."""
    if len(af) > size_cap:
        raise OracleSizeError(
            f"{len(af)} arguments exceed the oracle size cap of {size_cap}")
    masks = _scan_masks(af, admissible_mask)
    return canonical_extensions(af.set_of(m) for m in masks)


__all__ = ["DEFAULT_SIZE_CAP", "oracle_enumerate", "solve",
           "conflict_free_sets", "admissible_sets", "grounded_extension"]
