"""Optimized task engine: labelling-style backtracking search.

Complete extensions are enumerated as three-valued labellings (IN / OUT /
UNDEC) with unit propagation over the labelling conditions: an argument is IN
exactly when all its attackers are OUT, OUT exactly when some attacker is IN,
and UNDEC otherwise (no IN attacker, at least one UNDEC attacker).  The
grounded fixed point is computed first and frozen into every search.

Preferred extensions are the set-maximal complete ones; semi-stable the
range-maximal complete ones (always preferred); stable labellings are searched
directly with UNDEC disabled; stage extensions are range-maximal among the
maximal conflict-free sets.  The ideal extension is the largest admissible
subset of the intersection of the preferred extensions, obtained by shrinking
that intersection to a fixed point of the defense check.

Answers match the enumeration-backed reference solver exactly, including the
canonical tie-break for SE (lexicographically least sorted member list).
"""

from __future__ import annotations

from typing import Callable, FrozenSet, Iterable, List, Optional, Tuple

from .core import (ArgumentationFramework, bits, defends, grounded_extension,
                   range_of)
from .errors import BudgetExceededError
from .tasks import (AllExtensions, Answer, OneExtension, Semantics, TaskSpec,
                    Triathlon, YesNo, canonical_extensions, sorted_members)

Extension = FrozenSet[str]

FREE, IN, OUT, UNDEC = 0, 1, 2, 3


class _Budget:
    """Optional node-expansion budget shared across the phases of one solve."""

    __slots__ = ("remaining",)

    def __init__(self, limit: Optional[int]):
        self.remaining = limit

    def tick(self, amount: int = 1) -> None:
        if self.remaining is None:
            return
        self.remaining -= amount
        if self.remaining < 0:
            raise BudgetExceededError("node-expansion budget exhausted")


class _LabellingSearch:
    """Backtracking search over complete (or stable) labellings of one AF."""

    def __init__(self, af: ArgumentationFramework, budget: _Budget):
        self.af = af
        self.n = len(af)
        self.attackers = af.attacker_indices()
        self.targets = af.target_indices()
        self.att_total = [len(a) for a in self.attackers]
        self.lab = [FREE] * self.n
        self.att_in = [0] * self.n
        self.att_out = [0] * self.n
        self.att_undec = [0] * self.n
        self.trail: List[int] = []
        self.budget = budget

    def _free_attackers(self, i: int) -> int:
        return (self.att_total[i] - self.att_in[i]
                - self.att_out[i] - self.att_undec[i])

    def assign(self, pairs: Iterable[Tuple[int, int]]) -> bool:
        """Apply assignments plus propagation; False on conflict.

        Every committed assignment lands on the trail; callers snapshot the
        trail length beforehand and undo back to it.
        """
        queue = list(pairs)
        lab = self.lab
        while queue:
            i, want = queue.pop()
            cur = lab[i]
            if cur != FREE:
                if cur == want:
                    continue
                return False
            if want == IN:
                if self.att_in[i] or self.att_undec[i]:
                    return False
            elif want == OUT:
                if self.att_in[i] == 0 and self._free_attackers(i) == 0:
                    return False
            else:  # UNDEC
                if self.att_in[i] or self.att_out[i] == self.att_total[i]:
                    return False
            lab[i] = want
            self.trail.append(i)
            targets = self.targets[i]
            # Counters first, checks second: undo_to always decrements the
            # full target list, so increments must never stop halfway.
            if want == IN:
                for y in targets:
                    self.att_in[y] += 1
                for z in self.attackers[i]:
                    if lab[z] == FREE:
                        queue.append((z, OUT))
                    elif lab[z] != OUT:
                        return False
                for y in targets:
                    if lab[y] == FREE:
                        queue.append((y, OUT))
                    elif lab[y] != OUT:
                        return False
            elif want == OUT:
                for y in targets:
                    self.att_out[y] += 1
                for y in targets:
                    if self.att_out[y] == self.att_total[y]:
                        if lab[y] == FREE:
                            queue.append((y, IN))
                        elif lab[y] != IN:
                            return False
                    elif (lab[y] == OUT and self.att_in[y] == 0
                          and self._free_attackers(y) == 0):
                        return False
            else:  # UNDEC
                for y in targets:
                    self.att_undec[y] += 1
                for y in targets:
                    if lab[y] == IN:
                        return False
                    if (lab[y] == OUT and self.att_in[y] == 0
                            and self._free_attackers(y) == 0):
                        return False
        return True

    def undo_to(self, mark: int) -> None:
        lab = self.lab
        while len(self.trail) > mark:
            i = self.trail.pop()
            was = lab[i]
            lab[i] = FREE
            if was == IN:
                for y in self.targets[i]:
                    self.att_in[y] -= 1
            elif was == OUT:
                for y in self.targets[i]:
                    self.att_out[y] -= 1
            else:
                for y in self.targets[i]:
                    self.att_undec[y] -= 1

    def _first_free(self, start: int) -> int:
        lab = self.lab
        for i in range(start, self.n):
            if lab[i] == FREE:
                return i
        return -1

    def _valid_leaf(self) -> bool:
        lab = self.lab
        for i in range(self.n):
            atts = self.attackers[i]
            if lab[i] == IN:
                if any(lab[z] != OUT for z in atts):
                    return False
            elif lab[i] == OUT:
                if not any(lab[z] == IN for z in atts):
                    return False
            else:
                if any(lab[z] == IN for z in atts):
                    return False
                if not any(lab[z] == UNDEC for z in atts):
                    return False
        return True

    def in_set(self) -> Extension:
        lab = self.lab
        return self.af.names_of(i for i in range(self.n) if lab[i] == IN)

    def run(self, on_solution: Callable[[Extension], bool],
            forced: Iterable[Tuple[int, int]] = (),
            allow_undec: bool = True) -> None:
        """Enumerate labellings; ``on_solution`` returns False to stop early.

        The grounded labelling is installed first: its IN set is part of every
        complete labelling, so conflicts with ``forced`` prune immediately.
        """
        seed = [(self.af.index_of(a), IN) for a in grounded_extension(self.af)]
        if not self.assign(list(forced) + seed):
            return
        labels = (IN, OUT, UNDEC) if allow_undec else (IN, OUT)
        first = self._first_free(0)
        if first < 0:
            if self._valid_leaf():
                on_solution(self.in_set())
            return
        # Iterative DFS: frame = [variable, next label index, trail mark].
        frames: List[List[int]] = [[first, 0, len(self.trail)]]
        while frames:
            frame = frames[-1]
            var, li, mark = frame
            self.undo_to(mark)
            if li == len(labels):
                frames.pop()
                continue
            frame[1] += 1
            self.budget.tick()
            if not self.assign([(var, labels[li])]):
                continue
            nxt = self._first_free(var + 1)
            if nxt < 0:
                if self._valid_leaf() and not on_solution(self.in_set()):
                    return
                continue
            frames.append([nxt, 0, len(self.trail)])


def _enumerate_labellings(af: ArgumentationFramework, budget: _Budget,
                          forced: Iterable[Tuple[str, int]] = (),
                          allow_undec: bool = True,
                          stop_after: Optional[int] = None) -> List[Extension]:
    found: List[Extension] = []

    def collect(ext: Extension) -> bool:
        found.append(ext)
        return stop_after is None or len(found) < stop_after

    search = _LabellingSearch(af, budget)
    idx_forced = [(af.index_of(a), l) for a, l in forced]
    search.run(collect, idx_forced, allow_undec)
    return found


def _maximal_sets(sets: List[Extension]) -> List[Extension]:
    return [s for s in sets
            if not any(s is not o and s < o for o in sets)]


def complete_extensions(af: ArgumentationFramework,
                        budget: Optional[_Budget] = None) -> List[Extension]:
    return _enumerate_labellings(af, budget or _Budget(None))


def stable_extensions(af: ArgumentationFramework,
                      budget: Optional[_Budget] = None) -> List[Extension]:
    return _enumerate_labellings(af, budget or _Budget(None), allow_undec=False)


def preferred_extensions(af: ArgumentationFramework,
                         budget: Optional[_Budget] = None) -> List[Extension]:
    return _maximal_sets(complete_extensions(af, budget))


def semi_stable_extensions(af: ArgumentationFramework,
                           budget: Optional[_Budget] = None) -> List[Extension]:
    # Semi-stable extensions are preferred: growing a complete set strictly
    # grows its range, so a range-maximal complete set is set-maximal too.
    prefs = preferred_extensions(af, budget)
    ranges = [range_of(af, p) for p in prefs]
    return [p for p, r in zip(prefs, ranges)
            if not any(r is not o and r < o for o in ranges)]


def stage_extensions(af: ArgumentationFramework,
                     budget: Optional[_Budget] = None) -> List[Extension]:
    budget = budget or _Budget(None)
    candidates = _maximal_conflict_free(af, budget)
    ranges = [range_of(af, c) for c in candidates]
    return [c for c, r in zip(candidates, ranges)
            if not any(r is not o and r < o for o in ranges)]


def _maximal_conflict_free(af: ArgumentationFramework,
                           budget: _Budget) -> List[Extension]:
    """Maximal conflict-free sets: maximal independent sets of the conflict
    graph over the non-self-attacking arguments (Bron-Kerbosch with pivoting
    on the implicit complement graph)."""
    n = len(af)
    am = af.attacker_masks()
    tm = af.target_masks()
    universe = 0
    for i in range(n):
        if not (tm[i] >> i) & 1:
            universe |= 1 << i
    conflict = [0] * n
    for i in bits(universe):
        conflict[i] = (am[i] | tm[i]) & universe & ~(1 << i)

    out: List[Extension] = []

    def neighbours(v: int, pool: int) -> int:
        return pool & ~conflict[v] & ~(1 << v)

    # Frames: [R, P, X, candidate list, next index]
    def expand(r: int, p: int, x: int) -> None:
        stack = [(r, p, x)]
        while stack:
            r, p, x = stack.pop()
            budget.tick()
            if p == 0 and x == 0:
                out.append(af.set_of(r))
                continue
            pivot = -1
            best = -1
            for u in bits(p | x):
                score = bin(p & ~conflict[u]).count("1")
                if score > best:
                    best, pivot = score, u
            ext = p & ~(~conflict[pivot] & ~(1 << pivot))
            for v in bits(ext):
                nv = neighbours(v, (1 << n) - 1)
                stack.append((r | (1 << v), p & nv, x & nv))
                p &= ~(1 << v)
                x |= 1 << v

    expand(0, universe, 0)
    return sorted(out, key=sorted_members)


def ideal_extension(af: ArgumentationFramework,
                    budget: Optional[_Budget] = None) -> Extension:
    prefs = preferred_extensions(af, budget)
    base: set = set(prefs[0]) if prefs else set()
    for p in prefs[1:]:
        base &= p
    # The intersection of the preferred extensions is conflict-free, and its
    # admissible subsets are closed under union, so shrinking to the defended
    # core yields the unique maximal admissible subset.
    while True:
        kept = {a for a in base if defends(af, base, a)}
        if kept == base:
            return frozenset(base)
        base = kept


def _exists_labelling(af: ArgumentationFramework, budget: _Budget,
                      forced: Iterable[Tuple[str, int]],
                      allow_undec: bool) -> bool:
    return bool(_enumerate_labellings(af, budget, forced, allow_undec,
                                      stop_after=1))


def enumerate_extensions(sem: Semantics, af: ArgumentationFramework,
                         budget: Optional[int] = None) -> Tuple[Extension, ...]:
    """All extensions of ``af`` under ``sem``, canonically ordered."""
    b = _Budget(budget)
    sem = Semantics(sem)
    if sem == Semantics.CO:
        found = complete_extensions(af, b)
    elif sem == Semantics.PR:
        found = preferred_extensions(af, b)
    elif sem == Semantics.ST:
        found = stable_extensions(af, b)
    elif sem == Semantics.SST:
        found = semi_stable_extensions(af, b)
    elif sem == Semantics.STG:
        found = stage_extensions(af, b)
    elif sem == Semantics.GR:
        found = [grounded_extension(af)]
    else:
        found = [ideal_extension(af, b)]
    return canonical_extensions(found)


def solve_optimized(task: TaskSpec, af: ArgumentationFramework,
                    budget: Optional[int] = None) -> Answer:
    """Solve any catalog task with the search engine.

    Same answer contract as the enumeration-backed reference solver; raises
    BudgetExceededError when the optional node budget runs out.
    """
    b = _Budget(budget)
    if task.problem == "D3":
        return d3(af, budget)
    sem = task.semantics
    if task.query is not None:
        af.index_of(task.query)

    if task.problem == "DC":
        return YesNo(_credulous(af, sem, task.query, b))
    if task.problem == "DS":
        return YesNo(_skeptical(af, sem, task.query, b))
    if task.problem == "SE":
        if sem == Semantics.GR:
            return OneExtension(grounded_extension(af))
        if sem == Semantics.ID:
            return OneExtension(ideal_extension(af, b))
        extensions = enumerate_extensions(sem, af, budget)
        if not extensions:
            return OneExtension(None)
        return OneExtension(min(extensions, key=sorted_members))
    # EE
    return AllExtensions(enumerate_extensions(sem, af, budget))


def _credulous(af: ArgumentationFramework, sem: Semantics, query: str,
               b: _Budget) -> bool:
    if sem in (Semantics.CO, Semantics.PR):
        # Credulous acceptance under PR coincides with CO: any admissible set
        # extends to a preferred, hence complete, one.
        return _exists_labelling(af, b, [(query, IN)], allow_undec=True)
    if sem == Semantics.ST:
        return _exists_labelling(af, b, [(query, IN)], allow_undec=False)
    if sem == Semantics.GR:
        return query in grounded_extension(af)
    if sem == Semantics.ID:
        return query in ideal_extension(af, b)
    if sem == Semantics.SST:
        return any(query in e for e in semi_stable_extensions(af, b))
    return any(query in e for e in stage_extensions(af, b))


def _skeptical(af: ArgumentationFramework, sem: Semantics, query: str,
               b: _Budget) -> bool:
    if sem == Semantics.CO:
        # Skeptical acceptance under CO coincides with membership in the
        # grounded extension, the least complete one.
        return query in grounded_extension(af)
    if sem == Semantics.ST:
        # Vacuously yes when no stable extension exists.
        return not _exists_labelling(af, b, [(query, OUT)], allow_undec=False)
    if sem == Semantics.PR:
        return all(query in e for e in preferred_extensions(af, b))
    if sem == Semantics.SST:
        return all(query in e for e in semi_stable_extensions(af, b))
    return all(query in e for e in stage_extensions(af, b))


def d3(af: ArgumentationFramework, budget: Optional[int] = None) -> Triathlon:
    """Grounded, stable, and preferred enumerations of one framework.

    The grounded extension doubles as the search seed for the other two
    enumerations, so it is effectively computed once.
    """
    b = _Budget(budget)
    return Triathlon.of([grounded_extension(af)],
                        stable_extensions(af, b),
                        preferred_extensions(af, b))


__all__ = ["complete_extensions", "stable_extensions", "preferred_extensions",
           "semi_stable_extensions", "stage_extensions", "ideal_extension",
           "enumerate_extensions", "solve_optimized", "d3"]
