"""Finite permutation group analysis: order, transitivity, cycle-type census.

The workhorse is a deterministic Schreier-Sims stabilizer chain (base points
chosen smallest-first, BFS orbits, generators processed in list order), so
repeated runs produce identical data.  An exhaustive closure is provided as an
independent oracle for small groups.

Generator data files are plain text: a ``degree: n`` header, then one
permutation per line in 1-based disjoint-cycle notation.  Lines starting with
``#`` are comments.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Sequence

from .errors import BoundExceededError, InvalidTypeError
from .perm import (
    CycleType,
    Perm,
    compose,
    cycle_lengths,
    identity,
    inverse,
    parse_cycles,
)

DEFAULT_ORDER_CAP = 10**8

# Census sizes above this switch to the numpy batch path.
_CENSUS_BATCH_THRESHOLD = 10**5
_CENSUS_CHUNK = 5 * 10**5


@dataclass(frozen=True)
class GroupReport:
    degree: int
    order: int
    is_transitive: bool
    classification: str  # "symmetric" | "alternating" | "other"

    def __post_init__(self):
        full = math.factorial(self.degree)
        if self.classification == "symmetric" and self.order != full:
            raise InvalidTypeError("symmetric classification requires order d!")
        if self.classification == "alternating" and 2 * self.order != full:
            raise InvalidTypeError("alternating classification requires order d!/2")


class StabilizerChain:
    """Deterministic base-and-strong-generators chain for <gens> in S_degree."""

    def __init__(self, generators: Sequence[Perm], degree: int):
        if not generators:
            raise InvalidTypeError("at least one generator required")
        if any(len(g) != degree for g in generators):
            raise InvalidTypeError("generators must share the chain degree")
        self.degree = degree
        self.base: list[int] = []
        self._level_gens: list[list[Perm]] = []
        self.transversals: list[dict[int, Perm]] = []
        self._build([g for g in generators if g != identity(degree)])

    # -- construction ------------------------------------------------------

    def _first_moved(self, g: Perm) -> int:
        return next(x for x in range(self.degree) if g[x] != x)

    def _append_base_point(self, g: Perm) -> None:
        self.base.append(self._first_moved(g))
        self._level_gens.append([])
        self.transversals.append({})

    def _rebuild_transversal(self, i: int) -> None:
        b = self.base[i]
        trans = {b: identity(self.degree)}
        queue = [b]
        for a in queue:
            ua = trans[a]
            for s in self._level_gens[i]:
                c = s[a]
                if c not in trans:
                    trans[c] = compose(s, ua)
                    queue.append(c)
        self.transversals[i] = trans

    def _strip(self, g: Perm, start: int) -> tuple[Perm, int]:
        """Sift g through levels >= start; returns (residue, level reached)."""
        for j in range(start, len(self.base)):
            x = g[self.base[j]]
            u = self.transversals[j].get(x)
            if u is None:
                return g, j
            g = compose(inverse(u), g)
        return g, len(self.base)

    def _build(self, gens: list[Perm]) -> None:
        ident = identity(self.degree)
        if not gens:
            self.base = []
            return
        for g in gens:
            if all(g[b] == b for b in self.base):
                self._append_base_point(g)
        for i in range(len(self.base)):
            prefix = self.base[:i]
            self._level_gens[i] = [
                g for g in gens if all(g[b] == b for b in prefix)
            ]
            self._rebuild_transversal(i)

        i = len(self.base) - 1
        while i >= 0:
            violation = False
            trans = self.transversals[i]
            orbit = list(trans)
            for b in orbit:
                ub = trans[b]
                for s in self._level_gens[i]:
                    sb = s[b]
                    schreier = compose(inverse(trans[sb]), compose(s, ub))
                    if schreier == ident:
                        continue
                    residue, j = self._strip(schreier, i + 1)
                    if residue == ident:
                        continue
                    if j == len(self.base):
                        self._append_base_point(residue)
                    for level in range(i + 1, j + 1):
                        self._level_gens[level].append(residue)
                        self._rebuild_transversal(level)
                    i = j
                    violation = True
                    break
                if violation:
                    break
            if not violation:
                i -= 1

    # -- queries -----------------------------------------------------------

    def order(self) -> int:
        n = 1
        for trans in self.transversals:
            n *= len(trans)
        return n

    def __contains__(self, g: Perm) -> bool:
        if len(g) != self.degree:
            return False
        residue, _ = self._strip(g, 0)
        return residue == identity(self.degree)

    def elements(self) -> Iterator[Perm]:
        """Every group element exactly once, via transversal products."""
        ident = identity(self.degree)

        def rec(level: int, prefix: Perm) -> Iterator[Perm]:
            if level == len(self.base):
                yield prefix
                return
            trans = self.transversals[level]
            for pt in sorted(trans):
                yield from rec(level + 1, compose(prefix, trans[pt]))

        yield from rec(0, ident)


def orbit_of(point: int, generators: Sequence[Perm]) -> set[int]:
    orbit = {point}
    queue = [point]
    for a in queue:
        for g in generators:
            b = g[a]
            if b not in orbit:
                orbit.add(b)
                queue.append(b)
    return orbit


def is_transitive(generators: Sequence[Perm], degree: int) -> bool:
    return len(orbit_of(0, generators)) == degree


def group_analyze(
    generators: Sequence[Perm], order_cap: int = DEFAULT_ORDER_CAP
) -> GroupReport:
    """Exact order, transitivity and symmetric/alternating classification."""
    if not generators:
        raise InvalidTypeError("at least one generator required")
    degree = len(generators[0])
    chain = StabilizerChain(generators, degree)
    order = chain.order()
    if order > order_cap:
        raise BoundExceededError(f"group order {order} exceeds cap {order_cap}")
    full = math.factorial(degree)
    if order == full:
        classification = "symmetric"
    elif 2 * order == full:
        classification = "alternating"
    else:
        classification = "other"
    return GroupReport(
        degree=degree,
        order=order,
        is_transitive=is_transitive(generators, degree),
        classification=classification,
    )


def element_closure(generators: Sequence[Perm], cap: int) -> set[Perm]:
    """Exhaustive closure under multiplication; oracle for small orders."""
    degree = len(generators[0])
    seen = {identity(degree)}
    frontier = [identity(degree)]
    for g in frontier:
        for s in generators:
            h = compose(s, g)
            if h not in seen:
                if len(seen) >= cap:
                    raise BoundExceededError(f"closure exceeded cap {cap}")
                seen.add(h)
                frontier.append(h)
    return seen


def cycle_type_census(
    generators: Sequence[Perm], cap: int
) -> Counter[CycleType]:
    """Exact census of cycle types over all group elements.

    Requires the group order to be at most cap (full enumeration).
    """
    degree = len(generators[0])
    chain = StabilizerChain(generators, degree)
    order = chain.order()
    if order > cap:
        raise BoundExceededError(f"group order {order} exceeds census cap {cap}")
    if order > _CENSUS_BATCH_THRESHOLD:
        counts = _census_batched(chain)
    else:
        counts = Counter(cycle_lengths(g) for g in chain.elements())
    return Counter(
        {CycleType(degree, lengths): n for lengths, n in counts.items()}
    )


def _census_batched(chain: StabilizerChain) -> Counter[tuple[int, ...]]:
    """Census via numpy batches; same result as direct element iteration.

    Elements are built as outer-prefix x inner-suffix transversal products;
    cycle types are recovered from fixed-point counts of powers.
    """
    import numpy as np

    degree = chain.degree
    sizes = [len(t) for t in chain.transversals]
    split = len(sizes)
    suffix = 1
    while split > 0 and suffix * sizes[split - 1] <= _CENSUS_CHUNK:
        suffix *= sizes[split - 1]
        split -= 1

    # materialize all suffix products u_split ... u_last, bottom-up
    inner = np.arange(degree, dtype=np.int16)[None, :]
    for level in range(len(sizes) - 1, split - 1, -1):
        trans = chain.transversals[level]
        rows = [
            np.asarray(trans[pt], dtype=np.int16)[inner] for pt in sorted(trans)
        ]
        inner = np.concatenate(rows, axis=0)

    counts: Counter[tuple[int, ...]] = Counter()

    def count_chunk(batch: "np.ndarray") -> None:
        idx = np.arange(degree, dtype=np.int16)
        fixmat = np.empty((batch.shape[0], degree), dtype=np.int32)
        power = batch
        fixmat[:, 0] = (batch == idx).sum(axis=1)
        for k in range(2, degree + 1):
            power = np.take_along_axis(batch, power, axis=1)
            fixmat[:, k - 1] = (power == idx).sum(axis=1)
        uniq, cnt = np.unique(fixmat, axis=0, return_counts=True)
        for row, n in zip(uniq, cnt):
            counts[_lengths_from_fix_counts(row.tolist())] += int(n)

    def rec(level: int, prefix: Perm) -> None:
        if level == split:
            count_chunk(np.asarray(prefix, dtype=np.int16)[inner])
            return
        trans = chain.transversals[level]
        for pt in sorted(trans):
            rec(level + 1, compose(prefix, trans[pt]))

    rec(0, identity(degree))
    return counts


def _lengths_from_fix_counts(fix: list[int]) -> tuple[int, ...]:
    """Cycle lengths >= 2 from (fix(g^1), ..., fix(g^d)).

    fix(g^k) = sum over l | k of l * n_l, solved for n_l by increasing l.
    """
    degree = len(fix)
    n = [0] * (degree + 1)
    lengths = []
    for l in range(1, degree + 1):
        total = sum(k * n[k] for k in range(1, l) if l % k == 0)
        rem = fix[l - 1] - total
        assert rem % l == 0, "inconsistent fixed-point counts"
        n[l] = rem // l
        if l >= 2:
            lengths.extend([l] * n[l])
    return tuple(sorted(lengths, reverse=True))


def load_generators(path: str | Path) -> tuple[int, list[Perm]]:
    """Read a generator data file (``degree: n`` header, 1-based cycles)."""
    degree = None
    gens: list[Perm] = []
    for raw in Path(path).read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.lower().startswith("degree:"):
            if degree is not None:
                raise InvalidTypeError("duplicate degree header")
            degree = int(line.split(":", 1)[1])
            continue
        if degree is None:
            raise InvalidTypeError("degree header must precede generators")
        gens.append(parse_cycles(degree, line))
    if degree is None or not gens:
        raise InvalidTypeError(f"no generators found in {path}")
    return degree, gens
