"""Shared test helpers, including an independent brute-force reference for
Hurwitz counts (full class product, orbit dedup under all of S_d)."""
from __future__ import annotations

import itertools

from purecycle.hurwitz import RamificationType
from purecycle.perm import (
    all_of_type,
    compose_all,
    conjugate,
    cycle_lengths,
    from_cycles,
    inverse,
)


def _transitive(perms, degree) -> bool:
    reach = {0}
    queue = [0]
    for a in queue:
        for g in perms:
            b = g[a]
            if b not in reach:
                reach.add(b)
                queue.append(b)
    return len(reach) == degree


def reference_hurwitz_count(t: RamificationType) -> int:
    """Independent oracle: iterate the full product of classes 2..r (solving
    the first entry), then partition survivors into conjugation orbits under
    S_d generated by a transposition and a full cycle.  No anchoring, no
    centralizer bookkeeping; usable for small degrees only.
    """
    d = t.degree
    survivors = set()
    for combo in itertools.product(*(list(all_of_type(c)) for c in t.classes[1:])):
        g1 = inverse(compose_all(combo, d))
        if cycle_lengths(g1) != t.classes[0].lengths:
            continue
        tup = (g1,) + combo
        if _transitive(tup, d):
            survivors.add(tup)
    gens = [from_cycles(d, [[0, 1]]), tuple(list(range(1, d)) + [0])]
    count = 0
    remaining = set(survivors)
    while remaining:
        seed = remaining.pop()
        count += 1
        orbit = {seed}
        queue = [seed]
        for tup in queue:
            for s in gens:
                image = tuple(conjugate(s, g) for g in tup)
                if image not in orbit:
                    orbit.add(image)
                    queue.append(image)
        remaining -= orbit
    return count
