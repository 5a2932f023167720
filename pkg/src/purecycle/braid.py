"""Braid action on 4-point factorizations and admissible-cover bookkeeping.

Degenerating the base by colliding the last two branch points splits a smooth
cover into two component covers glued over a node; the node monodromy is
rho = g3 g4.  For genus-0 pure-cycle types rho is a single cycle (possibly
trivial) or a pair of disjoint cycles, and the number of smoothings of an
admissible cover equals the length of the orbit of the braid operator

    Q3 . (g1, g2, g3, g4) = (g1 g2 g1 g2^-1 g1^-1, g1 g2 g1^-1, g3, g4)

on the corresponding factorization.  This module computes the orbits, the
degeneration data, and the closed-form taxonomy of admissible covers in
characteristic 0 (which node classes occur, with which counts/multiplicities).
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidTypeError
from .hurwitz import (
    HurwitzFactorization,
    RamificationType,
    canonical_form,
    enumerate_factorizations,
    hurwitz_formula_pure4,
)
from .perm import Perm, compose, cycle_lengths, inverse


@dataclass(frozen=True)
class NodeClass:
    """Cycle structure of the node monodromy: one cycle or a disjoint pair."""

    kind: str  # "single" | "pair"
    lengths: tuple[int, ...]

    def __post_init__(self):
        if self.kind == "single":
            if len(self.lengths) != 1 or self.lengths[0] < 1:
                raise InvalidTypeError(f"bad single-cycle node {self.lengths}")
        elif self.kind == "pair":
            if len(self.lengths) != 2:
                raise InvalidTypeError(f"bad two-cycle node {self.lengths}")
            object.__setattr__(self, "lengths", tuple(sorted(self.lengths)))
        else:
            raise InvalidTypeError(f"unknown node kind {self.kind!r}")

    @property
    def m(self) -> int:
        if self.kind != "single":
            raise InvalidTypeError("m is defined for single-cycle nodes")
        return self.lengths[0]

    def __str__(self) -> str:
        if self.kind == "single":
            return f"*{self.lengths[0]}"
        return f"*{self.lengths[0]}-{self.lengths[1]}"


def single_cycle_node(m: int) -> NodeClass:
    return NodeClass("single", (m,))


def two_cycle_node(e1: int, e2: int) -> NodeClass:
    return NodeClass("pair", (e1, e2))


@dataclass(frozen=True)
class AdmissibleCoverType:
    """One taxonomy row: node class, number of covers, smoothings per cover."""

    node: NodeClass
    count: int
    multiplicity: int

    @property
    def subtotal(self) -> int:
        return self.count * self.multiplicity


@dataclass(frozen=True)
class BraidOrbit:
    representative: HurwitzFactorization
    length: int


def braid_q3(f: HurwitzFactorization) -> HurwitzFactorization:
    """Apply Q3; the product g1 g2 and the entries g3, g4 are preserved."""
    if len(f.perms) != 4:
        raise InvalidTypeError("the braid operator acts on 4-point factorizations")
    g1, g2, g3, g4 = f.perms
    new_g1 = compose(g1, compose(g2, compose(g1, compose(inverse(g2), inverse(g1)))))
    new_g2 = compose(g1, compose(g2, inverse(g1)))
    return HurwitzFactorization(f.degree, (new_g1, new_g2, g3, g4))


def braid_orbits(
    t: RamificationType, max_degree: int | None = None
) -> list[BraidOrbit]:
    """Partition of the factorizations of t into Q3-orbits.

    Orbits are keyed on canonical forms, so the partition is independent of
    the representatives chosen; orbit lengths sum to the Hurwitz number.
    """
    if len(t.classes) != 4:
        raise InvalidTypeError("braid orbits are defined for 4-point types")
    reps = enumerate_factorizations(t, max_degree=max_degree)
    total = len(reps)
    seen: set[tuple[Perm, ...]] = set()
    orbits = []
    for f in reps:
        if f.perms in seen:
            continue
        length = 0
        g = f
        while True:
            length += 1
            if length > total:
                raise AssertionError("braid orbit exceeded the factorization count")
            seen.add(g.perms)
            g = canonical_form(braid_q3(g))
            if g.perms == f.perms:
                break
        orbits.append(BraidOrbit(representative=f, length=length))
    return orbits


def degenerate(
    f: HurwitzFactorization,
) -> tuple[tuple[Perm, Perm, Perm], tuple[Perm, Perm, Perm], NodeClass]:
    """Split into component covers over a node with monodromy rho = g3 g4.

    Returns (g1, g2, rho), (rho^-1, g3, g4) and the node class.  Both triples
    have product identity; they need not be transitive (component covers may
    be disconnected).  A rho that is neither a single cycle nor a pair of
    disjoint cycles violates the genus-0 pure-cycle degeneration dichotomy and
    is rejected.
    """
    if len(f.perms) != 4:
        raise InvalidTypeError("degeneration applies to 4-point factorizations")
    g1, g2, g3, g4 = f.perms
    rho = compose(g3, g4)
    lengths = cycle_lengths(rho)
    if len(lengths) == 0:
        node = single_cycle_node(1)  # unramified node
    elif len(lengths) == 1:
        node = single_cycle_node(lengths[0])
    elif len(lengths) == 2:
        node = two_cycle_node(*lengths)
    else:
        raise InvalidTypeError(
            f"node monodromy has cycle type {lengths}; expected one cycle or two"
        )
    return (g1, g2, rho), (inverse(rho), g3, g4), node


def admissible_enumerate_char0(
    d: int, e1: int, e2: int, e3: int, e4: int
) -> list[AdmissibleCoverType]:
    """Taxonomy of admissible covers of type (d; e1,e2,*,e3,e4), exponents
    sorted ascending.

    Single-cycle nodes *m: one cover for each m with
        e2-e1+1 <= m <= 2d+1-e3-e4   (if d+1 <= e2+e3)
        e4-e3+1 <= m <= 2d+1-e3-e4   (if d+1 >= e2+e3)
    and m = e2-e1+1 (mod 2), each of multiplicity m.  Two-cycle nodes
    *e1-e2: multiplicity 1, with
        e1(d+1-e1-e2)           covers if d+1 <= e2+e3,
        (e3+e4-d-1)(d+1-e4)     covers if d+1 >= e2+e3
    (no such node when e1+e2 > d).  Subtotals sum to the Hurwitz number.
    """
    es = (e1, e2, e3, e4)
    if tuple(sorted(es)) != es:
        raise InvalidTypeError("exponents must be sorted ascending")
    total = hurwitz_formula_pure4(d, es)  # validates the genus-0 condition

    lower_i = e2 - e1 + 1
    lower_ii = e4 - e3 + 1
    upper = 2 * d + 1 - e3 - e4
    if d + 1 == e2 + e3:
        assert lower_i == lower_ii, "boundary case must agree under both branches"
    lower = lower_i if d + 1 <= e2 + e3 else lower_ii
    assert lower <= upper and (upper - lower) % 2 == 0

    out = [
        AdmissibleCoverType(node=single_cycle_node(m), count=1, multiplicity=m)
        for m in range(lower, upper + 1, 2)
    ]
    if e1 + e2 <= d:
        count = (
            e1 * (d + 1 - e1 - e2)
            if d + 1 <= e2 + e3
            else (e3 + e4 - d - 1) * (d + 1 - e4)
        )
        assert count > 0
        out.append(
            AdmissibleCoverType(node=two_cycle_node(e1, e2), count=count, multiplicity=1)
        )
    assert sum(row.subtotal for row in out) == total
    return out
