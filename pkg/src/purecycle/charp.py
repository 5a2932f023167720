"""Characteristic-p invariants: tail conductors, lift counts, bad reduction.

For a degree-p cover with bad reduction, each non-p-cycle branch class C
contributes a two-point tail cover with wild ramification index p*m and
conductor h, where

    single cycle e:      h = (p-e)/gcd(p-1, e-1),    m = (p-1)/gcd(p-1, e-1)
    pair e1-e2:          h = (p+1-e1-e2)/gcd(p-1, e1+e2-2),
                         m = (p-1)/gcd(p-1, e1+e2-2)

and sigma = h/m.  These satisfy m | p-1, h < m, gcd(h, m) = 1, and the
signature identity sum(sigma_i) = r-2 over the branch classes.

The number of characteristic-0 lifts of a fixed degenerate cover is
(p-1)/n' * prod h_i/|Aut0_i|; comparing the type of interest with the
modified type (p; e1-e2, p+2-e1-e2, p), whose covers all have bad reduction,
eliminates the unknown tail data and yields the bad-reduction counts.  When
e1+e2 and e3 are both even the comparison leaves a factor delta in {1, 2};
such counts are reported as exact intervals, never collapsed to a guess.

Everything here is exact integer/rational arithmetic; no floats.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvalidTypeError
from .hurwitz import hurwitz_formula_badtype, hurwitz_formula_pure4, is_prime
from .perm import CycleType


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise InvalidTypeError(f"{p} is not prime")


@dataclass(frozen=True)
class TailInvariants:
    """Conductor h and prime-to-p inertia part m of a primitive tail cover."""

    p: int
    tail_class: tuple[int, ...]  # (e,) or (e1, e2)
    h: int
    m: int

    @property
    def sigma(self) -> Fraction:
        return Fraction(self.h, self.m)


@dataclass(frozen=True)
class AutOrders:
    """Automorphism orders of a single-cycle tail cover."""

    full: int
    fixing: int  # subgroup fixing the wild ramification point

    def __post_init__(self):
        if self.full % self.fixing:
            raise InvalidTypeError("point-fixing automorphisms must divide the full order")


@dataclass(frozen=True)
class ReductionCount:
    """Exact count, or a two-endpoint interval when a factor 2 is undetermined."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise InvalidTypeError(f"empty count interval [{self.lo}, {self.hi}]")

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> int:
        if not self.is_exact:
            raise InvalidTypeError(f"count {self} is ambiguous")
        return self.lo

    def __add__(self, other: "ReductionCount | int") -> "ReductionCount":
        if isinstance(other, int):
            other = exact(other)
        return ReductionCount(self.lo + other.lo, self.hi + other.hi)

    def __rsub__(self, total: int) -> "ReductionCount":
        """total - self, as the induced interval."""
        return ReductionCount(total - self.hi, total - self.lo)

    def __str__(self) -> str:
        if self.is_exact:
            return str(self.lo)
        return f"{{{self.lo}|{self.hi}}}"


def exact(n: int) -> ReductionCount:
    return ReductionCount(n, n)


def ambiguous(n: int, double: int) -> ReductionCount:
    return ReductionCount(n, double)


def tail_invariants(p: int, tail_class: Sequence[int] | CycleType) -> TailInvariants:
    """(h, m) for the tail of a single-cycle class e or a pair e1-e2.

    A p-cycle class has no tail and is rejected.
    """
    _require_prime(p)
    if isinstance(tail_class, CycleType):
        tail_class = tail_class.lengths
    lengths = tuple(sorted(tail_class))
    if len(lengths) == 1:
        (e,) = lengths
        if e == p:
            raise InvalidTypeError("a p-cycle class has no tail")
        if not 2 <= e <= p - 1:
            raise InvalidTypeError(f"need 2 <= e <= p-1, got e={e}")
        g = math.gcd(p - 1, e - 1)
        h, m = (p - e) // g, (p - 1) // g
    elif len(lengths) == 2:
        e1, e2 = lengths
        if not (2 <= e1 <= e2 <= p - 1 and e1 + e2 <= p):
            raise InvalidTypeError(f"pair ({e1},{e2}) out of range for p={p}")
        g = math.gcd(p - 1, e1 + e2 - 2)
        h, m = (p + 1 - e1 - e2) // g, (p - 1) // g
    else:
        raise InvalidTypeError("tail classes have one or two cycles")
    return TailInvariants(p=p, tail_class=lengths, h=h, m=m)


def tail_aut_orders(p: int, e: int) -> AutOrders:
    """Automorphism orders of the type-e tail: (p-e)/2 for odd e, p-e for even
    e; the point-fixing subgroup has order h_e in both cases."""
    _require_prime(p)
    if not 2 <= e <= p - 1:
        raise InvalidTypeError(f"need 2 <= e <= p-1, got e={e}")
    full = (p - e) // 2 if e % 2 else p - e
    return AutOrders(full=full, fixing=tail_invariants(p, (e,)).h)


def signature_check(p: int, classes: Sequence[Sequence[int]]) -> bool:
    """Does sum(sigma_i) equal r-2 exactly (sigma = 0 for p-cycle classes)?"""
    _require_prime(p)
    r = len(classes)
    if r not in (3, 4):
        raise InvalidTypeError("signature identity applies to r in {3, 4}")
    total = Fraction(0)
    for cl in classes:
        lengths = tuple(cl.lengths if isinstance(cl, CycleType) else cl)
        if lengths == (p,):
            continue
        total += tail_invariants(p, lengths).sigma
    return total == r - 2


def wewers_lift_count(
    p: int, n_prime: Fraction | int, tails: Sequence[tuple[int, int]]
) -> Fraction:
    """(p-1)/n' * prod h_i/|Aut0_i| over the tails, as an exact rational."""
    _require_prime(p)
    n_prime = Fraction(n_prime)
    if n_prime <= 0:
        raise InvalidTypeError("n' must be positive")
    value = Fraction(p - 1) / n_prime
    for h, aut0 in tails:
        if h <= 0 or aut0 <= 0:
            raise InvalidTypeError("tail invariants must be positive")
        value *= Fraction(h, aut0)
    return value


def n_prime_tau_star(
    p: int, e1: int, e2: int, n_tails: int, aut0: int, gamma: int
) -> Fraction:
    """n' for the modified type (p; e1-e2, p+2-e1-e2, p), in terms of the
    unknown number of e1-e2 tails and their point-fixing automorphism order:

        (1 + [e1 = e2]) * N * (p-1) / (gcd(p-1, e1+e2-2) * gamma * |Aut0|)
    """
    _require_prime(p)
    if min(n_tails, aut0, gamma) <= 0:
        raise InvalidTypeError("parameters must be positive")
    delta = 1 if e1 == e2 else 0
    return Fraction(
        (1 + delta) * n_tails * (p - 1),
        math.gcd(p - 1, e1 + e2 - 2) * gamma * aut0,
    )


_EXCLUDED_2CYCLE = (5, 2, 2, 4, 4)


def bad_count_2cycle(p: int, e1: int, e2: int, e3: int, e4: int) -> ReductionCount:
    """Covers of type (p; e1-e2, e3, e4) with bad reduction.

    p+1-e1-e2 (halved when e1 = e2), exactly, unless e1+e2 and e3 are both
    even, in which case an undetermined factor delta in {1, 2} remains and the
    interval {n, 2n} is returned.  The exceptional type (5; 2-2, 4, 4) is not
    covered.
    """
    _require_prime(p)
    if e1 > e2:
        raise InvalidTypeError("need e1 <= e2")
    if e1 + e2 + e3 + e4 != 2 * p + 2:
        raise InvalidTypeError("genus-0 condition violated")
    if e1 + e2 > p:
        raise InvalidTypeError("need e1+e2 <= p")
    if (p, e1, e2, *sorted((e3, e4))) == _EXCLUDED_2CYCLE:
        raise InvalidTypeError("(5; 2-2, 4, 4) is excluded from this count")
    n = p + 1 - e1 - e2
    if e1 == e2:
        assert n % 2 == 0  # p odd makes p+1-2*e1 even
        n //= 2
    if (e1 + e2) % 2 == 0 and e3 % 2 == 0:
        return ambiguous(n, 2 * n)
    return exact(n)


def p_hurwitz_3pt_badtype(p: int, e1: int, e2: int, e3: int, e4: int) -> ReductionCount:
    """p-Hurwitz number of (p; e1-e2, e3, e4): classical count minus the bad
    covers, propagating any ambiguity as an interval."""
    h = hurwitz_formula_badtype(p, e1, e2, e3, e4)
    return h - bad_count_2cycle(p, e1, e2, e3, e4)


def three_point_good_reduction(d: int, a: int, b: int, c: int, p: int) -> bool:
    """A genus-0 three-point cover of type (d; a,b,c) with a,b,c < p has good
    reduction iff its degree is strictly less than p."""
    _require_prime(p)
    if max(a, b, c) >= p:
        raise InvalidTypeError("all three indices must be < p")
    if a + b + c != 2 * d + 1 or max(a, b, c) > d or min(a, b, c) < 2:
        raise InvalidTypeError(f"({d}; {a},{b},{c}) is not a genus-0 triple")
    return d < p


def _validate_sorted_pure4(p: int, es: tuple[int, int, int, int]) -> None:
    _require_prime(p)
    e1, e2, e3, e4 = es
    if not (1 < e1 <= e2 <= e3 <= e4 < p):
        raise InvalidTypeError(f"need 1 < e1 <= e2 <= e3 <= e4 < p, got {es}")
    if sum(es) != 2 * p + 2:
        raise InvalidTypeError("genus-0 condition violated")


def admissible_reduction_census(
    p: int, e1: int, e2: int, e3: int, e4: int
) -> tuple[ReductionCount, ReductionCount]:
    """(good, bad) admissible covers of (p; e1,e2,*,e3,e4) in characteristic p,
    counted with multiplicity.

    Exactly one single-cycle node is bad, m = 2p+1-e3-e4, contributing its
    multiplicity m; two-cycle nodes contribute p+1-e1-e2 bad covers whether or
    not e1 = e2 (the gluing factor 2 cancels the halving), so bad = p unless
    e1+e2 and e3 are both even, when only {p, 2p+1-e3-e4 + 2(p+1-e1-e2)} can
    be asserted.  For the exceptional type (5; 2,2,4,4) the two-cycle part is
    unknown and only bracketed by [0, number of two-cycle covers].
    """
    es = (e1, e2, e3, e4)
    _validate_sorted_pure4(p, es)
    h = hurwitz_formula_pure4(p, es)
    single_bad = 2 * p + 1 - e3 - e4
    if (p, *es) == _EXCLUDED_2CYCLE:
        pair_total = e1 * (p + 1 - e1 - e2) if p + 1 <= e2 + e3 else (
            (e3 + e4 - p - 1) * (p + 1 - e4)
        )
        pair_bad = ReductionCount(0, min(2 * (p + 1 - e1 - e2), pair_total))
    elif (e1 + e2) % 2 == 0 and e3 % 2 == 0:
        pair_bad = ambiguous(p + 1 - e1 - e2, 2 * (p + 1 - e1 - e2))
    else:
        pair_bad = exact(p + 1 - e1 - e2)
    bad = pair_bad + single_bad
    assert bad.hi < 2 * p
    if bad.is_exact:
        assert bad.value == p
    good = h - bad
    assert good.lo >= h - 2 * p
    return good, bad


def single_cycle_node_bad_general(
    d: int, p: int, e1: int, e2: int, e3: int, e4: int
) -> int:
    """Single-cycle-node admissible covers of (d; e1,e2,*,e3,e4), d possibly
    different from p, with bad reduction (counted with multiplicity).

    (d-p+1)(d+p+1-e3-e4) when d+1 >= e2+e3 or d+1-e1 < p; otherwise every
    single-cycle-node admissible cover is bad and the full mass is returned.
    """
    _require_prime(p)
    es = (e1, e2, e3, e4)
    if tuple(sorted(es)) != es or not (1 < e1 and e4 < p):
        raise InvalidTypeError(f"need 1 < e1 <= e2 <= e3 <= e4 < p, got {es}")
    if sum(es) != 2 * d + 2:
        raise InvalidTypeError("genus-0 condition violated")
    if d < p:
        return 0  # all component degrees stay below p
    if d + 1 >= e2 + e3 or d + 1 - e1 < p:
        return (d - p + 1) * (d + p + 1 - e3 - e4)
    lower = e2 - e1 + 1 if d + 1 <= e2 + e3 else e4 - e3 + 1
    upper = 2 * d + 1 - e3 - e4
    return sum(range(lower, upper + 1, 2))


def p_hurwitz_pure4(p: int, e1: int, e2: int, e3: int, e4: int) -> int:
    """p-Hurwitz number of a genus-0 pure-cycle 4-point type of degree p:
    min_i e_i(p+1-e_i) - p."""
    es = (e1, e2, e3, e4)
    _require_prime(p)
    if any(not 2 <= e < p for e in es):
        raise InvalidTypeError(f"need 2 <= e_i < p, got {es}")
    return hurwitz_formula_pure4(p, es) - p


def good_degeneration(p: int, e1: int, e2: int, e3: int, e4: int) -> bool | None:
    """True when every cover of (p; e1..e4) with generic branch points
    degenerates to a separable admissible cover (last two points colliding);
    None when e1+e2 and e3 are both even, where the question is open."""
    es = (e1, e2, e3, e4)
    _validate_sorted_pure4(p, es)
    if (e1 + e2) % 2 == 0 and e3 % 2 == 0:
        return None
    return True
