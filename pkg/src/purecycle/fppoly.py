"""Dense exact polynomial arithmetic over prime fields, and the polynomial
invariants attached to degenerating covers.

``cartier_coefficient`` evaluates, for exponents (a1..a4) summing to 2(p-1),
the coefficient polynomial

    c(lambda) = sum_j  C(p-1-a2, a4-j) * C(p-1-a3, j) * lambda^j,

the border case of the Cartier operator acting on the differential attached to
the Kummer cover z^(p-1) = x^a1 (x-1)^a2 (x-lambda)^a3.  Up to the sign
(-1)^a4 it is the x^p coefficient of x^(p-a1) (x-1)^(p-1-a2) (x-lambda)^(p-1-a3),
which the tests recompute by brute-force expansion.  Zeros of c in the lambda
line are the supersingular parameters.

``tail_polynomial_single``/``tail_polynomial_double`` build the degree-p
two-point tail covers y^p + y^e = x and y^e1 (y-1)^e2 Ftilde(y) = x, the
latter with Ftilde determined by the first-derivative condition through the
coefficient recursion c_i = c_{i-1} (e1+e2+i-1)/(e1+i), run downward from the
monic top coefficient.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BoundExceededError, InvalidTypeError
from .hurwitz import is_prime


class FpPoly:
    """Polynomial over F_p as a trimmed dense coefficient tuple."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable[int] = ()):
        if not is_prime(p):
            raise InvalidTypeError(f"{p} is not prime")
        vals = [c % p for c in coeffs]
        while vals and vals[-1] == 0:
            vals.pop()
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(vals))

    def __setattr__(self, name, value):
        raise AttributeError("FpPoly is immutable")

    # -- basics --------------------------------------------------------------

    @classmethod
    def zero(cls, p: int) -> "FpPoly":
        return cls(p)

    @classmethod
    def one(cls, p: int) -> "FpPoly":
        return cls(p, (1,))

    @classmethod
    def x(cls, p: int) -> "FpPoly":
        return cls(p, (0, 1))

    @classmethod
    def monomial(cls, p: int, k: int, c: int = 1) -> "FpPoly":
        return cls(p, (0,) * k + (c,))

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = FpPoly(self.p, (other,))
        return (
            isinstance(other, FpPoly)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def _check(self, other: "FpPoly") -> None:
        if self.p != other.p:
            raise InvalidTypeError(f"mixed moduli {self.p} and {other.p}")

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other: "FpPoly") -> "FpPoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return FpPoly(self.p, (self[k] + other[k] for k in range(n)))

    def __sub__(self, other: "FpPoly") -> "FpPoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return FpPoly(self.p, (self[k] - other[k] for k in range(n)))

    def __neg__(self) -> "FpPoly":
        return FpPoly(self.p, (-c for c in self.coeffs))

    def __mul__(self, other: "FpPoly | int") -> "FpPoly":
        if isinstance(other, int):
            return FpPoly(self.p, (c * other for c in self.coeffs))
        self._check(other)
        if self.is_zero() or other.is_zero():
            return FpPoly.zero(self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = (out[i + j] + a * b) % self.p
        return FpPoly(self.p, out)

    __rmul__ = __mul__

    def __divmod__(self, other: "FpPoly") -> tuple["FpPoly", "FpPoly"]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return FpPoly.zero(p), self
        quot = [0] * (dq + 1)
        inv_lead = pow(other.coeffs[-1], -1, p)
        for k in range(dq, -1, -1):
            c = (rem[k + other.degree()] * inv_lead) % p
            if c:
                quot[k] = c
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = (rem[k + j] - c * b) % p
        return FpPoly(p, quot), FpPoly(p, rem)

    def __floordiv__(self, other: "FpPoly") -> "FpPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "FpPoly") -> "FpPoly":
        return divmod(self, other)[1]

    def monic(self) -> "FpPoly":
        if self.is_zero():
            return self
        return self * pow(self.coeffs[-1], -1, self.p)

    def derivative(self) -> "FpPoly":
        return FpPoly(self.p, (k * c for k, c in enumerate(self.coeffs) if k))

    def __call__(self, x: int) -> int:
        y = 0
        for c in reversed(self.coeffs):
            y = (y * x + c) % self.p
        return y

    def pth_root(self) -> "FpPoly":
        """Inverse of f -> f^p for polynomials in x^p (coefficients fixed by
        Frobenius over the prime field)."""
        if any(c and k % self.p for k, c in enumerate(self.coeffs)):
            raise InvalidTypeError("not a polynomial in x^p")
        return FpPoly(self.p, self.coeffs[:: self.p])

    def to_json(self) -> dict:
        return {"p": self.p, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, obj: dict) -> "FpPoly":
        return cls(obj["p"], obj["coeffs"])

    def to_string(self, var: str = "x") -> str:
        """Ascending powers, zero terms suppressed, e.g. ``1 + 4*x + x^2``."""
        if self.is_zero():
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*{var}" if c != 1 else var)
            else:
                terms.append(f"{c}*{var}^{k}" if c != 1 else f"{var}^{k}")
        return " + ".join(terms)

    def __repr__(self):
        return f"FpPoly(p={self.p}, {self.to_string()})"


def poly_gcd(a: FpPoly, b: FpPoly) -> FpPoly:
    """Monic greatest common divisor."""
    a._check(b)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def pow_mod(base: FpPoly, exponent: int, modulus: FpPoly) -> FpPoly:
    result = FpPoly.one(base.p)
    base = base % modulus
    while exponent:
        if exponent & 1:
            result = (result * base) % modulus
        base = (base * base) % modulus
        exponent >>= 1
    return result


def lucas_binomial(n: int, k: int, p: int) -> int:
    """C(n, k) mod p via base-p digits and small factorials."""
    if not is_prime(p):
        raise InvalidTypeError(f"{p} is not prime")
    if k < 0 or k > n:
        return 0
    fact = [1] * p
    for i in range(1, p):
        fact[i] = fact[i - 1] * i % p
    out = 1
    while n or k:
        nd, kd = n % p, k % p
        if kd > nd:
            return 0
        out = out * fact[nd] * pow(fact[kd] * fact[nd - kd] % p, -1, p) % p
        n //= p
        k //= p
    return out


# -- deformation-datum polynomials -------------------------------------------


@dataclass(frozen=True)
class KummerData:
    """Exponents of the cyclic cover z^(p-1) = x^a1 (x-1)^a2 (x-lambda)^a3,
    with a4 the exponent at infinity."""

    p: int
    a: tuple[int, int, int, int]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        if not is_prime(self.p):
            raise InvalidTypeError(f"{self.p} is not prime")
        if len(self.a) != 4:
            raise InvalidTypeError("exactly four exponents required")
        if any(not 0 <= ai <= self.p - 1 for ai in self.a):
            raise InvalidTypeError(f"exponents {self.a} out of range [0, p-1]")
        if sum(self.a) != 2 * (self.p - 1):
            raise InvalidTypeError(
                f"exponents must sum to 2(p-1) = {2 * (self.p - 1)}, got {sum(self.a)}"
            )

    @property
    def kummer_degree(self) -> int:
        return (self.p - 1) // math.gcd(self.p - 1, *self.a)


def cartier_coefficient(k: KummerData) -> FpPoly:
    """The coefficient polynomial c(lambda); never zero for valid exponents.

    The summation runs over the support of the binomials, j from
    max(0, a2+a4-(p-1)) to min(a4, p-1-a3); the j-th term is nonzero on all of
    it since both binomials have top index below p.  In particular the leading
    term survives, so c cannot vanish.
    """
    p = k.p
    a1, a2, a3, a4 = k.a
    lo = max(0, a2 + a4 - (p - 1))
    hi = min(a4, p - 1 - a3)
    coeffs = [0] * (hi + 1)
    for j in range(lo, hi + 1):
        coeffs[j] = (
            lucas_binomial(p - 1 - a2, a4 - j, p) * lucas_binomial(p - 1 - a3, j, p)
        ) % p
    poly = FpPoly(p, coeffs)
    if poly.is_zero():
        raise InvalidTypeError(f"coefficient polynomial vanished for {k}")
    return poly


def fp_roots(f: FpPoly) -> list[int]:
    """Distinct roots in F_p by exhaustive evaluation (moduli up to ~10^6)."""
    if f.is_zero():
        raise InvalidTypeError("the zero polynomial has every root")
    if f.p > 10**6:
        raise BoundExceededError(f"exhaustive root search refused for p = {f.p}")
    return [x for x in range(f.p) if f(x) == 0]


def supersingular_lambdas(k: KummerData) -> list[int]:
    """Roots of the coefficient polynomial in F_p minus the branch points 0, 1."""
    return [r for r in fp_roots(cartier_coefficient(k)) if r not in (0, 1)]


def squarefree_decomposition(f: FpPoly) -> list[tuple[FpPoly, int]]:
    """Pairwise-coprime monic squarefree factors with multiplicities."""
    f = f.monic()
    if f.degree() <= 0:
        return []
    deriv = f.derivative()
    if deriv.is_zero():
        return [(g, m * f.p) for g, m in squarefree_decomposition(f.pth_root())]
    out = []
    c = poly_gcd(f, deriv)
    w = f // c
    i = 1
    while w.degree() > 0:
        y = poly_gcd(w, c)
        z = w // y
        if z.degree() > 0:
            out.append((z, i))
        w = y
        c = c // y
        i += 1
    if c.degree() > 0:
        # remaining part collects the factors with multiplicity divisible by p
        out.extend((g, m * f.p) for g, m in squarefree_decomposition(c.pth_root()))
    return out


def distinct_degree_factorization(f: FpPoly) -> list[tuple[int, FpPoly]]:
    """(degree, product of irreducible factors of that degree) for monic
    squarefree f."""
    p = f.p
    out = []
    frob = FpPoly.x(p)
    k = 0
    rest = f
    while rest.degree() >= 2 * (k + 1):
        k += 1
        frob = pow_mod(frob, p, rest)
        g = poly_gcd(rest, frob - FpPoly.x(p))
        if g.degree() > 0:
            out.append((k, g))
            rest = rest // g
            frob = frob % rest
    if rest.degree() > 0:
        out.append((rest.degree(), rest))
    return out


def irreducible_factor_degrees(f: FpPoly) -> list[int]:
    """Degrees of all irreducible factors, with multiplicity, sorted."""
    degrees = []
    for part, mult in squarefree_decomposition(f):
        for deg, product in distinct_degree_factorization(part):
            degrees.extend([deg] * (product.degree() // deg * mult))
    return sorted(degrees)


# -- tail-cover polynomials ---------------------------------------------------


def tail_polynomial_single(p: int, e: int) -> FpPoly:
    """F(y) = y^p + y^e, the degree-p tail with tame index e at y = 0."""
    if not is_prime(p):
        raise InvalidTypeError(f"{p} is not prime")
    if not 2 <= e <= p - 1:
        raise InvalidTypeError(f"need 2 <= e <= p-1, got e={e}")
    return FpPoly.monomial(p, p) + FpPoly.monomial(p, e)


def tail_polynomial_cofactor(p: int, e1: int, e2: int) -> FpPoly:
    """The monic degree p-e1-e2 cofactor Ftilde of the two-point tail, from
    the downward recursion c_{i-1} = c_i (e1+i) / (e1+e2+i-1)."""
    if not is_prime(p):
        raise InvalidTypeError(f"{p} is not prime")
    if not (2 <= e1 <= e2 and e1 + e2 <= p):
        raise InvalidTypeError(f"need 2 <= e1 <= e2 and e1+e2 <= p, got ({e1},{e2})")
    n = p - e1 - e2
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    for i in range(n, 0, -1):
        denom = (e1 + e2 + i - 1) % p
        # e1+e2 <= e1+e2+i-1 <= p-1, so the denominator never vanishes mod p
        assert denom != 0
        coeffs[i - 1] = coeffs[i] * (e1 + i) % p * pow(denom, -1, p) % p
    return FpPoly(p, coeffs)


def tail_polynomial_double(p: int, e1: int, e2: int) -> FpPoly:
    """F(y) = y^e1 (y-1)^e2 Ftilde(y), monic of degree p, whose derivative is
    a nonzero constant times y^(e1-1) (y-1)^(e2-1)."""
    cofactor = tail_polynomial_cofactor(p, e1, e2)
    y = FpPoly.x(p)
    y_minus_1 = y - FpPoly.one(p)
    poly = FpPoly.monomial(p, e1)
    for _ in range(e2):
        poly = poly * y_minus_1
    poly = poly * cofactor
    assert poly.degree() == p
    return poly


@dataclass(frozen=True)
class RamificationProfile:
    """Finite tame ramification points (point, index) plus wildness at infinity."""

    finite_points: tuple[tuple[int, int], ...]
    wild_at_infinity: bool


def ramification_profile(f: FpPoly) -> RamificationProfile:
    """Ramification of the map y -> f(y) on the affine line.

    Each rational root rho of f' of multiplicity k gives a tame point of index
    k+1 (checked against the local multiplicity of f - f(rho)); a vanishing
    derivative, wild finite ramification, or critical points outside the prime
    field are refused.
    """
    p = f.p
    if f.degree() > p:
        raise InvalidTypeError("degree above the characteristic is unsupported")
    deriv = f.derivative()
    if deriv.is_zero():
        raise InvalidTypeError("derivative vanishes identically (inseparable map)")
    rest = deriv.monic()
    points = []
    for rho in range(p):
        if rest(rho) != 0:
            continue
        linear = FpPoly(p, (-rho, 1))
        mult = 0
        while True:
            quot, rem = divmod(rest, linear)
            if not rem.is_zero():
                break
            rest = quot
            mult += 1
        shifted = f - FpPoly(p, (f(rho),))
        local = 0
        while True:
            quot, rem = divmod(shifted, linear)
            if not rem.is_zero():
                break
            shifted = quot
            local += 1
        if local % p == 0:
            raise InvalidTypeError(f"wild finite ramification at y = {rho}")
        assert local - 1 == mult, "tame local index inconsistent with derivative"
        points.append((rho, local))
    if rest.degree() > 0:
        raise InvalidTypeError("critical points outside the prime field")
    return RamificationProfile(tuple(points), wild_at_infinity=f.degree() == p)
