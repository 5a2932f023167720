#!/usr/bin/env python3
"""Regenerate src/purecycle/data/pgammal2_16.txt and re-verify all data files.

The library never constructs these groups symbolically; this one-off script
documents where the shipped generators come from.  PGammaL(2,16) is built
from scratch as the semilinear action on the projective line over F_16; the
Mathieu generators are the standard GAP-library pairs, checked here against
their known orders.
"""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from purecycle.group import StabilizerChain, load_generators
from purecycle.perm import format_cycles, is_permutation

DATA = Path(__file__).resolve().parent.parent / "src" / "purecycle" / "data"

# F_16 = F_2[g]/(g^4 + g + 1); elements are 4-bit integers, g = 2.
_MODULUS = 0b10011


def gf16_mul(a: int, b: int) -> int:
    r = 0
    for i in range(4):
        if (b >> i) & 1:
            r ^= a << i
    for i in range(7, 3, -1):
        if (r >> i) & 1:
            r ^= _MODULUS << (i - 4)
    return r


def gf16_inv(a: int) -> int:
    x = a
    for _ in range(13):  # a^14 = a^-1 since a^15 = 1
        x = gf16_mul(x, a)
    return x


INF = 16  # points 0..15 are the field elements, 16 is infinity


def pgammal2_16_generators():
    def add_one(p):
        return INF if p == INF else p ^ 1

    def mul_g(p):
        return INF if p == INF else gf16_mul(p, 2)

    def inv_pt(p):
        if p == INF:
            return 0
        if p == 0:
            return INF
        return gf16_inv(p)

    def frob(p):
        return INF if p == INF else gf16_mul(p, p)

    gens = [tuple(f(p) for p in range(17)) for f in (add_one, mul_g, inv_pt, frob)]
    assert all(is_permutation(g) for g in gens)
    assert StabilizerChain(gens[:3], 17).order() == 4080  # PSL(2,16)
    assert StabilizerChain(gens, 17).order() == 16320
    return gens


def main() -> None:
    for g in pgammal2_16_generators():
        print(format_cycles(g))
    expected = {"pgammal2_16.txt": 16320, "m11.txt": 7920, "m23.txt": 10200960}
    for name, order in expected.items():
        degree, gens = load_generators(DATA / name)
        got = StabilizerChain(gens, degree).order()
        status = "ok" if got == order else f"MISMATCH (expected {order})"
        print(f"{name}: degree {degree}, order {got} {status}")


if __name__ == "__main__":
    main()
