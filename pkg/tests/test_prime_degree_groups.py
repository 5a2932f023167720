"""Prime-degree monodromy: any transitive group containing a short enough
single cycle is symmetric or alternating; checked on factorization samples."""
import pytest

from purecycle.group import group_analyze
from purecycle.hurwitz import RamificationType, enumerate_factorizations
from purecycle.perm import cycle_lengths


def sample_types(p):
    """Cheap genus-0 types of prime degree p whose classes include a cycle of
    length strictly between 1 and p-2; middle classes kept small."""
    if p == 5:
        return [RamificationType.pure(5, es) for es in ((2, 3, 4), (2, 2, 4, 4), (2, 2, 3, 5))]
    if p == 7:
        return [RamificationType.pure(7, es) for es in ((3, 5, 7), (2, 4, 4, 6), (3, 3, 5, 5))]
    if p == 11:
        return [
            RamificationType.pure(11, (9, 3, 11)),
            RamificationType.pure(11, (8, 4, 11)),
            RamificationType.pure(11, (9, 4, 10)),
            RamificationType.pure(11, (6, 6, 11)),
        ]
    raise ValueError(p)


@pytest.mark.parametrize("p", [5, 7, 11])
def test_transitive_with_short_cycle_is_symmetric_or_alternating(p):
    seen = 0
    for t in sample_types(p):
        for f in enumerate_factorizations(t):
            lengths = [l for g in f.perms for l in cycle_lengths(g)]
            assert any(1 < l < p - 2 for l in lengths)
            report = group_analyze(f.perms)
            assert report.is_transitive
            assert report.classification in ("symmetric", "alternating"), (
                f"{t}: got {report}"
            )
            seen += 1
    assert seen > 0
