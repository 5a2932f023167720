import math
import random
from collections import Counter
from importlib import resources

import pytest

from purecycle.errors import BoundExceededError, InvalidTypeError
from purecycle.group import (
    GroupReport,
    StabilizerChain,
    cycle_type_census,
    element_closure,
    group_analyze,
    is_transitive,
    load_generators,
)
from purecycle.group import _census_batched
from purecycle.perm import (
    CycleType,
    cycle_lengths,
    from_cycles,
    identity,
    parse_cycles,
    perm_order,
    random_perm,
)


def data_file(name):
    return resources.files("purecycle").joinpath("data", name)


def s_n_gens(d):
    return [parse_cycles(d, "(1,2)"), tuple(list(range(1, d)) + [0])]


def test_chain_order_matches_closure_battery():
    rng = random.Random(7)
    cases = [s_n_gens(d) for d in range(2, 7)]
    cases.append([parse_cycles(8, "(1,2,3,4,5,6,7,8)")])  # C8
    cases.append([parse_cycles(5, "(1,2,3)"), parse_cycles(5, "(3,4,5)")])  # A5
    for _ in range(6):
        cases.append([random_perm(rng, 7), random_perm(rng, 7)])
    for gens in cases:
        d = len(gens[0])
        chain = StabilizerChain(gens, d)
        closure = element_closure(gens, cap=10**6)
        assert chain.order() == len(closure)
        elems = list(chain.elements())
        assert len(elems) == len(set(elems)) == len(closure)
        assert set(elems) == closure
        assert all(g in chain for g in closure)


def test_group_analyze_s5():
    report = group_analyze([parse_cycles(5, "(1,2)"), parse_cycles(5, "(1,2,3,4,5)")])
    assert report == GroupReport(5, 120, True, "symmetric")


def test_group_analyze_a5_from_two_3cycles():
    report = group_analyze([parse_cycles(5, "(1,2,3)"), parse_cycles(5, "(3,4,5)")])
    assert report.order == 60
    assert report.classification == "alternating"
    assert report.is_transitive
    # oracle: exhaustive closure
    assert len(element_closure([parse_cycles(5, "(1,2,3)"), parse_cycles(5, "(3,4,5)")], 100)) == 60


def test_group_analyze_intransitive():
    report = group_analyze([parse_cycles(5, "(1,2,3)")])
    assert not report.is_transitive
    assert report.order == 3
    assert report.classification == "other"


def test_group_order_divides_factorial_and_generator_orders_divide():
    rng = random.Random(23)
    for _ in range(20):
        d = rng.randint(3, 9)
        gens = [random_perm(rng, d) for _ in range(2)]
        if all(g == identity(d) for g in gens):
            continue
        order = StabilizerChain(gens, d).order()
        assert math.factorial(d) % order == 0
        for g in gens:
            assert order % perm_order(g) == 0


def test_order_cap_guard():
    with pytest.raises(BoundExceededError):
        group_analyze(s_n_gens(13), order_cap=10**6)


def test_closure_cap_guard():
    with pytest.raises(BoundExceededError):
        element_closure(s_n_gens(8), cap=1000)


def test_pgammal2_16_order_and_closure():
    degree, gens = load_generators(data_file("pgammal2_16.txt"))
    assert degree == 17
    report = group_analyze(gens)
    assert report.order == 16320  # frozen from exhaustive closure
    assert report.classification == "other"
    assert report.is_transitive
    assert len(element_closure(gens, cap=20000)) == 16320


def test_m11_order():
    degree, gens = load_generators(data_file("m11.txt"))
    report = group_analyze(gens)
    assert (degree, report.order, report.classification) == (11, 7920, "other")


def test_s3_census():
    census = cycle_type_census(s_n_gens(3), cap=10)
    assert census == Counter(
        {CycleType(3, ()): 1, CycleType(3, (2,)): 3, CycleType(3, (3,)): 2}
    )


def test_census_cap():
    with pytest.raises(BoundExceededError):
        cycle_type_census(s_n_gens(8), cap=100)


def test_pgammal_census_has_no_2_2_class():
    degree, gens = load_generators(data_file("pgammal2_16.txt"))
    census = cycle_type_census(gens, cap=20000)
    assert sum(census.values()) == 16320
    assert CycleType(17, (2, 2)) not in census


def test_m11_census_has_no_single_short_cycle():
    degree, gens = load_generators(data_file("m11.txt"))
    census = cycle_type_census(gens, cap=10**4)
    assert sum(census.values()) == 7920
    for e in range(2, 11):
        assert CycleType(11, (e,)) not in census
    assert CycleType(11, (11,)) in census  # the 11-cycles are there


def test_batched_census_agrees_with_direct():
    degree, gens = load_generators(data_file("m11.txt"))
    chain = StabilizerChain(gens, degree)
    direct = Counter(cycle_lengths(g) for g in chain.elements())
    assert _census_batched(chain) == direct


@pytest.mark.slow
def test_m23_census_has_no_single_short_cycle():
    degree, gens = load_generators(data_file("m23.txt"))
    census = cycle_type_census(gens, cap=2 * 10**7)
    assert sum(census.values()) == 10200960
    for e in range(2, 23):
        assert CycleType(23, (e,)) not in census


def test_generator_file_parsing(tmp_path):
    path = tmp_path / "gens.txt"
    path.write_text("# comment\ndegree: 4\n(1,2,3)(4)\n(1,2)\n")
    degree, gens = load_generators(path)
    assert degree == 4
    assert gens[0] == parse_cycles(4, "(1,2,3)")

    headerless = tmp_path / "missing_header.txt"
    headerless.write_text("(1,2)\n")
    with pytest.raises(InvalidTypeError):
        load_generators(headerless)


def test_transitivity_helper():
    assert is_transitive(s_n_gens(5), 5)
    assert not is_transitive([from_cycles(5, [[0, 1]])], 5)


def test_m23_order():
    degree, gens = load_generators(data_file("m23.txt"))
    report = group_analyze(gens)
    assert (degree, report.order) == (23, 10200960)
    assert report.classification == "other" and report.is_transitive


def test_pgl2_7_order_from_moebius_action():
    # PGL(2,7) acting on the 8 points of the projective line over F_7:
    # x -> x+1, x -> 3x (3 generates F_7^*), x -> 1/x; infinity encoded as 7
    INF = 7

    def act(fn):
        return tuple(fn(x) for x in range(8))

    add = act(lambda x: INF if x == INF else (x + 1) % 7)
    mul = act(lambda x: INF if x == INF else 3 * x % 7)
    inv = act(lambda x: 0 if x == INF else INF if x == 0 else pow(x, 5, 7))
    report = group_analyze([add, mul, inv])
    assert (report.order, report.classification, report.is_transitive) == (336, "other", True)
    assert len(element_closure([add, mul, inv], cap=1000)) == 336


def test_classification_at_degree_nine():
    s9 = group_analyze(s_n_gens(9))
    assert (s9.order, s9.classification) == (math.factorial(9), "symmetric")
    a9 = group_analyze(
        [parse_cycles(9, "(1,2,3)"), parse_cycles(9, "(1,2,3,4,5,6,7,8,9)")]
    )
    assert (a9.order, a9.classification) == (math.factorial(9) // 2, "alternating")
