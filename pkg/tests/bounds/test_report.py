from fractions import Fraction

import pytest

from subcast.bounds import check_sphere_packing, gaussian_bounds_check, max_m2_bound
from subcast.bounds.report import TCache
from subcast.broadcast import encoder_from_table, load_encoder
from subcast.errors import HypothesisError
from subcast.subspace import gaussian_binomial

from ..fixtures import SubcastFileFixtureFactory


def test_sphere_packing_satisfied(subcast_file: SubcastFileFixtureFactory) -> None:
    e = load_encoder(subcast_file.encoder_text("layered"))
    rep = check_sphere_packing(e)
    assert rep.applicable
    assert rep.verdict == "satisfied"
    assert rep.satisfied is True
    assert not rep.swapped
    assert rep.t is not None and rep.t.value == 2
    assert rep.lhs == 4
    assert rep.rhs == 16

    doc = rep.to_json()
    assert doc["lhs"] == "4"
    assert doc["rhs"] == "16"
    assert doc["params"]["s1"] == "1"
    assert doc["verdict"] == "satisfied"


def test_sphere_packing_trivial_mode(subcast_file: SubcastFileFixtureFactory) -> None:
    e = load_encoder(subcast_file.encoder_text("layered"))
    rep = check_sphere_packing(e, "trivial")
    assert rep.verdict == "inconclusive"
    assert rep.satisfied is True
    assert rep.t is not None and rep.t.kind == "lower_bound"
    assert any("lower bound" in n for n in rep.notes)


def test_sphere_packing_swapped(subcast_file: SubcastFileFixtureFactory) -> None:
    e = load_encoder(subcast_file.encoder_text("layered"))
    transposed = encoder_from_table(2, 2, {(m2, m1): w for m1, m2, w in e.entries()})
    rep = check_sphere_packing(transposed)
    assert rep.swapped
    assert (rep.s1, rep.s2) == (2, 1)
    assert rep.verdict == "satisfied"
    assert rep.lhs == 4


def test_sphere_packing_not_applicable(subcast_file: SubcastFileFixtureFactory) -> None:
    rep = check_sphere_packing(load_encoder(subcast_file.encoder_text("single_cloud")))
    assert rep.verdict == "not_applicable"
    assert not rep.applicable
    assert rep.satisfied is None
    assert "s2 is unbounded" in rep.notes[0]

    rep = check_sphere_packing(load_encoder(subcast_file.encoder_text("two_clouds")))
    assert rep.verdict == "not_applicable"
    assert "minimum distance" in rep.notes[0]


def test_t_cache_is_shared(subcast_file: SubcastFileFixtureFactory) -> None:
    e = load_encoder(subcast_file.encoder_text("layered"))
    cache: TCache = {}
    a = check_sphere_packing(e, t_cache=cache)
    assert list(cache) == [(1, 2, 0, None)]
    b = check_sphere_packing(e, t_cache=cache)
    assert a == b


def test_corollary_example() -> None:
    rep = max_m2_bound(2, 2, 1, 1, 1, 2, 2)
    assert rep.verdict == "computed"
    assert rep.t is not None and rep.t.value == 2
    assert rep.rhs == 4
    assert rep.m2_ceiling == 3
    assert rep.packing_ratio == Fraction(3, 2)
    assert rep.satisfied is None

    assert max_m2_bound(2, 2, 1, 1, 1, 2, 2, m2_size=3).verdict == "satisfied"
    assert max_m2_bound(2, 2, 1, 1, 1, 2, 2, m2_size=4).verdict == "violated"


def test_corollary_trivial_mode() -> None:
    rep = max_m2_bound(2, 2, 1, 1, 1, 2, 2, t_mode="trivial")
    assert rep.t is not None and rep.t.kind == "lower_bound"
    assert rep.t.value == 2
    assert rep.m2_ceiling == 3
    assert max_m2_bound(2, 2, 1, 1, 1, 2, 2, "trivial", m2_size=3).verdict == "inconclusive"


def test_corollary_falls_back_when_guarded() -> None:
    rep = max_m2_bound(2, 4, 1, 2, 2, 3, 3, node_limit=1)
    assert rep.t is not None and rep.t.method == "trivial"
    assert any("trivial lower bound used" in n for n in rep.notes)


def test_corollary_edge_cases() -> None:
    assert max_m2_bound(2, 2, 1, 1, 2, 2, 2).verdict == "not_applicable"
    assert max_m2_bound(2, 2, 1, 1, 3, 4, 4).verdict == "vacuous"

    point = max_m2_bound(2, 2, 1, 0, 1, 2, 1)
    assert point.rhs == 1
    assert point.m2_ceiling == 1
    assert max_m2_bound(2, 2, 1, 0, 1, 2, 2).verdict == "vacuous"

    with pytest.raises(ValueError):
        max_m2_bound(2, 2, 1, 3, 1, 2, 1)


def test_corollary_ceiling_monotone_in_m1() -> None:
    ceilings = []
    for m1 in range(1, 4):
        rep = max_m2_bound(2, 4, 1, 2, 2, 3, m1)
        assert rep.m2_ceiling is not None
        ceilings.append(rep.m2_ceiling)
    assert ceilings == sorted(ceilings, reverse=True)


def test_gaussian_bounds() -> None:
    assert gaussian_bounds_check(3, 1, 2) == (4, 7, 16, True)
    assert gaussian_bounds_check(2, 1, 2) == (2, 3, 8, True)
    assert gaussian_bounds_check(4, 2, 3) == (81, 130, 324, True)
    for q in (2, 3, 4, 5):
        for n in range(2, 9):
            for l in range(1, n):
                lo, value, hi, holds = gaussian_bounds_check(n, l, q)
                assert holds
                assert lo < value < hi
                assert value == gaussian_binomial(n, l, q)

    with pytest.raises(HypothesisError):
        gaussian_bounds_check(3, 0, 2)
    with pytest.raises(HypothesisError):
        gaussian_bounds_check(3, 3, 2)
