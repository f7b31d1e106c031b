from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oneone import braid as br
from oneone import diagram as dg
from oneone import floer
from oneone.burau import bridge_braid_alexander, burau_alexander
from oneone.errors import NotAKnot, NotStrict, OutOfRange, SlopeZero
from oneone.lattice import INF, CyclicInterval, ProjectiveSlope, interval_contains

S = ProjectiveSlope.of
K742 = br.BridgeBraid(7, 4, 2)
K724 = br.BridgeBraid(7, 2, 4)
P237 = floer.LaurentPolynomial.from_dict({5: 1, 4: -1, 2: 1, 1: -1, 0: 1, -1: -1, -2: 1, -4: -1, -5: 1})

BRAIDS, REJECTED = br.all_braids(10)
STRICT = [K for K in BRAIDS if br.is_strict(K)]


def test_validate():
    assert br.braid_validate(7, 4, 2) == K742
    assert br.braid_validate(7, 4, 9) == K742
    with pytest.raises(NotAKnot):
        br.braid_validate(4, 3, 1)
    with pytest.raises(NotAKnot):
        br.braid_validate(2, 1, 1)
    with pytest.raises(OutOfRange):
        br.braid_validate(7, 7, 0)


def test_geodesic():
    g = br.geodesic(K742)
    assert (g.t, g.slope) == (F(18, 7), F(49, 18))
    g = br.geodesic(br.BridgeBraid(7, 6, 2))
    assert (g.t, g.slope) == (F(20, 7), F(49, 20))


def test_intervals_and_types():
    assert br.slope_interval(K742) == CyclicInterval(S("5/2"), S(3))
    assert br.slope_interval(K724) == CyclicInterval(S("3/2"), S("5/3"))
    assert br.slope_interval(br.BridgeBraid(7, 6, 2)) == CyclicInterval(S("7/3"), S("5/2"))
    assert isinstance(br.classify_type(K742), br.Strict)
    assert br.classify_type(br.BridgeBraid(7, 6, 2)) == br.TorusKnot(3, 7)
    assert br.classify_type(br.BridgeBraid(6, 4, 3)) == br.ExceptionalCable(2, 3, 2, -1)


def test_classify_inclusion():
    assert br.classify_inclusion(K742, INF) == br.InclusionVerdict(True, False, False)
    assert br.classify_inclusion(K742, "8/3") == br.InclusionVerdict(True, True, True)
    assert br.classify_inclusion(K742, "2/1") == br.InclusionVerdict(False, True, False)
    with pytest.raises(NotStrict):
        br.classify_inclusion(br.BridgeBraid(7, 6, 2), INF)


def test_fillings_and_mirror():
    assert [str(s) for s in br.solid_torus_fillings(K742)] == ["5/2", "8/3", "3/1"]
    assert [str(s) for s in br.solid_torus_fillings(K724)] == ["3/2", "8/5", "5/3"]
    assert any(br.solid_torus_fillings(K) == [] for K in STRICT)
    assert br.mirror(K742) == K724
    assert br.braid_equivalent(K742, K742) and not br.braid_equivalent(K742, K724)


def test_inclusion_diagrams():
    D = br.inclusion_diagram(K742, INF)
    assert dg.coherence(D) == "Positive"
    assert floer.alexander_polynomial(D) == P237
    D = br.inclusion_diagram(K742, "8/3")
    assert len({x.sign for x in dg.intersections(D)}) == 1
    D = br.inclusion_diagram(br.BridgeBraid(7, 6, 2), INF)
    assert floer.alexander_polynomial(D) == floer.torus_knot_alexander(3, 7)
    with pytest.raises(SlopeZero):
        br.inclusion_diagram(K742, "0/1")


def test_burau_oracle():
    assert bridge_braid_alexander(K742) == P237
    assert burau_alexander([1, -2, 1, -2], 3) == floer.LaurentPolynomial.from_dict({1: -1, 0: 3, -1: -1})
    assert burau_alexander([1] * 7, 2) == floer.torus_knot_alexander(2, 7)


def test_berge_small():
    three, two = br.berge_search(6)
    assert three == []
    three, _ = br.berge_search(7)
    assert {K for K, _ in three} == {K742, K724}


def test_threads_env(monkeypatch):
    monkeypatch.setenv("ONEONE_THREADS", "x")
    assert br._threads() == 1
    monkeypatch.setenv("ONEONE_THREADS", "3")
    assert br._threads() == 3


# -- properties ------------------------------------------------------------

braids = st.sampled_from(BRAIDS)
stricts = st.sampled_from(STRICT)


@given(braids)
def test_geodesic_in_sheet(K):
    g = br.geodesic(K)
    assert K.m < g.t < K.m + 1 and g.t.denominator != 1
    assert F(K.omega, K.m + 1) < g.slope
    assert K.m == 0 or g.slope < F(K.omega, K.m)


@given(stricts)
def test_strict_interval_is_farey_pair(K):
    I = br.slope_interval(K)
    a, b = I.start, I.end
    assert abs(a.rise * b.run - b.rise * a.run) == 1
    assert F(K.omega, K.m + 1) < a.value() and (K.m == 0 or b.value() < F(K.omega, K.m))
    assert interval_contains(I, br.geodesic(K).slope)


@given(braids)
def test_mirror_involution(K):
    assert br.mirror(br.mirror(K)) == K


@given(stricts)
def test_mirror_maps_interval_and_swaps_sign(K):
    M = br.mirror(K)
    I, J = br.slope_interval(K), br.slope_interval(M)
    assert J == CyclicInterval(br.mirror_slope(I.end), br.mirror_slope(I.start))
    for f in ("1/0", "2/1", "3/1", "5/2", "7/3"):
        v = br.classify_inclusion(K, f)
        w = br.classify_inclusion(M, br.mirror_slope(f))
        assert (v.positive, v.negative, v.simple) == (w.negative, w.positive, w.simple)


@given(stricts)
def test_fillings_in_interval(K):
    fs = br.solid_torus_fillings(K)
    assert len(fs) <= 3
    I = br.slope_interval(K)
    for s in fs:
        assert interval_contains(I, s) and any(br.congruence_cases(K, s))
        assert br.classify_inclusion(K, s).simple


@given(st.sampled_from([K for K in BRAIDS if K.omega <= 7]))
def test_s3_inclusion_matches_burau(K):
    D = br.inclusion_diagram(K, INF)
    assert floer.alexander_polynomial(D) == bridge_braid_alexander(K)
