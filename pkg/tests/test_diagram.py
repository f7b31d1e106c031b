import random
from fractions import Fraction as F

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from oneone import diagram as dg
from oneone.errors import (BasepointOnCurve, InternalInconsistency, NonPrimitiveOffset, OneOneError,
                           SelfIntersecting)

HALF = F(1, 2)


def test_validate_examples(t27):
    assert dg.validate(t27) == t27
    bow = dg.OneOneDiagram([(F(1, 5), 0), (F(2, 5), F(1, 4)), (F(2, 5), F(-1, 4)), (F(1, 5), F(1, 4))], (0, 1),
                           (HALF, F(1, 4)))
    with pytest.raises(SelfIntersecting):
        dg.validate(bow)
    with pytest.raises(NonPrimitiveOffset):
        dg.validate(dg.OneOneDiagram([(F(1, 3), 0)], (2, 4), (HALF, F(1, 4))))
    with pytest.raises(BasepointOnCurve):
        dg.validate(dg.OneOneDiagram([(F(1, 3), 0)], (0, 1), (HALF, HALF)))


def test_json_roundtrip(t27, tmp_path):
    path = tmp_path / "d.json"
    dg.save(t27, path)
    assert dg.load(path) == t27
    assert dg.OneOneDiagram.from_json(t27.to_json()).to_json() == t27.to_json()


def test_malformed(data_dir):
    with pytest.raises(OneOneError):
        dg.load(data_dir / "malformed.json")
    with pytest.raises(OneOneError):
        dg.OneOneDiagram.from_json("[1, 2")


def test_intersections(t27):
    pts = dg.intersections(t27)
    assert len(pts) == 7 and dg.num_classes(t27) == 1
    assert abs(sum(x.sign for x in pts)) == 1
    L = dg.geodesic_diagram(5, 2)
    pts = dg.intersections(L)
    assert len(pts) == 5 and dg.num_classes(L) == 5
    assert len({x.sign for x in pts}) == 1
    for q in (0, 3, -2):
        U = dg.geodesic_diagram(1, q)
        assert len(dg.intersections(U)) == 1 and dg.num_classes(U) == 1


def test_bigons_t27(t27):
    bgs = dg.bigons(t27, 0)
    up = [b for b in bgs if b.upper]
    down = [b for b in bgs if not b.upper]
    assert len(up) == 3 and all((b.n_z, b.n_w) == (0, 1) for b in up)
    assert len(down) == 3 and all((b.n_z, b.n_w) == (1, 0) for b in down)


def test_bigons_simple_and_five2(five2):
    assert dg.bigons(dg.geodesic_diagram(5, 2)) == []
    up = [b for b in dg.bigons(five2, 0) if b.upper]
    assert {b.decreasing for b in up} == {True, False}


def test_graphic_and_coherence(pictured, t27, five2):
    assert dg.graphic_sign(t27, 0) == "positive"
    assert dg.graphic_sign(five2, 0) == "none"
    assert dg.graphic_sign(dg.unknot(), 0) == "either"
    assert [dg.coherence(D) for D in pictured] == ["Incoherent", "Incoherent", "Positive", "Positive"]
    assert dg.coherence(dg.geodesic_diagram(7, 3)) == "Both"


def test_standard_form_examples():
    assert dg.coherence(dg.from_standard_form(7, 2, 1, 2)) == "Positive"
    assert dg.coherence(dg.from_standard_form(7, 0, 2, 4)) == "Incoherent"
    K = dg.from_standard_form(21, 4, 4, 11)
    assert dg.is_reduced(K) and dg.coherence(K) in ("Positive", "Negative")
    with pytest.raises(OneOneError):
        dg.from_standard_form(6, 0, 3, 0)


def test_reduce_examples(t27):
    assert dg.reduce(t27) == dg.canonical(t27)
    fat = dg.inflate(t27, random.Random(3))
    assert len(dg.intersections(fat)) == 9 and not dg.is_reduced(fat)
    R = dg.reduce(fat)
    assert len(dg.intersections(R)) == 7 and dg.coherence(R) == "Positive"


def test_reflect_swaps_sign(t27):
    assert dg.coherence(dg.reflect(t27)) == "Negative"


# -- properties over standard-form diagrams --------------------------------

@st.composite
def standard(draw, pmax=11):
    p = draw(st.integers(1, pmax))
    r = draw(st.integers(0, (p - 1) // 2))
    q = draw(st.integers(0, p - 1))
    s = draw(st.integers(0, p - 1))
    try:
        return dg.from_standard_form(p, q, r, s)
    except OneOneError:
        assume(False)


@given(standard())
def test_class_structure(D):
    assert dg.num_classes(D) == abs(D.offset[1])
    for c in range(dg.num_classes(D)):
        pts = dg.class_points(D, c)
        assert len(pts) % 2 == 1
        assert abs(sum(x.sign for x in pts)) == 1


@given(standard())
def test_coherence_matches_graphic(D):
    assert dg.is_reduced(D)
    assert dg.coherence(D) == dg.coherence_from_graphic(D)


@given(standard())
def test_every_bigon_holds_one_kind_of_basepoint(D):
    for b in dg.bigons(D):
        assert (b.n_z == 0) != (b.n_w == 0)
        assert b.n_z >= 0 and b.n_w >= 0


@given(standard(), st.integers(-3, 3), st.integers(0, 20))
def test_moves_preserve_verdict(D, k, j):
    v = dg.coherence(D)
    flip = {"Positive": "Negative", "Negative": "Positive"}
    assert dg.coherence(dg.translate(D, (F(k, 7), 0))) == v
    assert dg.coherence(dg.rotate_start(D, j % D.size)) == v
    assert dg.coherence(dg.reflect(D)) == flip.get(v, v)


@given(standard(pmax=9), st.integers(0, 10 ** 6))
def test_inflate_then_reduce(D, seed):
    fat = dg.inflate(D, random.Random(seed), 2)
    assert len(dg.intersections(fat)) == len(dg.intersections(D)) + 4
    R = dg.reduce(fat)
    assert len(dg.intersections(R)) == len(dg.intersections(D))
    assert dg.coherence(R) == dg.coherence(D)


def test_reduce_count_guard(monkeypatch, t27):
    fat = dg.inflate(t27, random.Random(1))
    monkeypatch.setattr(dg, "_splice", lambda D, rem: (D, len(rem)))
    with pytest.raises(InternalInconsistency):
        dg.reduce(fat)
