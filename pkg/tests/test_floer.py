import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from oneone import diagram as dg
from oneone import floer
from oneone.errors import NormalizationImpossible, NotAnS3Diagram, OneOneError
from oneone.floer import ChainSummand, LaurentPolynomial

T27 = LaurentPolynomial.from_dict({3: 1, 2: -1, 1: 1, 0: -1, -1: 1, -2: -1, -3: 1})


def test_chain_summand_t27(t27):
    C = floer.chain_summand(t27, 0)
    assert C.size == 7 and len(C.v_edges) == 3 and len(C.h_edges) == 3
    grades = sorted(C.rel_alexander.values())
    assert grades == list(range(grades[0], grades[0] + 7))
    assert floer.chain_shape_check(C) == "positive"
    assert floer.homology_rank(C, "v") == floer.homology_rank(C, "h") == 1


def test_chain_summand_unknot_and_five2(five2):
    C = floer.chain_summand(dg.unknot(), 0)
    assert C.size == 1 and not C.v_edges and not C.h_edges
    assert floer.chain_shape_check(C) == "positive"
    C = floer.chain_summand(five2, 0)
    assert C.size == 7 and floer.chain_shape_check(C) == "neither"


def test_lspace_verdicts(pictured):
    got = [floer.lspace_verdict(D) for D in pictured]
    assert got == ["NotByThisDiagram"] * 2 + ["PositiveLSpaceKnot"] * 2
    assert floer.lspace_verdict(dg.geodesic_diagram(5, 2)) == "Both"
    assert floer.lspace_verdict(dg.reflect(pictured[2])) == "NegativeLSpaceKnot"


def test_alexander(t27):
    assert floer.alexander_polynomial(dg.unknot()) == floer.ONE
    assert floer.alexander_polynomial(t27) == T27
    assert str(T27) == "t^3 - t^2 + t - 1 + t^-1 - t^-2 + t^-3"
    with pytest.raises(NotAnS3Diagram):
        floer.alexander_polynomial(dg.geodesic_diagram(5, 2))


def test_torus_oracle():
    assert floer.torus_knot_alexander(2, 7) == T27
    assert floer.torus_knot_alexander(2, 3) == LaurentPolynomial.from_dict({1: 1, 0: -1, -1: 1})


def test_symmetrize_failures():
    with pytest.raises(NormalizationImpossible):
        floer.symmetrize(LaurentPolynomial())
    with pytest.raises(NormalizationImpossible):
        floer.symmetrize(LaurentPolynomial.from_dict({0: 1, 1: 1}))
    with pytest.raises(NormalizationImpossible):
        floer.symmetrize(LaurentPolynomial.from_dict({0: 2, 2: 1}))


# -- chain shapes ------------------------------------------------------------

def positive_chain(n, perm):
    """Zig-zag on 2n+1 generators, relabelled by perm."""
    v = [(perm[2 * k - 1], perm[2 * k - 2]) for k in range(1, n + 1)]
    h = [(perm[2 * k - 1], perm[2 * k]) for k in range(1, n + 1)]
    return ChainSummand(0, list(range(2 * n + 1)), v, h)


@given(st.integers(0, 6), st.randoms())
def test_chain_shape_symmetries(n, rnd):
    perm = list(range(2 * n + 1))
    rnd.shuffle(perm)
    C = positive_chain(n, perm)
    assert floer.chain_shape_check(C) == "positive"
    dual = ChainSummand(0, C.generators, [(t, s) for s, t in C.v_edges], [(t, s) for s, t in C.h_edges])
    assert floer.chain_shape_check(dual) == ("positive" if n == 0 else "negative")
    swapped = ChainSummand(0, C.generators, list(C.h_edges), list(C.v_edges))
    assert floer.chain_shape_check(swapped) == "positive"


@given(st.integers(1, 5), st.randoms())
def test_broken_chain_is_neither(n, rnd):
    C = positive_chain(n, list(range(2 * n + 1)))
    C.h_edges = C.h_edges[:-1]
    assert floer.chain_shape_check(C) == "neither"


@st.composite
def polys(draw):
    d = draw(st.dictionaries(st.integers(-6, 6), st.integers(-4, 4), max_size=6))
    return LaurentPolynomial.from_dict(d)


@given(polys(), polys(), polys())
def test_laurent_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert a - a == LaurentPolynomial()
    assert (a * b)(2) == a(2) * b(2)


@given(st.integers(2, 9), st.integers(2, 9))
def test_torus_oracle_symmetric(p, q):
    from math import gcd
    assume(gcd(p, q) == 1)
    P = floer.torus_knot_alexander(p, q)
    assert P.is_symmetric() and P(1) == 1 and P.degree == (p - 1) * (q - 1) // 2


def _s3_params(pmax=9):
    out = []
    for p in range(1, pmax + 1):
        for r in range((p + 1) // 2):
            for q in range(p):
                for s in range(p):
                    try:
                        D = dg.from_standard_form(p, q, r, s)
                    except OneOneError:
                        continue
                    if abs(D.offset[1]) == 1:
                        out.append((p, q, r, s))
    return out


S3_PARAMS = _s3_params()


@st.composite
def s3_standard(draw):
    return dg.from_standard_form(*draw(st.sampled_from(S3_PARAMS)))


def test_s3_corpus_nonempty():
    assert len(S3_PARAMS) > 100


@given(s3_standard())
def test_alexander_normalized_and_verdicts_consistent(D):
    P = floer.alexander_polynomial(D)
    assert P.is_symmetric() and P(1) == 1
    v = floer.lspace_verdict(D)
    if v != "NotByThisDiagram":
        # L-space knots have coefficients +-1 alternating in sign
        cs = [c for _, c in P.coeffs]
        assert all(abs(c) == 1 for c in cs)
        assert all(a == -b for a, b in zip(cs, cs[1:]))
    assert floer.alexander_polynomial(dg.reflect(D)) == P
