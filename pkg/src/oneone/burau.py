"""Alexander polynomial of a braid closure from the reduced Burau representation.

Independent of the diagram machinery; used as an oracle for S^3 inclusions.
"""
import sympy as sp

from .floer import LaurentPolynomial, symmetrize

_t = sp.Symbol("t")


def _reduced(n, i):
    """Reduced Burau matrix of sigma_i (1-based) on n strands, size n - 1."""
    M = sp.eye(n - 1)
    k = i - 1
    M[k, k] = -_t
    if k > 0:
        M[k, k - 1] = 1
    if k < n - 2:
        M[k, k + 1] = _t
    return M


def burau_alexander(word, n):
    """Delta(t) of the closure of ``word`` (signed generator indices) on n strands."""
    if n == 1:
        return LaurentPolynomial(((0, 1),))
    M = sp.eye(n - 1)
    for g in word:
        G = _reduced(n, abs(g))
        M = M * (G if g > 0 else G.inv())
    d = (sp.eye(n - 1) - M).det(method="berkowitz")
    expr = sp.cancel(sp.expand(d) * (1 - _t) / (1 - _t ** n))
    num, den = sp.fraction(expr)
    dp = sp.Poly(den, _t)
    if len(dp.terms()) != 1:
        raise ValueError("Burau quotient is not a Laurent polynomial")
    (deg,), c = dp.terms()[0]
    terms = []
    for (e,), v in sp.Poly(num, _t).terms():
        q = sp.Rational(v, c)
        if q.q != 1:
            raise ValueError("non-integral Burau coefficient")
        terms.append((e - deg, int(q)))
    return symmetrize(LaurentPolynomial.from_terms(terms))


def bridge_braid_alexander(K):
    return burau_alexander(K.word(), K.omega)
