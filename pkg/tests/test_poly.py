from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from grassblow.errors import ParamError
from grassblow.poly import MultiPoly, parse_poly_text, poly_text

x = MultiPoly.var(1, 0)
coef = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def polys(nvars=2):
    mono = st.tuples(*[st.integers(0, 3)] * nvars)
    return st.dictionaries(mono, coef, max_size=5).map(lambda t: MultiPoly(nvars, t))


def test_square():
    assert (x + 1) ** 2 == x * x + 2 * x + 1


def test_substitute_scaling():
    assert (x ** 3).affine_substitute([[2]]) == 8 * x ** 3


def test_crt_square_has_six_terms():
    x1, x2 = MultiPoly.var(2, 0), MultiPoly.var(2, 1)
    sq = (2 * x2 - x1 + 2) ** 2
    assert len(sq) == 6
    assert all(c.denominator == 1 for c in sq.terms.values())


@given(polys(), polys(), st.tuples(coef, coef))
@settings(max_examples=50, deadline=None)
def test_ring_laws_pointwise(f, g, pt):
    assert (f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt)
    assert (f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt)


@given(polys(), st.lists(st.lists(coef, min_size=2, max_size=2), min_size=2, max_size=2),
       st.lists(coef, min_size=2, max_size=2), st.tuples(coef, coef))
@settings(max_examples=40, deadline=None)
def test_substitution_is_composition(f, A, c, v):
    g = f.affine_substitute(A, c)
    xv = [sum((A[i][j] * v[j] for j in range(2)), Fraction(0)) + c[i] for i in range(2)]
    assert g.evaluate(v) == f.evaluate(xv)


def test_text_roundtrip():
    f = (MultiPoly.var(3, 0) - Fraction(1, 3) * MultiPoly.var(3, 2)) ** 3
    assert parse_poly_text(poly_text(f)) == f


def test_dimension_mismatch():
    with pytest.raises(ParamError):
        MultiPoly.var(2, 0) + MultiPoly.var(3, 0)
