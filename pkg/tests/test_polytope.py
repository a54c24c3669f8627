import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from grassblow.errors import DomainError
from grassblow.linalg import det
from grassblow.poly import MultiPoly
from grassblow.polytope import (HPolytope, box, integrate, integrate_abs_affine,
                                integrate_product_moments, parse_polytope_text, polytope_text,
                                standard_simplex)

OMEGA = HPolytope(2, [((-1, 0), 0), ((1, 0), 1), ((0, -1), 0), ((-1, 1), 4), ((1, 1), 4)])


def test_square_and_interval():
    sq = box([0, 0], [1, 1])
    assert len(sq.vertices()) == 4
    tri = sq.triangulate()
    assert [S.volume() for S in tri] == [Fraction(1, 2)] * 2
    assert box([-1], [1]).vertices() == [(-1,), (1,)]


def test_omega_plus():
    assert set(OMEGA.vertices()) == {(0, 0), (1, 0), (0, 4), (1, 3)}
    assert OMEGA.volume() == Fraction(7, 2)


def test_standard_simplex_is_itself():
    tri = standard_simplex(3).triangulate()
    assert len(tri) == 1 and tri[0].volume() == Fraction(1, 6)


def test_small_integrals():
    y2 = MultiPoly.var(2, 1)
    assert integrate((y2 - 2) * y2 * y2, OMEGA) == Fraction(593, 60)
    assert integrate_abs_affine((0, 1), -2, y2 * y2, OMEGA) == Fraction(251, 20)
    x = MultiPoly.var(1, 0)
    I = box([-1], [1])
    assert integrate(x * (2 * x + 2) ** 2, I) == Fraction(16, 3)
    assert integrate_abs_affine((1,), 0, (2 * x + 2) ** 2, I) == 6


def test_fast_path_agrees_with_expansion():
    facs = [((Fraction(-1), Fraction(2)), Fraction(2), 2), ((Fraction(1), Fraction(1)), Fraction(3), 3)]
    f = MultiPoly.const(2, 1)
    for a, b, k in facs:
        f = f * MultiPoly.affine(a, b) ** k
    y1 = MultiPoly.var(2, 0)
    m = integrate_product_moments(facs, [((0, 0), 1), ((1, 0), 0)], OMEGA)
    assert m == [integrate(f, OMEGA), integrate(y1 * f, OMEGA)]


def test_errors():
    with pytest.raises(DomainError, match="unbounded"):
        HPolytope(2, [((1, 0), 1), ((0, 1), 1), ((-1, 0), 0)]).vertices()
    with pytest.raises(DomainError, match="empty"):
        HPolytope(1, [((1,), 0), ((-1,), -1)]).vertices()
    with pytest.raises(DomainError, match="lower-dimensional"):
        HPolytope(2, [((1, 0), 0), ((-1, 0), 0), ((0, 1), 1), ((0, -1), 0)]).triangulate()


def test_text_roundtrip():
    P = parse_polytope_text(polytope_text(OMEGA))
    assert P.rows == OMEGA.rows


small = st.fractions(min_value=-2, max_value=2, max_denominator=3)


@given(st.lists(small, min_size=2, max_size=2), st.lists(small, min_size=2, max_size=2))
@settings(max_examples=25, deadline=None)
def test_box_integral_matches_antiderivative(lo, hi):
    lo, hi = [min(a, b) for a, b in zip(lo, hi)], [max(a, b) for a, b in zip(lo, hi)]
    if any(a == b for a, b in zip(lo, hi)):
        return
    x1, x2 = MultiPoly.var(2, 0), MultiPoly.var(2, 1)
    got = integrate(x1 * x1 * x2, box(lo, hi))
    want = (hi[0] ** 3 - lo[0] ** 3) / 3 * (hi[1] ** 2 - lo[1] ** 2) / 2
    assert got == want


def test_volume_positive_random():
    # box cut by random halfspaces that keep the origin strictly inside
    rng = random.Random(4)
    one = MultiPoly.const(3, 1)
    for _ in range(10):
        P = box([-2, -2, -2], [2, 2, 2])
        for _ in range(3):
            a = [rng.randint(-3, 3) for _ in range(3)]
            P = P.with_row(a, rng.randint(1, 4))
        vol = P.volume()
        assert vol > 0 and integrate(one, P) == vol
