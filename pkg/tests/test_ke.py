from fractions import Fraction

import pytest

from grassblow import ke
from grassblow.errors import ParamError
from grassblow.indices import normalized_params
from grassblow.poly import MultiPoly, product_of_affine
from grassblow.polytope import HPolytope


def test_two_rho_examples():
    w = ke.two_rho_P(4, 2, 8)
    assert w.chi == (0, 1)
    assert set(w.eps) == {2} and set(w.tau) == {-2} and set(w.kappa) == {-2}
    # n = 2s = 2p: only chi_1 vanishes; the rest are the criterion thresholds
    assert ke.two_rho_P(4, 4, 8).chi == (0, 3, 4, 3)
    assert set(ke.two_rho_P(4, 4, 8).eps) == {0}
    w = ke.two_rho_P(6, 4, 8)  # n-s < p branch
    assert w.chi == (0, 1)
    assert w.kappa == (4, 4) and w.tau == (-4, -4)
    # p = n-s: the two branches give the same chi coefficients
    m = Fraction(8, 2)
    assert ke.two_rho_P(5, 3, 8).chi == tuple((m - 3 + i - 1) * (3 + 1 - i) for i in (1, 2, 3))


def test_density_matches_crt0():
    for s, n in [(4, 6), (5, 9), (6, 12), (3, 5)]:
        x1, x2 = MultiPoly.var(2, 0), MultiPoly.var(2, 1)
        want = ((2 * x2 - x1 + 2) ** 2 * (x2 - x1 + n - s + 1) ** (n - s - 2)
                * (-x2 + n - s - 1) ** (n - s - 2) * (x1 - x2 + s - 1) ** (s - 2)
                * (x2 + s + 1) ** (s - 2))
        assert ke.dh_density(s, 2, n) == want


def test_density_matches_swapped_crt0():
    for p, n in [(3, 8), (4, 10), (3, 7)]:
        s = n - 2
        x1, x2 = MultiPoly.var(2, 0), MultiPoly.var(2, 1)
        want = ((2 * x2 - x1 + 2) ** 2 * (x2 - x1 + p + 1) ** (p - 2) * (-x2 + p - 1) ** (p - 2)
                * (x1 - x2 + n - p - 1) ** (n - p - 2) * (x2 + n - p + 1) ** (n - p - 2))
        assert ke.dh_density(s, p, n) == want


def test_density_rank_one_absolute():
    for p, n in [(2, 5), (3, 8), (1, 2)]:
        xt = MultiPoly.var(1, 0)
        m = Fraction(n, 2)
        want = (m - xt) ** (p - 1) * (m + xt) ** (n - p - 1)
        assert ke.dh_density(n - 1, p, n, absolute=True) == want


def test_density_matches_criterion_product():
    for s, p, n in [(4, 4, 8), (5, 3, 8), (6, 4, 9)]:
        r = n - s
        const, facs = ke.criterion_density(s, p, n)
        got = product_of_affine(facs, r - 1) * const
        c = ke.chi_shift(s, p, n)
        X = [MultiPoly.const(r - 1, c[0])] + [MultiPoly.var(r - 1, i) for i in range(r - 1)] \
            + [MultiPoly.const(r - 1, 0)]
        d = [X[i + 1] - X[i] for i in range(r)]
        want = MultiPoly.const(r - 1, 1)
        for i in range(r):
            for j in range(i + 1, r):
                want = want * (d[i] - d[j]) ** 2
            want = want * (Fraction(n, 2) + d[i]) ** (s + p - n) * (Fraction(n, 2) - d[i]) ** (s - p)
        assert got == want


def test_density_positive_at_barycenter():
    for s, p, n in normalized_params(10):
        if 2 <= n - s <= p <= s and n - s >= 3:
            P = ke.criterion_polytope(s, p, n)
            V = P.vertices()
            bc = [sum(v[i] for v in V) / len(V) for i in range(P.d)]
            const, facs = ke.criterion_density(s, p, n)
            assert (product_of_affine(facs, P.d) * const).evaluate(bc) > 0


def test_M224():
    r = ke.ke_test_M(2, 2, 4)
    assert r.ke
    assert r.certificate["int_rho"] == Fraction(32, 3)
    assert r.certificate["int_x2_rho"] == 16


def test_usd_symmetry_of_moments():
    for spn in [(3, 3, 6), (4, 4, 8), (4, 3, 8)]:
        s, p, n, _ = ke.normalize_M(*spn)
        r = n - s
        c = ke.criterion_integrals(s, p, n)
        for k in range(2, r + 1):
            assert c[f"int_x{k}_rho"] == c[f"int_x{r + 2 - k}_rho"]


def test_T_examples():
    assert ke.ke_test_T(6, 2, 12).ke
    r = ke.ke_test_T(5, 2, 9)
    assert not r.ke and r.certificate["int_x1_rho"] != 0
    assert ke.ke_test_T(1, 1, 2).ke
    with pytest.raises(ParamError, match="not Fano"):
        ke.ke_test_T(5, 3, 10)


def test_Q_dual_regions():
    q = ke.build_Q_and_dual(7, 3, 8, "T")["Q_dual"]
    assert q.vertices() == [(-1,), (1,)]
    D = HPolytope(2, [((-1, 0), 1), ((1, 0), 1), ((0, 1), 1), ((-1, 1), 1), ((1, -2), 2)])
    for spn in [(6, 2, 12), (7, 3, 9)]:
        assert ke.build_Q_and_dual(*spn, "T")["Q_dual"].vertices() == D.vertices()


def test_M_delta_is_shifted_dual():
    for s, p, n in normalized_params(10):
        if 2 <= n - s <= p <= s:
            c = ke.chi_shift(s, p, n)
            q = ke.build_Q_and_dual(s, p, n, "M")["Q_dual"].vertices()
            shifted = sorted(tuple(x + ci for x, ci in zip(v, c[1:])) for v in q)
            assert shifted == ke.criterion_polytope(s, p, n).vertices()


def test_normalization_chain():
    assert ke.normalize_M(3, 5, 8) == (5, 3, 8, ["Dual", "Usd"])
    assert ke.normalize_M(6, 2, 10) == (8, 4, 10, ["swap"])
    s, p, n, trail = ke.normalize_M(2, 6, 9)
    assert 2 <= n - s <= p <= s or min(p, n - s) == 1


def test_certificate_json():
    js = ke.ke_test_M(3, 3, 6).to_json()
    assert '"decision": "KE"' in js and "/" in js
