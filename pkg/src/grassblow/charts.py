"""Van der Waerden charts Gamma_l^tau : C^{p(n-p)} -> U_l and their closed forms.

Assumes p <= s (the other half is reached by the DUAL symmetry).  With
r = min(p, n-s) there are r pivot steps: the first r-l ("bottom", pivots b)
parametrize the lower right block of U_l, the last l ("top", pivots a) the
upper left block.

Chart coordinates are keyed by tuples:
  ('x', i, j), ('y', i, j)          the free blocks X~, Y~
  ('b', i, j), ('a', i, j)          pivots of bottom / top steps
  ('xi', k, i, j)                   xi^{(k)}_{ij} of step k (1-based)
"""

from dataclasses import dataclass
from fractions import Fraction
import random

from .errors import ParamError
from .indices import (check_params, enumerate_stratum, I_k, I_star, I_mu_nu,
                      I_star_mu_nu)
from .linalg import RatMatrix
from .plucker import plucker_vector, reversal_sign, blowup_map, minor


@dataclass(frozen=True)
class ChartIndex:
    s: int
    p: int
    n: int
    l: int
    rows: tuple  # i_1..i_r
    cols: tuple  # j_1..j_r

    @property
    def r(self):
        return min(self.p, self.n - self.s)

    @property
    def m1(self):
        return self.r - self.l

    def __post_init__(self):
        s, p, n, l = self.s, self.p, self.n, self.l
        check_params(s, p, n)
        if p > s:
            raise ParamError("charts are built for p <= s (apply DUAL first)")
        r = min(p, n - s)
        if not 0 <= l <= r:
            raise ParamError(f"l={l} outside [0,{r}]")
        if len(self.rows) != r or len(self.cols) != r:
            raise ParamError(f"tau must have {r} columns")
        if len(set(self.rows)) != r or len(set(self.cols)) != r:
            raise ParamError("tau rows/cols must not repeat")
        m1 = r - l
        for t in range(r):
            i, j = self.rows[t], self.cols[t]
            if t < m1:
                ok = (l + 1 <= i <= p) and (s + l + 1 <= j <= n)
            else:
                ok = (1 <= i <= l) and (1 <= j <= s - p + l)
            if not ok:
                raise ParamError(f"tau column {t+1}=({i},{j}) violates J_l membership")

    def groups(self):
        """(first step, last step, pivot letter, row range, col range) per block."""
        s, p, n, l = self.s, self.p, self.n, self.l
        return [
            (1, self.m1, "b", list(range(l + 1, p + 1)), list(range(s + l + 1, n + 1))),
            (self.m1 + 1, self.r, "a", list(range(1, l + 1)), list(range(1, s - p + l + 1))),
        ]

    def pivot(self, k):
        """Pivot variable name of step k."""
        i, j = self.rows[k - 1], self.cols[k - 1]
        return ("b" if k <= self.m1 else "a", i, j)

    def variables(self):
        s, p, n, l = self.s, self.p, self.n, self.l
        out = [("x", i, j) for i in range(1, l + 1) for j in range(s + l + 1, n + 1)]
        out += [("y", i, j) for i in range(l + 1, p + 1) for j in range(1, s - p + l + 1)]
        for k0, k1, _, R, C in self.groups():
            for k in range(k0, k1 + 1):
                usedR = self.rows[k0 - 1:k]
                usedC = self.cols[k0 - 1:k]
                ik, jk = self.rows[k - 1], self.cols[k - 1]
                out.append(self.pivot(k))
                out += [("xi", k, ik, t) for t in C if t not in usedC]
                out += [("xi", k, t, jk) for t in R if t not in usedR]
        return out


def canonical_tau(s, p, n, l):
    """The main chart: rows (l+1..l+m1, l, ..., 1), cols (s+l+1.., s-p+l, ..., s-p+1)."""
    r = min(p, n - s)
    m1 = r - l
    rows = tuple(range(l + 1, l + m1 + 1)) + tuple(range(l, 0, -1))
    cols = tuple(range(s + l + 1, s + l + m1 + 1)) + tuple(range(s - p + l, s - p, -1))
    return ChartIndex(s, p, n, l, rows, cols)


def random_point(chart, rng=None, num=6, den=5, nonzero_pivots=True):
    rng = rng or random.Random(0)
    pt = {}
    for v in chart.variables():
        while True:
            x = Fraction(rng.randint(-num, num), rng.randint(1, den))
            if x != 0 or not (nonzero_pivots and v[0] in "ab"):
                break
        pt[v] = x
    return pt


def zero_point(chart):
    return {v: Fraction(0) for v in chart.variables()}


def gamma(chart, pt):
    """The p x n matrix Gamma_l^tau(pt)."""
    s, p, n, l = chart.s, chart.p, chart.n, chart.l
    need = set(chart.variables())
    if set(pt) != need:
        missing = need - set(pt)
        extra = set(pt) - need
        raise ParamError(f"chart point shape mismatch (missing {len(missing)}, extra {len(extra)})")
    M = [[Fraction(0)] * n for _ in range(p)]
    # identity blocks
    for q in range(1, l + 1):
        M[q - 1][s + q - 1] = Fraction(1)
    for q in range(1, p - l + 1):
        M[l + q - 1][s - p + l + q - 1] = Fraction(1)
    for (kind, i, j) in [v for v in need if v[0] in "xy"]:
        M[i - 1][j - 1] = pt[(kind, i, j)]
    for k0, k1, _, R, C in chart.groups():
        prod = Fraction(1)
        for k in range(k0, k1 + 1):
            prod *= pt[chart.pivot(k)]
            usedR = chart.rows[k0 - 1:k - 1]
            usedC = chart.cols[k0 - 1:k - 1]
            ik, jk = chart.rows[k - 1], chart.cols[k - 1]
            xi_ = {t: (Fraction(1) if t == ik else Fraction(0) if t in usedR else pt[("xi", k, t, jk)])
                   for t in R}
            om = {t: (Fraction(1) if t == jk else Fraction(0) if t in usedC else pt[("xi", k, ik, t)])
                  for t in C}
            for t in R:
                if xi_[t] == 0:
                    continue
                f = prod * xi_[t]
                row = M[t - 1]
                for u in C:
                    if om[u] != 0:
                        row[u - 1] += f * om[u]
    return RatMatrix(M)


# ---------------------------------------------------------------------------
# closed forms (canonical tau)

def _sgn(e):
    return -1 if e % 2 else 1


def claim_table(s, p, n, l, pt, literal_y_sign=False):
    """List of (family, k, index, closed form value) for the canonical chart.

    Values are in the ascending-column normalisation (see plucker.py).
    """
    ch = canonical_tau(s, p, n, l)
    r = ch.r

    def a(i, j):
        return pt[("a", i, j)]

    def b(i, j):
        return pt[("b", i, j)]

    def xi(k, i, j):
        return pt[("xi", k, i, j)]

    def A(k):
        out = Fraction(1)
        for t in range(1, l - k + 1):
            out *= a(l + 1 - t, s - p + l + 1 - t) ** (l - k + 1 - t)
        return out

    def Bp(k):
        out = Fraction(1)
        for t in range(1, k - l + 1):
            out *= b(l + t, s + l + t) ** (k - l + 1 - t)
        return out

    rows = []
    for k in range(0, r + 1):
        sg = _sgn(k * (p - k))
        if k == l:
            val = Fraction(sg)
        elif k < l:
            val = sg * A(k)
        else:
            val = sg * Bp(k)
        rows.append(("I", k, I_k(s, p, n, k), val))

    # Claim III, k < l
    for k in range(0, l):
        sg = _sgn(k * (p - k))
        mu = s - p + k + 1
        for nu in range(1, s - p + k + 1):
            rows.append(("III", k, I_mu_nu(s, p, n, k, mu, nu), sg * A(k) * xi(r - k, k + 1, nu)))
    # Claim III', 1 <= k <= l-1
    for k in range(1, l):
        sg = _sgn(k * (p - k))
        nu = s + k + 1
        for mu in range(s + 1, s + k + 1):
            val = _sgn(k * (p - k) + s + k + 1 - mu) * A(k) * xi(r - k, mu - s, s - p + k + 1)
            rows.append(("III'", k, I_star_mu_nu(s, p, n, k, mu, nu), val))
        val = -sg * A(k) * (a(k, s - p + k) + xi(r - k, k + 1, s - p + k) * xi(r - k, k, s - p + k + 1))
        rows.append(("III'*", k, I_star(s, p, n, k), val))
    # Claim III'', l+1 <= k <= r
    for k in range(l + 1, r + 1):
        sg = _sgn(k * (p - k))
        mu = s + k
        for nu in range(s + k + 1, n + 1):
            rows.append(("III''", k, I_star_mu_nu(s, p, n, k, mu, nu), sg * Bp(k) * xi(k - l, k, nu)))
    # Claim III''', l+1 <= k <= min(p-1, r)
    for k in range(l + 1, min(p - 1, r) + 1):
        sg = _sgn(k * (p - k))
        nu = s - p + k
        if nu >= 1:
            for mu in range(s - p + k + 1, s + 1):
                val = _sgn(k * (p - k) + mu - s + p - k) * Bp(k) * xi(k - l, mu - s + p, s + k)
                rows.append(("III'''", k, I_mu_nu(s, p, n, k, mu, nu), val))
        if k + 1 <= r:
            val = -sg * Bp(k) * (b(k + 1, s + k + 1) + xi(k - l, k, s + k + 1) * xi(k - l, k + 1, s + k))
            rows.append(("III'''*", k, I_star(s, p, n, k), val))
    # Claim III'''', k = l
    k = l
    for mu in range(s - p + k + 1, s + 1):
        for nu in range(1, s - p + k + 1):
            # moving column nu past the q-1 identity columns left of mu gives
            # exponent mu-s+p-l-1; the literal exponent mu-s+p-l is one off
            e = mu - s + p - l - (0 if literal_y_sign else 1)
            val = _sgn(k * (p - k) + e) * pt[("y", mu - s + p, nu)]
            rows.append(("III''''", k, I_mu_nu(s, p, n, k, mu, nu), val))
    for mu in range(s + 1, s + k + 1):
        for nu in range(s + k + 1, n + 1):
            val = _sgn(k * (p - k) + mu - s - l) * pt[("x", mu - s, nu)]
            rows.append(("III''''", k, I_star_mu_nu(s, p, n, k, mu, nu), val))
    return rows


def _check(s, p, n, l, pt, families):
    ch = canonical_tau(s, p, n, l)
    M = gamma(ch, pt)
    eps = reversal_sign(p)  # descending minors = eps * ascending minors
    bad = []
    for fam, k, I, val in claim_table(s, p, n, l, pt):
        if fam.rstrip("*") not in families and fam not in families:
            continue
        got = minor(M, I)
        if got != eps * val:
            bad.append({"family": fam, "k": k, "index": I, "minor": got, "closed_form": eps * val})
    return bad


CLAIM_III_FAMILIES = ("III", "III'", "III''", "III'''", "III''''")


def verify_claim_I(s, p, n, l, pt):
    """(ok, mismatches) for Claim I at one point."""
    bad = _check(s, p, n, l, pt, ("I",))
    return (not bad, bad)


def verify_claim_III(s, p, n, l, pt):
    bad = _check(s, p, n, l, pt, CLAIM_III_FAMILIES)
    return (not bad, bad)


def divides_check(s, p, n, l, pt):
    """Claim II at a point: P_I / P_{I_k} is what the exact division gives.

    Without the quotient polynomial the pointwise content is only that P_I
    vanishes whenever P_{I_k} does; we check that on points where a pivot is 0.
    """
    ch = canonical_tau(s, p, n, l)
    M = gamma(ch, pt)
    v = plucker_vector(M)
    for k in range(0, ch.r + 1):
        lead = v.coords[I_k(s, p, n, k)]
        if lead == 0:
            if any(v.coords[I] != 0 for I in enumerate_stratum(s, p, n, k)):
                return False
    return True


def sweep(nmax=8, samples=20, seed=0):
    """Run Claims I and III on every normalized (s,p,n), l, with seeded points.

    Returns (number of checks, list of failures)."""
    from .indices import normalized_params
    rng = random.Random(seed)
    checks = 0
    fails = []
    for s, p, n in normalized_params(nmax):
        r = min(p, n - s)
        for l in range(r + 1):
            ch = canonical_tau(s, p, n, l)
            for _ in range(samples):
                pt = random_point(ch, rng)
                for f in (verify_claim_I, verify_claim_III):
                    ok, bad = f(s, p, n, l, pt)
                    checks += 1
                    if not ok:
                        fails.append(((s, p, n, l), bad[:1]))
    return checks, fails


# ---------------------------------------------------------------------------
# C^* weights

def cstar_weights(s, p, n, l, chart=None):
    """Weight of every chart coordinate under Psi(lambda).

    The first top pivot a_{i_{r-l+1} j_{r-l+1}} has weight -1, the first bottom
    pivot b_{i_1 j_1} weight +1, everything else weight 0.
    """
    ch = chart or canonical_tau(s, p, n, l)
    w = {v: 0 for v in ch.variables()}
    if ch.m1 >= 1:
        w[ch.pivot(1)] = 1
    if ch.l >= 1:
        w[ch.pivot(ch.m1 + 1)] = -1
    return w


def psi(s, n, lam):
    """psi_{s,p,n}(lambda) = diag(I_s, lambda I_{n-s}) acting on columns."""
    lam = Fraction(lam)
    return RatMatrix([[(1 if j < s else lam) if i == j else 0 for j in range(n)] for i in range(n)])


def check_weights(s, p, n, l, pt, lam, chart=None):
    """K(Gamma(lambda . pt)) == Psi(lambda) K(Gamma(pt)) as projective data."""
    ch = chart or canonical_tau(s, p, n, l)
    w = cstar_weights(s, p, n, l, ch)
    lam = Fraction(lam)
    scaled = {v: x * lam ** w[v] for v, x in pt.items()}
    lhs = blowup_map(gamma(ch, scaled), s)
    rhs = blowup_map(gamma(ch, pt) @ psi(s, n, lam), s)
    base = blowup_map(gamma(ch, pt), s)
    # the stratum factors are fixed by the lifted action
    return lhs == rhs and lhs[1:] == base[1:]
