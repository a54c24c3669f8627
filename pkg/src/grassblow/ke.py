"""Kahler-Einstein test for M_{s,p,n} and Fano T_{s,p,n}.

Everything reduces to exact integrals of a Duistermaat-Heckman density over a
rational polytope:

* T, r = 1, n-s = 1 : KE iff int_{-1}^{1} u rho(u) du = 0.
* T, r = 1, p = 1   : KE iff n = 2s (classical; the 1-D integral is reported
                      as a certificate but does not drive the decision).
* T, r = 2          : KE iff int x1 rho = 0 and int x2 rho > 0 over
                      Q* = {-1<=x1<=1, x2<=1, x2-x1<=1, x1-2x2<=2}.
* M, after normalizing to 2 <= n-s <= p <= s: KE iff for 2<=k<=r the
  barycenter coordinate int x_k rho / int rho strictly exceeds
  (n/2-p+k-1)(n-s+1-k).  r = 1 is homogeneous, hence KE.

Densities are only defined up to a positive constant; decisions use signs and
ratios.  The M-side density is the plain Vandermonde-type product in the
absolute coordinates x_2..x_r (x_1 pinned, x_{r+1} = 0), which is the
normalization under which the reference integrals for M_{4,4,8} and
M_{5,5,10} are stated.
"""

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import ParamError
from .indices import check_params, rank
from .linalg import fstr
from .picard import (GENERIC, PSNS, rho_B, rho_Bcheck, t_variant, v_Dcheck,
                     v_Dminus, v_Dplus)
from .poly import product_of_affine
from .polytope import HPolytope, integrate_product_moments

# ---------------------------------------------------------------------------
# 2 rho_P

@dataclass(frozen=True)
class AmbientWeight:
    """Coefficients over chi_1..chi_r, eps_1..eps_r, tau_1..tau_{s-p},
    kappa_1..kappa_{|n-s-p|}."""
    s: int
    p: int
    n: int
    chi: tuple
    eps: tuple
    tau: tuple
    kappa: tuple

    def __post_init__(self):
        r = rank(self.s, self.p, self.n)
        sizes = (len(self.chi), len(self.eps), len(self.tau), len(self.kappa))
        want = (r, r, self.s - self.p, abs(self.n - self.s - self.p))
        if sizes != want:
            raise ParamError(f"basis sizes {sizes} do not match {want}")

    def as_dict(self):
        return {k: [fstr(x) for x in getattr(self, k)] for k in ("chi", "eps", "tau", "kappa")}


def _need_normalized(s, p, n):
    check_params(s, p, n)
    if not (2 * p <= n <= 2 * s):
        raise ParamError(f"({s},{p},{n}) not normalized: need 2p<=n<=2s")


def chi_shift(s, p, n):
    """chi-coefficients of 2 rho_P (the x-offsets of the moment polytope)."""
    _need_normalized(s, p, n)
    m = Fraction(n, 2)
    r = rank(s, p, n)
    if p <= n - s:
        return tuple((s - m + i - 1) * (p + 1 - i) for i in range(1, r + 1))
    return tuple((m - p + i - 1) * (n - s + 1 - i) for i in range(1, r + 1))


def two_rho_P(s, p, n):
    _need_normalized(s, p, n)
    m = Fraction(n, 2)
    r = rank(s, p, n)
    kap = -p if p <= n - s else n - p
    return AmbientWeight(
        s, p, n,
        chi=chi_shift(s, p, n),
        eps=tuple(m - p for _ in range(r)),
        tau=tuple(Fraction(-p) for _ in range(s - p)),
        kappa=tuple(Fraction(kap) for _ in range(abs(n - s - p))),
    )


# ---------------------------------------------------------------------------
# Duistermaat-Heckman density

def _canon(a, b):
    """Fix the sign of an affine form (first nonzero entry positive); return (form, sign)."""
    for t in list(a) + [b]:
        if t != 0:
            sg = 1 if t > 0 else -1
            break
    else:
        raise ParamError("zero affine form in density")
    return (tuple(x * sg for x in a), b * sg), sg


def dh_factors(s, p, n, pinned=None, absolute=False):
    """The DH product as a list of (a, b, k) affine powers in r variables.

    Variables are the Q*-coordinates u_i (so X_i = u_i + chi-shift_i), or the
    absolute X_i when absolute=True.  Returns (const, factors) with
    rho = const * prod (a.x + b)^k.  Forms equal up to sign are merged (const
    picks up the sign); the constant (w_j - z_i) block of the n-s<p branch
    is dropped, as the density is only defined up to a positive constant.
    """
    _need_normalized(s, p, n)
    w2 = pinned or two_rho_P(s, p, n)
    r = rank(s, p, n)
    shift = [Fraction(0)] * r if absolute else list(w2.chi)

    # d_i = X_{i+1} - X_i as affine forms in the r variables
    def X(i):
        if i == r + 1:
            return [Fraction(0)] * r, Fraction(0)
        a = [Fraction(0)] * r
        a[i - 1] = Fraction(1)
        return a, shift[i - 1]

    def d(i):
        (a1, b1), (a0, b0) = X(i + 1), X(i)
        return [x - y for x, y in zip(a1, a0)], b1 - b0

    raw = []
    y, z, w = w2.eps, w2.tau, w2.kappa
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            (ai, bi), (aj, bj) = d(i), d(j)
            diff = [x - t for x, t in zip(ai, aj)]
            raw.append((diff, bi - bj + y[i - 1] - y[j - 1]))
            raw.append((diff, bi - bj + y[j - 1] - y[i - 1]))
    const = Fraction(1)
    for i in range(1, r + 1):
        ai, bi = d(i)
        if p <= n - s:
            for wj in w:
                raw.append((ai, bi + y[i - 1] - wj))
        else:
            for wj in w:
                raw.append((ai, bi - y[i - 1] + wj))
        neg = [-x for x in ai]
        for zj in z:
            raw.append((neg, y[i - 1] - bi - zj))
    merged = {}
    order = []
    for a, b in raw:
        if all(x == 0 for x in a):
            const *= b
            continue
        key, lead = _canon(a, b)
        const *= lead
        if key not in merged:
            merged[key] = 0
            order.append(key)
        merged[key] += 1
    return const, [(key[0], key[1], merged[key]) for key in order]


def dh_density(s, p, n, pinned=None, absolute=False):
    """Expanded MultiPoly version of dh_factors (r variables)."""
    const, facs = dh_factors(s, p, n, pinned, absolute)
    r = rank(s, p, n)
    return product_of_affine(facs, r) * const


def pin_first(factors, value):
    """Substitute variable 0 = value in a factor list and drop it."""
    out, const = [], Fraction(1)
    for a, b, k in factors:
        a2, b2 = tuple(a[1:]), b + a[0] * value
        if all(x == 0 for x in a2):
            const *= b2 ** k
        else:
            out.append((a2, b2, k))
    return const, out


# ---------------------------------------------------------------------------
# Q and its dual

def _t_generators(s, p, n):
    r = rank(s, p, n)
    var = t_variant(s, p, n)
    gens = []
    if var != PSNS:
        gens.append(("B0", rho_B(s, p, n, 0), s - p + 1))
    for j in range(1, r):
        gens.append((f"B{j}", rho_B(s, p, n, j), 2))
    if var == GENERIC:
        gens.append((f"B{r}", rho_B(s, p, n, r), (n - s - p + 1) if r == p else (p - r + 1)))
    for i in range(1, r + 1):
        gens.append((f"v_D-{i}", v_Dminus(s, p, n, i), 1))
    for i in range(1, r + 1):
        gens.append((f"v_D+{i}", v_Dplus(s, p, n, i), 1))
    return gens


def _m_generators(s, p, n):
    r = rank(s, p, n)
    var = t_variant(s, p, n)
    gens = []
    if var != PSNS:
        gens.append(("Bc0", rho_Bcheck(s, p, n, 0), s - p + 1))
    for j in range(1, r):
        gens.append((f"Bc{j}", rho_Bcheck(s, p, n, j), 2))
    if var == GENERIC:
        gens.append((f"Bc{r}", rho_Bcheck(s, p, n, r), (n - s - p + 1) if r == p else (p - r + 1)))
    for i in range(2, r + 1):
        gens.append((f"v_Dc{i}", v_Dcheck(s, p, n, i), 1))
    return gens


def build_Q_and_dual(s, p, n, space="T"):
    """Q as a labelled generator list and Q* = {u : <u, v> <= 1} as an HPolytope.

    T lives over gamma_1..gamma_r, M over gamma_2..gamma_r.
    """
    _need_normalized(s, p, n)
    if space == "T":
        gens = _t_generators(s, p, n)
    elif space == "M":
        if p > s or (p == s and n - s != p):
            raise ParamError(f"M_({s},{p},{n}): need p<=s (p=s only when n=2p)")
        if rank(s, p, n) < 2:
            raise ParamError("M with r=1 is homogeneous: Q lives in a zero-dimensional space")
        gens = _m_generators(s, p, n)
    else:
        raise ParamError(f"unknown space {space!r}")
    Qv = [(name, tuple(Fraction(x, c) for x in v)) for name, v, c in gens]
    dual = HPolytope(len(Qv[0][1]), [(v, 1) for _, v in Qv])
    return {"Q": Qv, "Q_dual": dual}


# ---------------------------------------------------------------------------
# results

@dataclass
class KEResult:
    space: str
    params: tuple
    normalized: tuple
    trail: list
    decision: str
    reason: str
    certificate: dict = field(default_factory=dict)
    conditions: list = field(default_factory=list)

    @property
    def ke(self):
        return self.decision == "KE"

    def to_dict(self, certificate=True):
        out = {
            "space": self.space,
            "params": list(self.params),
            "normalized": list(self.normalized),
            "trail": list(self.trail),
            "decision": self.decision,
            "reason": self.reason,
        }
        if certificate:
            out["certificate"] = {k: fstr(v) for k, v in self.certificate.items()}
            out["conditions"] = list(self.conditions)
        return out

    def to_json(self, certificate=True):
        return json.dumps(self.to_dict(certificate), indent=2, sort_keys=False)


def _executor(threads):
    return ThreadPoolExecutor(max_workers=threads) if threads and threads > 1 else None


def _moments(factors, moment_vars, P, threads=None):
    d = P.d
    mom = [((0,) * d, 1)]
    for k in moment_vars:
        e = [0] * d
        e[k] = 1
        mom.append((tuple(e), 0))
    ex = _executor(threads)
    try:
        return integrate_product_moments(factors, mom, P, executor=ex)
    finally:
        if ex:
            ex.shutdown()


# ---------------------------------------------------------------------------
# M

def normalize_M(s, p, n):
    """Dual, Usd and the (s,p) -> (n-p, n-s) swap; returns (s,p,n, trail)."""
    check_params(s, p, n)
    trail = []
    if 2 * p > n:
        p = n - p
        trail.append("Dual")
    if 2 * s < n:
        s = n - s
        trail.append("Usd")
    if p < n - s:
        s, p = n - p, n - s
        trail.append("swap")
    return s, p, n, trail


def criterion_polytope(s, p, n):
    """Delta in the absolute coordinates x_2..x_r (requires 2<=n-s<=p<=s)."""
    r = n - s
    if not (2 <= r <= p <= s):
        raise ParamError(f"criterion needs 2 <= n-s <= p <= s, got ({s},{p},{n})")
    c = chi_shift(s, p, n)
    x1 = c[0]
    d = r - 1
    rows = []

    def e(i, v=1):  # variable x_i (2<=i<=r) at position i-2
        a = [0] * d
        a[i - 2] = v
        return a

    for i in range(2, r + 1):
        rows.append((e(i), 1 + c[i - 1]))
        rows.append((e(i, -1), 0))
    for j in range(2, r + 1):
        a = [Fraction(0)] * d
        rhs = Fraction(0)
        for idx, coef in ((j - 1, 1), (j, -2), (j + 1, 1)):
            if idx == 1:
                rhs -= coef * x1
            elif idx <= r:
                a[idx - 2] += coef
        rows.append((a, rhs))
    return HPolytope(d, rows)


def criterion_density(s, p, n):
    """(const, factors) of rho in x_2..x_r with x_1 pinned."""
    c = chi_shift(s, p, n)
    const, facs = dh_factors(s, p, n, absolute=True)
    c2, facs = pin_first(facs, c[0])
    return const * c2, facs


def thresholds(s, p, n):
    m = Fraction(n, 2)
    return {k: (m - p + k - 1) * (n - s + 1 - k) for k in range(2, n - s + 1)}


def criterion_integrals(s, p, n, threads=None):
    """mass and moments of the unnormalized product (no positive constant)."""
    r = n - s
    P = criterion_polytope(s, p, n)
    const, facs = criterion_density(s, p, n)
    vals = [const * v for v in _moments(facs, list(range(r - 1)), P, threads)]
    out = {"int_rho": vals[0]}
    for k in range(2, r + 1):
        out[f"int_x{k}_rho"] = vals[k - 1]
    return out


@lru_cache(maxsize=None)
def _ke_test_M_cached(s, p, n, threads):
    s0, p0, n0 = s, p, n
    s, p, n, trail = normalize_M(s, p, n)
    r = rank(s, p, n)
    if r == 1:
        return KEResult("M", (s0, p0, n0), (s, p, n), trail, "KE",
                        "r=1: homogeneous")
    vals = criterion_integrals(s, p, n, threads)
    th = thresholds(s, p, n)
    mass = vals["int_rho"]
    cert = dict(vals)
    conds = []
    ok = mass > 0
    for k in range(2, r + 1):
        ratio = vals[f"int_x{k}_rho"] / mass
        cert[f"bar_x{k}"] = ratio
        cert[f"threshold_x{k}"] = th[k]
        good = ratio > th[k]
        conds.append(f"bar_x{k} > {fstr(th[k])}: {good}")
        ok = ok and good
    return KEResult("M", (s0, p0, n0), (s, p, n), trail, "KE" if ok else "no-KE",
                    "barycenter criterion", cert, conds)


def ke_test_M(s, p, n, threads=None):
    return _ke_test_M_cached(s, p, n, threads or 1)


# ---------------------------------------------------------------------------
# T

def normalize_T(s, p, n):
    check_params(s, p, n)
    trail = []
    if 2 * p > n:
        p = n - p
        trail.append("DUAL")
    if 2 * s < n:
        s = n - s
        trail.append("USD")
    return s, p, n, trail


def t_case_integrals(s, p, n, threads=None):
    """(polytope, factors, moments) for the T density on Q* (normalized)."""
    P = build_Q_and_dual(s, p, n, "T")["Q_dual"]
    const, facs = dh_factors(s, p, n)
    r = rank(s, p, n)
    vals = [const * v for v in _moments(facs, list(range(r)), P, threads)]
    out = {"int_rho": vals[0]}
    for k in range(1, r + 1):
        out[f"int_x{k}_rho"] = vals[k]
    return out


def ke_test_T(s, p, n, threads=None):
    s0, p0, n0 = s, p, n
    s, p, n, trail = normalize_T(s, p, n)
    r = rank(s, p, n)
    if r >= 3:
        raise ParamError(f"T_({s0},{p0},{n0}) is not Fano (rank {r} >= 3)")
    vals = t_case_integrals(s, p, n, threads)
    res = KEResult("T", (s0, p0, n0), (s, p, n), trail, "", "", dict(vals))
    if r == 1 and n - s == 1:
        ok = vals["int_x1_rho"] == 0
        res.reason = "r=1, n-s=1: barycenter equals 2 rho_P"
        res.conditions = [f"int x1 rho == 0: {ok}"]
    elif r == 1:
        ok = n == 2 * s
        res.reason = "p=1: KE iff n=2s (classical); integral reported for reference"
        res.conditions = [f"n == 2s: {ok}"]
    else:
        z = vals["int_x1_rho"] == 0
        pos = vals["int_x2_rho"] > 0
        ok = z and pos
        res.reason = "r=2: barycenter in 2 rho_P + {x1=0, x2>0}"
        res.conditions = [f"int x1 rho == 0: {z}", f"int x2 rho > 0: {pos}"]
    res.decision = "KE" if ok else "no-KE"
    return res


def is_fano_T(s, p, n):
    return rank(s, p, n) <= 2


def ke_test(s, p, n, space="M", threads=None):
    if space == "M":
        return ke_test_M(s, p, n, threads)
    if space == "T":
        return ke_test_T(s, p, n, threads)
    raise ParamError(f"unknown space {space!r} (use T or M)")
