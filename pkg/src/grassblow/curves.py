"""T-invariant curves on T_{s,p,n} and their intersection numbers.

A curve is identified by a CurveId (family + parameters).  Its class is stored
as the pairing vector against the ambient generators

    H, D-1, ..., D-r, D+1, ..., D+r

read off the per-family tables.  Every table term carries the guard
1 <= i <= r; terms whose index leaves that range are dropped.

antik_degree pairs the vector with the canonical class and compares against
the closed-form value for the family; a disagreement raises CrossCheckError.
"""

from dataclasses import dataclass

from .errors import CrossCheckError, ParamError
from .indices import rank
from . import picard as pic

FAMILIES = ("gamma", "zeta", "zeta_uv", "delta", "Delta")


@dataclass(frozen=True)
class CurveId:
    family: str
    l: int
    j: int = 0          # zeta^l_j
    k: int = 0          # zeta^{l,k}_{u,v}
    u: int = 0
    v: int = 0
    m1: int = 0         # delta / Delta
    m2: int = 0

    def label(self):
        f, l = self.family, self.l
        if f == "gamma":
            return f"gamma_{l}"
        if f == "zeta":
            return f"zeta^{l}_{self.j}"
        if f == "zeta_uv":
            return f"zeta^{{{l},{self.k}}}_{{{self.u},{self.v}}}"
        return f"{f}^{l}_{{{self.m1},{self.m2}}}"


@dataclass
class CurveClass:
    s: int
    p: int
    n: int
    H: int
    Dminus: tuple
    Dplus: tuple

    def vector(self):
        return (self.H,) + tuple(self.Dminus) + tuple(self.Dplus)

    def pair_ambient(self, name):
        if name == "H":
            return self.H
        i = int(name[2:])
        return (self.Dminus if name.startswith("D-") else self.Dplus)[i - 1]

    def pair(self, cls):
        """Intersection number with a DivisorClass on T (basis coefficients)."""
        return sum(c * self.pair_ambient(g) for g, c in zip(cls.basis.gens, cls.coeffs))


# ---------------------------------------------------------------------------
# enumeration

def _zeta_uv_ok(s, p, n, r, l, k, u, v):
    if l == 0:
        return 1 <= k <= r and ((u == k and s + k + 1 <= v <= n)
                                or (v == s + k and k + 1 <= u <= p))
    if l == r:
        return 1 <= k <= r and ((u == r - k + 1 and 1 <= v <= s - p + r - k)
                                or (v == s - p + r - k + 1 and 1 <= u <= r - k))
    if 1 <= k <= r - l:
        return ((u == l + k and s + l + k + 1 <= v <= n)
                or (v == s + l + k and l + k + 1 <= u <= p))
    if r - l + 1 <= k <= r:
        return ((u == r - k + 1 and 1 <= v <= s - p + r - k)
                or (v == s - p + r - k + 1 and 1 <= u <= r - k))
    return False


def validate(s, p, n, c):
    pic.t_variant(s, p, n)
    r = rank(s, p, n)
    f, l = c.family, c.l
    if f not in FAMILIES:
        raise ParamError(f"unknown curve family {f!r}")
    if not 0 <= l <= r:
        raise ParamError(f"l={l} outside [0,{r}]")
    if f == "gamma":
        if l > r - 1:
            raise ParamError(f"gamma_l needs 0<=l<=r-1={r - 1}, got l={l}")
    elif f == "zeta":
        j = c.j
        if l == 0 or l == r:
            ok = 2 <= j <= r
        else:
            ok = 2 <= j <= r - l or r - l + 2 <= j <= r
        if not ok:
            raise ParamError(f"zeta^{l}_j: j={j} outside its range for r={r}")
    elif f == "zeta_uv":
        if not _zeta_uv_ok(s, p, n, r, l, c.k, c.u, c.v):
            raise ParamError(f"zeta^{{{l},{c.k}}}_{{{c.u},{c.v}}} violates the (k,u,v) branch conditions")
    elif f == "delta":
        if l < r:
            ok = 1 <= c.m1 <= p - l and 1 <= c.m2 <= s - p + l
        else:
            ok = n - s < p and 1 <= c.m1 <= s + p - n and 1 <= c.m2 <= n - p
        if not ok:
            raise ParamError(f"delta^{l}_{{m1,m2}}=({c.m1},{c.m2}) out of range")
    else:
        if l == 0:
            raise ParamError("Delta^l needs l>=1")
        if l < r:
            ok = 1 <= c.m1 <= n - s - l and 1 <= c.m2 <= l
        else:
            ok = p < n - s and 1 <= c.m1 <= n - s - r and 1 <= c.m2 <= r
        if not ok:
            raise ParamError(f"Delta^{l}_{{m1,m2}}=({c.m1},{c.m2}) out of range")
    return c


def enumerate_curves(s, p, n):
    pic.t_variant(s, p, n)
    r = rank(s, p, n)
    out = [CurveId("gamma", l) for l in range(r)]
    for l in range(r + 1):
        for j in range(2, r + 1):
            if l in (0, r) or j <= r - l or j >= r - l + 2:
                out.append(CurveId("zeta", l, j=j))
        for k in range(1, r + 1):
            for u in range(1, p + 1):
                for v in range(1, n + 1):
                    if _zeta_uv_ok(s, p, n, r, l, k, u, v):
                        out.append(CurveId("zeta_uv", l, k=k, u=u, v=v))
        if l < r:
            out += [CurveId("delta", l, m1=a, m2=b)
                    for a in range(1, p - l + 1) for b in range(1, s - p + l + 1)]
            if l >= 1:
                out += [CurveId("Delta", l, m1=a, m2=b)
                        for a in range(1, n - s - l + 1) for b in range(1, l + 1)]
        else:
            if n - s < p:
                out += [CurveId("delta", l, m1=a, m2=b)
                        for a in range(1, s + p - n + 1) for b in range(1, n - p + 1)]
            if p < n - s:
                out += [CurveId("Delta", l, m1=a, m2=b)
                        for a in range(1, n - s - r + 1) for b in range(1, r + 1)]
    return out


# ---------------------------------------------------------------------------
# pairing tables

def curve_class(s, p, n, c):
    validate(s, p, n, c)
    r = rank(s, p, n)
    dm, dp = [0] * r, [0] * r

    def put(vec, i, val):
        if 1 <= i <= r:
            vec[i - 1] += val

    def second_diff(vec, i):        # -1, 2, -1 at i-1, i, i+1
        put(vec, i - 1, -1)
        put(vec, i, 2)
        put(vec, i + 1, -1)

    def hook(vec, a, b):            # -1 at a, +1 at a+1, +1 at b, -1 at b+1
        put(vec, a, -1)
        put(vec, a + 1, 1)
        put(vec, b, 1)
        put(vec, b + 1, -1)

    f, l = c.family, c.l
    H = 0
    if f == "gamma":
        H = 1
        put(dm, l + 1, 1)
        put(dm, l + 2, -1)
        put(dp, r - l, 1)
        put(dp, r - l + 1, -1)
    elif f == "zeta":
        j = c.j
        if l == 0:
            second_diff(dm, j)
        elif l == r:
            second_diff(dp, j)
        elif j <= r - l:
            second_diff(dm, l + j)
        else:
            second_diff(dp, j)
    elif f == "zeta_uv":
        k, u, v = c.k, c.u, c.v
        if l < r and k <= r - l:
            # block W, pivot row l+k, pivot column s+l+k
            base = l + k
            if (u == base and v == s + base + 1) or (v == s + base and u == base + 1):
                second_diff(dm, base + 1)
            elif u == base:
                hook(dm, base, v - s)
            else:
                hook(dm, base, u)
        else:
            # block Z (also every k when l = r)
            if (u == r - k + 1 and v == s - p + r - k) or (v == s - p + r - k + 1 and u == r - k):
                second_diff(dp, k + 1)
            elif u == r - k + 1:
                hook(dp, k, s - p + r + 1 - v)
            else:
                hook(dp, k, r + 1 - u)
    elif f == "delta":
        H = 1
        if l < r:
            put(dm, l + c.m1, 1)
            put(dm, l + c.m1 + 1, -1)
            put(dp, r - l + c.m2, 1)
            put(dp, r - l + c.m2 + 1, -1)
        else:
            put(dp, c.m2, 1)
            put(dp, c.m2 + 1, -1)
    else:  # Delta
        H = 1
        if l < r:
            put(dm, l + c.m1, 1)
            put(dm, l + c.m1 + 1, -1)
            put(dp, r - l + c.m2, 1)
            put(dp, r - l + c.m2 + 1, -1)
        else:
            put(dp, c.m2, 1)
            put(dp, c.m2 + 1, -1)
    return CurveClass(s, p, n, H, tuple(dm), tuple(dp))


# ---------------------------------------------------------------------------
# closed forms for -K . curve

def closed_form(s, p, n, c):
    validate(s, p, n, c)
    r = rank(s, p, n)
    f, l = c.family, c.l
    if f == "gamma":
        if r == 1:
            return 2
        return 0 if 1 <= l <= r - 2 else 1
    if f == "zeta":
        j = c.j
        if l == 0 or l == r:
            return 3 if j == r else 2
        if j <= r - l:
            return 3 if j == r - l else 2
        return 3 if j == r else 2
    if f == "zeta_uv":
        k, u, v = c.k, c.u, c.v
        if l < r and k <= r - l:
            # l = 0 is the same table with l = 0
            if u == l + k:
                if v <= r + s - 1:
                    return 2 * (v - s - l - k)
                if v == r + s:
                    return 2 * (r - l - k) + 1
                return n - s + p - 2 * (l + k) + 1 if k <= r - l - 1 else n - s + p - 2 * r
            if u <= r - 1:
                return 2 * (u - l - k)
            if u == r:
                return 2 * (r - l - k) + 1
            return n - s + p - 2 * (l + k) + 1 if k <= r - l - 1 else n - s + p - 2 * r
        if u == r - k + 1:
            if v >= s - p + 2:
                return 2 * (s - p + r - k + 1 - v)
            if v == s - p + 1:
                return 2 * (r - k) + 1
            return 2 * (r - k) + s - p + 1 if k <= r - 1 else s - p
        if u >= 2:
            return 2 * (r - k + 1 - u)
        return 2 * (r - k) + 1
    m1, m2 = c.m1, c.m2
    if f == "delta":
        if l == 0:
            if m1 <= r - 1:
                return 2 * m1 + s - p - 1
            return 2 * r + s - p if m1 == r else n
        if l == r:
            if m2 <= r - 1:
                return 2 * m2 + s + p - n - 1
            return n - s + p if m2 == r else n
        a = 0 if m1 <= r - l - 1 else (1 if m1 == r - l else 2)
        b = 0 if m2 <= l - 1 else (1 if m2 == l else 2)
        table = [[2 * m1 + 2 * m2 - 2, 2 * m1 + 2 * l - 1, 2 * m1 + 2 * l - 1 + s - p],
                 [2 * (r - l + m2) - 1, 2 * r, 2 * r + s - p],
                 [2 * (r - l + m2) - 1 + s + p - n, n - s + p, n]]
        return table[a][b]
    # Delta
    if l == r:
        return 2 * m2 + n - s - p - 1 if m2 <= r - 1 else n - s + p
    a = 0 if m1 <= r - l - 1 else (1 if m1 == r - l else 2)
    b = 0 if m2 <= l - 1 else 1
    table = [[2 * m1 + 2 * m2 - 2, 2 * m1 + 2 * l - 1],
             [2 * (r - l + m2) - 1, 2 * r],
             [2 * (r - l + m2) - 1 + n - s - p, n - s + p]]
    return table[a][b]


def relation_defects(s, p, n, c):
    """In the degenerate variants the pairing with a dropped generator must
    agree with its expression over the basis; list the disagreements."""
    cc = curve_class(s, p, n, c)
    P = pic.T_basis(s, p, n)
    r = P.r
    out = []
    names = []
    if P.variant in (pic.PNS, pic.PSNS):
        names.append(f"D-{r}")
    if P.variant == pic.PSNS:
        names.append(f"D+{r}")
    for g in names:
        lhs = cc.pair_ambient(g)
        rhs = cc.pair(P.named(g))
        if lhs != rhs:
            out.append((g, lhs, rhs))
    return out


def antik_degree(s, p, n, c):
    cc = curve_class(s, p, n, c)
    a = -cc.pair(pic.canonical_T(s, p, n))
    b = closed_form(s, p, n, c)
    if a != b:
        raise CrossCheckError(
            f"-K.{c.label()} on T_({s},{p},{n}): table pairing {a} != closed form {b}")
    return int(a)


def nef_ample_T(s, p, n):
    best = None
    for c in enumerate_curves(s, p, n):
        d = antik_degree(s, p, n, c)
        if best is None or d < best[0]:
            best = (d, c)
    d, w = best
    return {"nef": d >= 0, "ample": d > 0, "min_degree": d,
            "witness": None if d > 0 else w}


def restrict_to_M(cls):
    """Pic(T) -> Pic(M): H -> H_M, D-i -> Dc_i, D+i -> 0."""
    s, p, n = cls.basis.s, cls.basis.p, cls.basis.n
    M = pic.M_basis(s, p, n)
    out = M.zero()
    for g, a in zip(cls.basis.gens, cls.coeffs):
        if g == "H":
            out = out + a * M.H()
        elif g.startswith("D-"):
            out = out + a * M.Dc(int(g[2:]))
    return out


def ample_M(s, p, n):
    """Pairs -K_T - D-1 with the l=0 families (the curves lying in M)."""
    P = pic.T_basis(s, p, n)
    L = -pic.canonical_T(s, p, n) - P.Dm(1)
    degs = []
    for c in enumerate_curves(s, p, n):
        if c.l == 0 and c.family in ("zeta", "zeta_uv", "delta"):
            degs.append((curve_class(s, p, n, c).pair(L), c))
    if not degs:
        # no curve families at all: M is a point (only T_{1,1,2} = P^1 here)
        return {"ample": True, "min_degree": None, "witness": None, "curves": 0}
    d, w = min(degs, key=lambda t: t[0])
    return {"ample": d > 0, "min_degree": int(d), "witness": w, "curves": len(degs)}


def adjunction_identity(s, p, n):
    """-K_M equals the restriction of -K_T - D-1."""
    P = pic.T_basis(s, p, n)
    return restrict_to_M(-pic.canonical_T(s, p, n) - P.Dm(1)) == -pic.canonical_M(s, p, n)
