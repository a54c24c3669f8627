"""Divisor classes on T_{s,p,n} and M_{s,p,n}.

Everything is written over "ambient" generator names

    T:  H, D+1..D+r, D-1..D-r, B0..Br
    M:  H, Dc1..Dcr, Bc0..Bcr

and reduced onto the Z-basis of the Picard group.  In the degenerate cases
some ambient generators are not basis elements:

    p = n-s < s   (T)  D-r = H - sum_{i<r} (r+1-i) D-i
    p = s = n-s   (T)  additionally D+r = H - sum_{i<r} (r+1-i) D+i
    p = n-s < s   (M)  Dcr = H - r Dc1 - sum_{2<=k<r} (r+1-k) Dck   (r >= 2)
                       Dc1 = H                                  (r = 1)
    p = s = n-s   (M)  additionally H = 0

Coefficients are Fractions so that maps with rational entries can be carried
around; ``DivisorClass.integral`` tells whether a class lies on the lattice.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParamError
from .indices import check_params, rank

GENERIC, PNS, PSNS = "generic", "p=n-s<s", "p=s=n-s"


# ---------------------------------------------------------------------------
# bases

def t_variant(s, p, n):
    check_params(s, p, n)
    if not (2 * p <= n <= 2 * s):
        raise ParamError(
            f"T_({s},{p},{n}) is not normalized (need 2p<=n<=2s); "
            "apply DUAL (p -> n-p) and/or USD (s -> n-s) first")
    if p == s:          # forces n = 2s = 2p here
        return PSNS
    if p == n - s:
        return PNS
    return GENERIC


def m_variant(s, p, n):
    check_params(s, p, n)
    if p > s:
        raise ParamError(f"M_({s},{p},{n}) needs p <= s")
    if p == s:
        if n - s != p:
            raise ParamError(f"M_({s},{p},{n}) with p=s!=n-s has no listed Picard basis")
        return PSNS
    if p == n - s:
        return PNS
    return GENERIC


@dataclass(frozen=True)
class PicBasis:
    space: str          # "T" or "M"
    s: int
    p: int
    n: int

    def __post_init__(self):
        if self.space not in ("T", "M"):
            raise ParamError(f"unknown space {self.space!r}")
        self.variant  # validates

    @property
    def r(self):
        return rank(self.s, self.p, self.n)

    @property
    def variant(self):
        f = t_variant if self.space == "T" else m_variant
        return f(self.s, self.p, self.n)

    @property
    def gens(self):
        r, v = self.r, self.variant
        if self.space == "T":
            plus = [f"D+{i}" for i in range(1, r + 1)]
            minus = [f"D-{i}" for i in range(1, r + 1)]
            if v in (PNS, PSNS):
                minus = minus[:-1]
            if v == PSNS:
                plus = plus[:-1]
            return tuple(["H"] + plus + minus)
        ds = [f"Dc{i}" for i in range(1, r + 1)]
        if v == GENERIC:
            return tuple(["H"] + ds)
        if v == PNS:
            return tuple(["H"] + ds[:-1])
        return tuple(ds[:-1])

    def __len__(self):
        return len(self.gens)

    def zero(self):
        return DivisorClass(self, (Fraction(0),) * len(self))

    def unit(self, name):
        g = self.gens
        return DivisorClass(self, tuple(Fraction(int(x == name)) for x in g))

    # ambient generators --------------------------------------------------
    def H(self):
        if self.space == "M" and self.variant == PSNS:
            return self.zero()
        return self.unit("H")

    def Dp(self, i):
        self._need("T")
        self._range(i, 1, self.r, "D+")
        r = self.r
        if i == r and self.variant == PSNS:
            return self.H() - sum_cls(self, [(r + 1 - k, self.Dp(k)) for k in range(1, r)])
        return self.unit(f"D+{i}")

    def Dm(self, i):
        self._need("T")
        self._range(i, 1, self.r, "D-")
        r = self.r
        if i == r and self.variant in (PNS, PSNS):
            return self.H() - sum_cls(self, [(r + 1 - k, self.Dm(k)) for k in range(1, r)])
        return self.unit(f"D-{i}")

    def Dc(self, i):
        self._need("M")
        self._range(i, 1, self.r, "Dc")
        r = self.r
        if i == r == 1 and self.variant in (PNS, PSNS):
            # Dc1 = D-1|_{D-1} and D-1 = B1 = H here, so Dc1 = H_M
            return self.H()
        if i == r and self.variant in (PNS, PSNS):
            return (self.H() - r * self.Dc(1)
                    - sum_cls(self, [(r + 1 - k, self.Dc(k)) for k in range(2, r)]))
        return self.unit(f"Dc{i}")

    def B(self, j):
        """B-stable divisor B_j (T) or its restriction Bc_j (M)."""
        self._range(j, 0, self.r, "B")
        return divisor_B(self.s, self.p, self.n, j) if self.space == "T" \
            else divisor_Bcheck(self.s, self.p, self.n, j)

    def named(self, name):
        """Class of an ambient generator given by name ('H', 'D+2', 'Dc1', 'B0', ...)."""
        if name == "H":
            return self.H()
        for pre, fn in (("D+", self.Dp), ("D-", self.Dm), ("Dc", self.Dc),
                        ("Bc", self.B), ("B", self.B)):
            if name.startswith(pre):
                return fn(int(name[len(pre):]))
        raise ParamError(f"unknown generator {name!r}")

    def _need(self, space):
        if self.space != space:
            raise ParamError(f"generator only exists on {space}")

    @staticmethod
    def _range(i, lo, hi, what):
        if not (isinstance(i, int) and lo <= i <= hi):
            raise ParamError(f"{what} index {i} outside [{lo},{hi}]")


class DivisorClass:
    __slots__ = ("basis", "coeffs")

    def __init__(self, basis, coeffs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != len(basis):
            raise ParamError(f"{len(coeffs)} coefficients for a basis of size {len(basis)}")
        self.basis, self.coeffs = basis, coeffs

    def _same(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        if other.basis != self.basis:
            raise TypeError(f"cannot combine classes over {self.basis} and {other.basis}")
        return True

    def __add__(self, other):
        if other == 0:
            return self
        self._same(other)
        return DivisorClass(self.basis, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        self._same(other)
        return DivisorClass(self.basis, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return DivisorClass(self.basis, [-a for a in self.coeffs])

    def __mul__(self, k):
        return DivisorClass(self.basis, [Fraction(k) * a for a in self.coeffs])

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, DivisorClass) and other.basis == self.basis
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((self.basis, self.coeffs))

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    @property
    def integral(self):
        return all(c.denominator == 1 for c in self.coeffs)

    def as_dict(self):
        return dict(zip(self.basis.gens, self.coeffs))

    def __repr__(self):
        terms = [f"{c}*{g}" for g, c in zip(self.basis.gens, self.coeffs) if c]
        return " + ".join(terms) if terms else "0"


def sum_cls(basis, terms):
    out = basis.zero()
    for c, d in terms:
        out = out + c * d
    return out


def T_basis(s, p, n):
    return PicBasis("T", s, p, n)


def M_basis(s, p, n):
    return PicBasis("M", s, p, n)


# ---------------------------------------------------------------------------
# B-stable divisors and canonical bundles on T

def divisor_B(s, p, n, j):
    P = T_basis(s, p, n)
    r = P.r
    P._range(j, 0, r, "B")
    if j == 0 and P.variant == PSNS:
        return P.Dp(r)
    if j == r and P.variant in (PNS, PSNS):
        return P.Dm(r)
    return (P.H()
            - sum_cls(P, [(r - j + 1 - i, P.Dp(i)) for i in range(1, r - j + 1)])
            - sum_cls(P, [(j + 1 - i, P.Dm(i)) for i in range(1, j + 1)]))


def canonical_T(s, p, n):
    P = T_basis(s, p, n)
    r = P.r
    K = -n * P.H()
    for i in range(1, r + 1):
        K = K + ((p - i + 1) * (n - s - i + 1) - 1) * P.Dm(i)
        if r == p:
            K = K + ((p - i + 1) * (s - i + 1) - 1) * P.Dp(i)
        else:
            K = K + ((n - p - i + 1) * (n - s - i + 1) - 1) * P.Dp(i)
    return K


def canonical_T_Bform(s, p, n):
    P = T_basis(s, p, n)
    r = P.r
    B = lambda j: divisor_B(s, p, n, j)
    D = -sum_cls(P, [(1, P.Dm(i)) for i in range(1, r + 1)]) \
        - sum_cls(P, [(1, P.Dp(i)) for i in range(1, r + 1)])
    mid = lambda hi: -2 * sum_cls(P, [(1, B(j)) for j in range(1, hi)])
    if P.variant == PSNS:
        return mid(p) + D
    if P.variant == PNS:
        return -(s - p + 1) * B(0) + mid(p) + D
    if p < n - s:
        return -(s - p + 1) * B(0) + mid(p) - (n - s - p + 1) * B(p) + D
    # n-s < p < s, r = n-s
    return -(s - p + 1) * B(0) + mid(r) - (p - r + 1) * B(r) + D


# ---------------------------------------------------------------------------
# M

def divisor_Bcheck(s, p, n, i):
    P = M_basis(s, p, n)
    r = P.r
    P._range(i, 0, r, "Bc")
    if i == r and P.variant in (PNS, PSNS):
        return P.Dc(r)
    if i == 0 and P.variant == PSNS:
        return P.zero()     # empty: D-1 meets B0 = D+r nowhere
    return (P.H() - i * P.Dc(1)
            - sum_cls(P, [(i + 1 - k, P.Dc(k)) for k in range(2, i + 1)]))


def canonical_M(s, p, n):
    P = M_basis(s, p, n)
    r = P.r
    K = -n * P.H() + p * (n - s) * P.Dc(1)
    for i in range(2, r + 1):
        K = K + ((p - i + 1) * (n - s - i + 1) - 1) * P.Dc(i)
    return K


def canonical_M_Bform(s, p, n):
    P = M_basis(s, p, n)
    r = P.r
    B = lambda j: divisor_Bcheck(s, p, n, j)
    D = -sum_cls(P, [(1, P.Dc(i)) for i in range(2, r + 1)])
    mid = lambda hi: -2 * sum_cls(P, [(1, B(j)) for j in range(1, hi)])
    if P.variant == PSNS:
        return mid(p) + D
    if P.variant == PNS:
        return -(s - p + 1) * B(0) + mid(p) + D
    if p < n - s:
        return -(s - p + 1) * B(0) + mid(p) - (n - s - p + 1) * B(p) + D
    return -(s - p + 1) * B(0) + mid(r) - (p - r + 1) * B(r) + D


# ---------------------------------------------------------------------------
# principal divisors (f_k) of the B-semi-invariant functions

def principal_divisors_T(s, p, n):
    """The classes (f_1), ..., (f_r) written out case by case; all must be 0."""
    P = T_basis(s, p, n)
    r, v = P.r, P.variant
    B = lambda j: divisor_B(s, p, n, j)
    out = []
    if v == GENERIC:
        out.append(B(1) - B(0) + P.Dm(1) - sum_cls(P, [(1, P.Dp(i)) for i in range(1, r + 1)]))
        for k in range(2, r + 1):
            out.append(B(k) - 2 * B(k - 1) + B(k - 2) + P.Dm(k) + P.Dp(r + 2 - k))
    elif v == PNS:
        if r == 1:
            out.append(B(1) - B(0) - P.Dp(1))
        else:
            out.append(B(1) - B(0) + P.Dm(1) - sum_cls(P, [(1, P.Dp(i)) for i in range(1, r + 1)]))
            for k in range(2, r):
                out.append(B(k) - 2 * B(k - 1) + B(k - 2) + P.Dm(k) + P.Dp(r + 2 - k))
            out.append(B(r) - 2 * B(r - 1) + B(r - 2) + P.Dp(2))
    else:
        if r == 1:
            out.append(B(1) - B(0))
        elif r == 2:
            out.append(B(1) - B(0) + P.Dm(1) - P.Dp(1))
            out.append(B(2) - 2 * B(1) + B(0))
        else:
            out.append(B(1) - B(0) + P.Dm(1) - sum_cls(P, [(1, P.Dp(i)) for i in range(1, r)]))
            out.append(B(2) - 2 * B(1) + B(0) + P.Dm(2))
            for k in range(3, r):
                out.append(B(k) - 2 * B(k - 1) + B(k - 2) + P.Dm(k) + P.Dp(r + 2 - k))
            out.append(B(r) - 2 * B(r - 1) + B(r - 2) + P.Dp(2))
    return out


def principal_divisors_M(s, p, n):
    """(f_k restricted to M), 2 <= k <= r: Bc_k - 2Bc_{k-1} + Bc_{k-2} + Dc_k,
    the Dc_r term absorbed into Bc_r when Bc_r = Dc_r."""
    P = M_basis(s, p, n)
    r, v = P.r, P.variant
    B = lambda j: divisor_Bcheck(s, p, n, j)
    out = []
    for k in range(2, r + 1):
        c = B(k) - 2 * B(k - 1) + B(k - 2)
        if not (k == r and v in (PNS, PSNS)):
            c = c + P.Dc(k)
        out.append(c)
    return out


# ---------------------------------------------------------------------------
# spherical weight data

def _gvec(r, terms):
    v = [0] * r
    for i, c in terms:
        if 1 <= i <= r:
            v[i - 1] += c
    return tuple(v)


def chi_basis(s, p, n):
    """chi_i as a pair (length-s vector, length-(n-s) vector) of integers."""
    r = rank(s, p, n)
    out = []
    for i in range(1, r + 1):
        a, b = [0] * s, [0] * (n - s)
        if i == 1:
            a[s - p] = 1
            b[0] = -1
        else:
            a[s - p + i - 2] = -1
            a[s - p + i - 1] = 1
            b[i - 2] = 1
            b[i - 1] = -1
        out.append((tuple(a), tuple(b)))
    return out


def rho_B(s, p, n, j):
    r = rank(s, p, n)
    if not 0 <= j <= r:
        raise ParamError(f"B index {j} outside [0,{r}]")
    if r == 1:
        return _gvec(1, [(1, -1 if j == 0 else 1)])
    if j == 0:
        return _gvec(r, [(1, -1), (2, 1)])
    if j == r - 1:
        return _gvec(r, [(r - 1, 1), (r, -2)])
    if j == r:
        return _gvec(r, [(r, 1)])
    return _gvec(r, [(j, 1), (j + 1, -2), (j + 2, 1)])


def v_Dplus(s, p, n, i):
    r = rank(s, p, n)
    if i == 1:
        return _gvec(r, [(1, -1)])
    return _gvec(r, [(1, -1), (r + 2 - i, 1)])


def v_Dminus(s, p, n, i):
    return _gvec(rank(s, p, n), [(i, 1)])


def rho_Bcheck(s, p, n, j):
    """Over gamma_2..gamma_r (tuple of length r-1)."""
    r = rank(s, p, n)
    v = _gvec(r, [(j, 1), (j + 1, -2), (j + 2, 1)])
    return v[1:]


def v_Dcheck(s, p, n, i):
    return _gvec(rank(s, p, n), [(i, 1)])[1:]


def weight_data(s, p, n):
    t_variant(s, p, n)
    r = rank(s, p, n)
    return {
        "r": r,
        "chi": chi_basis(s, p, n),
        "rho_B": [rho_B(s, p, n, j) for j in range(r + 1)],
        "v_Dminus": [v_Dminus(s, p, n, i) for i in range(1, r + 1)],
        "v_Dplus": [v_Dplus(s, p, n, i) for i in range(1, r + 1)],
        "v_Dcheck": [v_Dcheck(s, p, n, i) for i in range(2, r + 1)],
    }


def principal_from_weights_T(s, p, n):
    """(f_k) rebuilt as sum over prime B-stable divisors of <v_D, chi_k> D.

    Identified divisors (B0 = D+r when p=s, Br = D-r when p=n-s) are counted
    once, through B.
    """
    P = T_basis(s, p, n)
    r, v = P.r, P.variant
    out = []
    for k in range(1, r + 1):
        c = P.zero()
        for j in range(r + 1):
            c = c + rho_B(s, p, n, j)[k - 1] * divisor_B(s, p, n, j)
        for i in range(1, r + 1):
            if not (i == r and v in (PNS, PSNS)):
                c = c + v_Dminus(s, p, n, i)[k - 1] * P.Dm(i)
            if not (i == r and v == PSNS):
                c = c + v_Dplus(s, p, n, i)[k - 1] * P.Dp(i)
        out.append(c)
    return out


# ---------------------------------------------------------------------------
# discrete symmetries

class LatticeMap:
    """Linear map Pic(target) -> Pic(source) as images of basis generators."""

    def __init__(self, name, basis, images):
        self.name, self.basis, self.images = name, basis, images

    def __call__(self, c):
        if c.basis != self.basis:
            raise TypeError("class lives on a different basis")
        return sum_cls(self.basis, [(a, self.images[g]) for g, a in zip(self.basis.gens, c.coeffs)])

    def matrix(self):
        """Column j = image of generator j."""
        g = self.basis.gens
        cols = [self.images[x].coeffs for x in g]
        return [[cols[j][i] for j in range(len(g))] for i in range(len(g))]

    @property
    def integral(self):
        return all(im.integral for im in self.images.values())

    def is_involution(self):
        return all(self(self.images[g]) == self.basis.unit(g) for g in self.basis.gens)


def _ambient_map(basis, name, amb):
    """amb: ambient generator name -> image class.  Restrict to basis gens."""
    return LatticeMap(name, basis, {g: amb(g) for g in basis.gens})


def pullback(symmetry, s, p, n):
    if symmetry in ("USD", "DUAL"):
        if symmetry == "USD" and n != 2 * s:
            raise ParamError(f"USD is an automorphism of T_(s,p,n) only for n=2s, got n={n}, s={s}")
        if symmetry == "DUAL" and n != 2 * p:
            raise ParamError(f"DUAL is an automorphism of T_(s,p,n) only for n=2p, got n={n}, p={p}")
        P = T_basis(s, p, n)

        def amb(g):
            if g == "H":
                return P.H()
            i = int(g[2:])
            return P.Dm(i) if g.startswith("D+") else P.Dp(i)

        return _ambient_map(P, symmetry, amb)
    if symmetry in ("Usd", "Dual"):
        if symmetry == "Usd" and n != 2 * s:
            raise ParamError(f"Usd is an automorphism of M_(s,p,n) only for n=2s, got n={n}, s={s}")
        if symmetry == "Dual" and n != 2 * p:
            raise ParamError(f"Dual is an automorphism of M_(s,p,n) only for n=2p, got n={n}, p={p}")
        P = M_basis(s, p, n)
        r = P.r
        psns = P.variant == PSNS

        def amb(g):
            if g == "H":
                return P.H() - sum_cls(P, [(r + 1 - i, P.Dc(i)) for i in range(1, r + 1)])
            i = int(g[2:])
            if i >= 2:
                return P.Dc(r + 2 - i)
            if psns:
                return -sum_cls(P, [(Fraction(i - 1, r), P.Dc(i)) for i in range(2, r + 1)])
            return -sum_cls(P, [(1, P.Dc(i)) for i in range(1, r + 1)])

        return _ambient_map(P, symmetry, amb)
    raise ParamError(f"unknown symmetry {symmetry!r}")


def pullback_B_check(symmetry, s, p, n):
    """B_i -> B_{r-i} (T) / Bc_i -> Bc_{r-i} (M) under the map; list of bools."""
    f = pullback(symmetry, s, p, n)
    P = f.basis
    r = P.r
    rng = range(0, r + 1)
    if P.space == "M" and P.variant == PSNS:
        rng = range(1, r)
    return [f(P.B(i)) == P.B(r - i) for i in rng]


# ---------------------------------------------------------------------------
# sweeps

def lattice_identities(s, p, n):
    """All T-side identities for a normalized triple; dict name -> bool."""
    P = T_basis(s, p, n)
    r = P.r
    res = {}
    res["kan=wk"] = canonical_T(s, p, n) == canonical_T_Bform(s, p, n)
    res["principal"] = all(c.is_zero() for c in principal_divisors_T(s, p, n))
    res["principal_from_weights"] = all(c.is_zero() for c in principal_from_weights_T(s, p, n))
    if P.variant == GENERIC:
        res["H=B0+..."] = P.H() == divisor_B(s, p, n, 0) + sum_cls(
            P, [(r + 1 - i, P.Dp(i)) for i in range(1, r + 1)])
        res["H=Br+..."] = P.H() == divisor_B(s, p, n, r) + sum_cls(
            P, [(r + 1 - i, P.Dm(i)) for i in range(1, r + 1)])
    for sym, ok in (("USD", n == 2 * s), ("DUAL", n == 2 * p)):
        if ok:
            f = pullback(sym, s, p, n)
            res[sym + "^2=id"] = f.is_involution()
            res[sym + ":B"] = all(pullback_B_check(sym, s, p, n))
    return res


def m_lattice_identities(s, p, n):
    """M-side identities (p <= s); dict name -> bool."""
    M_basis(s, p, n)
    res = {}
    res["mkan=mkb"] = canonical_M(s, p, n) == canonical_M_Bform(s, p, n)
    res["principal_M"] = all(c.is_zero() for c in principal_divisors_M(s, p, n))
    for sym, ok in (("Usd", n == 2 * s), ("Dual", n == 2 * p)):
        if ok:
            f = pullback(sym, s, p, n)
            res[sym + "^2=id"] = f.is_involution()
            res[sym + ":B"] = all(pullback_B_check(sym, s, p, n))
    return res


def m_params(nmax, nmin=2):
    """Triples with p <= s for which M has a listed Picard basis."""
    for n in range(nmin, nmax + 1):
        for s in range(1, n):
            for p in range(1, s + 1):
                if p == s and n - s != p:
                    continue
                yield (s, p, n)
