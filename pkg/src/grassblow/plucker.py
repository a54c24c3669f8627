"""Plucker coordinates, the stratum projections F_s^k and the blow-up map K_{s,p,n}.

Convention: P_I for I = (i_1 > ... > i_p) is the determinant of the p x p
submatrix whose columns are taken in the listed (descending) order.  The other
natural choice (ascending) differs by the global sign (-1)^{p(p-1)/2}; it is
available through ``order="ascending"`` because the chart closed forms are
stated in that normalisation (see charts.py).
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError, ParamError
from .indices import enumerate_full, in_stratum, check_params
from .linalg import RatMatrix, det, Q


def reversal_sign(p):
    """Sign relating descending- and ascending-column minors."""
    return -1 if (p * (p - 1) // 2) % 2 else 1


def minor(M, I, order="descending"):
    cols = list(I) if order == "descending" else sorted(I)
    return det(M.columns(cols))


@dataclass
class PluckerVector:
    p: int
    n: int
    coords: dict = field(default_factory=dict)

    def __getitem__(self, I):
        return self.coords[tuple(I)]

    def is_zero(self):
        return all(v == 0 for v in self.coords.values())

    def as_list(self):
        return [self.coords[I] for I in enumerate_full(self.p, self.n)]

    def proportional(self, other):
        return proportional(self.as_list(), other.as_list())


def as_matrix(M):
    return M if isinstance(M, RatMatrix) else RatMatrix(M)


def plucker_vector(M, order="descending"):
    M = as_matrix(M)
    p, n = M.rows, M.cols
    if not 0 < p < n:
        raise ParamError(f"need a p x n matrix with 0<p<n, got {p}x{n}")
    return PluckerVector(p, n, {I: minor(M, I, order) for I in enumerate_full(p, n)})


def project_stratum(v, s, k):
    """Restriction of the Plucker vector to I^k_{s,p,n} (dict, canonical order)."""
    check_params(s, v.p, v.n)
    if not 0 <= k <= v.p:
        raise ParamError(f"k={k} outside [0,{v.p}]")
    return {I: c for I, c in v.coords.items() if in_stratum(I, s, k)}


def normalize(vals):
    """Divide by the first nonzero entry; None for the zero vector."""
    for x in vals:
        if x != 0:
            return [Fraction(y) / x for y in vals]
    return None


def proportional(u, v):
    """Projective equality of two coordinate lists (both nonzero)."""
    a, b = normalize(u), normalize(v)
    return a is not None and a == b


def blowup_map(M, s):
    """(e, f^0, ..., f^p): full Plucker point and every stratum point.

    Each component is a normalized list (first nonzero coordinate = 1) in the
    canonical index order.  Empty strata are points and come back as [].
    """
    v = plucker_vector(M)
    full = normalize(v.as_list())
    if full is None:
        raise DomainError("rank-deficient matrix: not a point of G(p,n)")
    out = [full]
    for k in range(v.p + 1):
        proj = project_stratum(v, s, k)
        if not proj:
            out.append([])
            continue
        nv = normalize(list(proj.values()))
        if nv is None:
            raise DomainError(f"outside domain of K_(s,p,n): stratum k={k} vanishes identically")
        out.append(nv)
    return tuple(out)


def parse_matrix_text(text):
    """Line format: first line 'p n', then p rows of n rationals."""
    lines = [ln.split("#")[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParamError("empty matrix file")
    try:
        p, n = (int(t) for t in lines[0].split())
    except ValueError:
        raise ParamError("first line must be 'p n'")
    rows = [[Q(t) for t in ln.split()] for ln in lines[1:]]
    if len(rows) != p or any(len(r) != n for r in rows):
        raise ParamError(f"expected {p} rows of {n} entries")
    return RatMatrix(rows)


def matrix_text(M):
    M = as_matrix(M)
    out = [f"{M.rows} {M.cols}"]
    for r in M.a:
        out.append(" ".join(str(x) for x in r))
    return "\n".join(out) + "\n"


def random_matrix(rng, p, n, num=5, den=4):
    """Random rational matrix with small numerators/denominators."""
    return RatMatrix([[Fraction(rng.randint(-num, num), rng.randint(1, den)) for _ in range(n)]
                      for _ in range(p)])


def three_term(v, a, b, c, d, S=()):
    """P_{S ab} P_{S cd} - P_{S ac} P_{S bd} + P_{S ad} P_{S bc} with the
    sub-indices sorted decreasingly (S a tuple of extra columns)."""

    def P(*xs):
        I = tuple(sorted(set(S) | set(xs), reverse=True))
        return v.coords[I]

    return P(a, b) * P(c, d) - P(a, c) * P(b, d) + P(a, d) * P(b, c)
