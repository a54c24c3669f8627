"""Exact integration of polynomials over rational convex polytopes.

Pipeline: H-representation -> vertices (every d-subset of inequalities, exact
solve) -> pulling triangulation from the lexicographically least vertex ->
barycentric monomial formula on each simplex

    int_S lambda^b = |det| * prod(b_i!) / (|b| + d)!

where lambda are the d+1 barycentric coordinates and |det| = d! vol(S).

Products of affine forms (all the densities in the KE test) take a faster
route: each form becomes a homogeneous linear form in lambda with integer
coefficients, so the expanded product is homogeneous and every monomial shares
the same (|b|+d)! denominator.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial, lcm

from .errors import DomainError, ParamError
from .linalg import Q, det, rank, rref, solve
from .poly import MultiPoly

MAX_DIM = 6


@lru_cache(maxsize=None)
def fact(k):
    return factorial(k)


@dataclass(frozen=True)
class Simplex:
    verts: tuple  # d+1 points, each a tuple of Fractions

    @property
    def dim(self):
        return len(self.verts) - 1

    def edge_matrix(self):
        v0 = self.verts[0]
        return [[vi[j] - v0[j] for j in range(self.dim)] for vi in self.verts[1:]]

    def jac(self):
        """|det| of the edge matrix, i.e. d! * volume."""
        return abs(det(self.edge_matrix()))

    def volume(self):
        return self.jac() / fact(self.dim)


class HPolytope:
    """{x in Q^d : a.x <= b for every row}."""

    def __init__(self, d, rows):
        if d < 1:
            raise ParamError("polytope dimension must be >= 1")
        self.d = d
        self.rows = []
        for a, b in rows:
            a = tuple(Q(x) for x in a)
            if len(a) != d:
                raise ParamError(f"inequality {a} has wrong length (d={d})")
            self.rows.append((a, Q(b)))
        self._verts = None

    def __repr__(self):
        return f"HPolytope(d={self.d}, {len(self.rows)} inequalities)"

    def with_row(self, a, b):
        return HPolytope(self.d, self.rows + [(a, b)])

    def split(self, a, b):
        """The two halves {a.x <= b} and {a.x >= b}."""
        return self.with_row(a, b), self.with_row([-x for x in a], -Q(b))

    def contains(self, x):
        return all(sum(ai * xi for ai, xi in zip(a, x)) <= b for a, b in self.rows)

    def slack(self, x):
        return [b - sum(ai * xi for ai, xi in zip(a, x)) for a, b in self.rows]

    # -- vertices ---------------------------------------------------------
    def vertices(self):
        if self._verts is None:
            self._verts = self._enumerate()
        return list(self._verts)

    def _enumerate(self):
        d, rows = self.d, self.rows
        if d > MAX_DIM:
            raise ParamError(f"vertex enumeration supports d <= {MAX_DIM}")
        A = [list(a) for a, _ in rows]
        if not rows or rank(A) < d:
            raise DomainError("polytope is unbounded (or empty): constraint normals do not span")
        found = {}
        for S in combinations(range(len(rows)), d):
            x = solve([rows[i][0] for i in S], [rows[i][1] for i in S])
            if x is None:
                continue
            x = tuple(x)
            if x not in found and self.contains(x):
                found[x] = True
        if not found:
            raise DomainError("polytope is empty")
        ray = self.recession_ray()
        if ray is not None:
            raise DomainError(f"polytope is unbounded (recession direction {[str(t) for t in ray]})")
        return sorted(found)

    def recession_ray(self):
        """A nonzero y with a.y <= 0 for all rows, or None (pointed cone case).

        Extreme rays of {Ay <= 0} are cut out by d-1 independent tight rows,
        so checking both generators of each such kernel line is exhaustive.
        """
        d, A = self.d, [a for a, _ in self.rows]
        if d == 1:
            cands = [(Fraction(1),), (Fraction(-1),)]
        else:
            cands = []
            for S in combinations(range(len(A)), d - 1):
                y = kernel_line([A[i] for i in S], d)
                if y is not None:
                    cands += [y, tuple(-t for t in y)]
        for y in cands:
            if all(sum(ai * yi for ai, yi in zip(a, y)) <= 0 for a in A):
                return y
        return None

    def tight(self, x):
        return frozenset(i for i, s in enumerate(self.slack(x)) if s == 0)

    def affine_dim(self):
        return affine_dim(self.vertices())

    # -- triangulation ----------------------------------------------------
    def triangulate(self):
        V = self.vertices()
        if affine_dim(V) < self.d:
            raise DomainError(f"polytope is lower-dimensional (dim {affine_dim(V)} < {self.d})")
        tights = [self.tight(v) for v in V]
        memo = {}

        def facets(face, k):
            out = set()
            for i in range(len(self.rows)):
                G = frozenset(j for j in face if i in tights[j])
                if len(G) >= k and G != face and G not in out:
                    if affine_dim([V[j] for j in G]) == k - 1:
                        out.add(G)
            return sorted(out, key=lambda G: sorted(G))

        def tri(face, k):
            key = face
            if key in memo:
                return memo[key]
            if k == 0:
                res = [(next(iter(face)),)]
            else:
                apex = min(face)  # V is sorted, so the smallest index is lex-least
                res = []
                for G in facets(face, k):
                    if apex in G:
                        continue
                    for s in tri(G, k - 1):
                        res.append((apex,) + s)
            memo[key] = res
            return res

        simplices = tri(frozenset(range(len(V))), self.d)
        return [Simplex(tuple(V[j] for j in s)) for s in simplices]

    def volume(self):
        return sum((s.volume() for s in self.triangulate()), Fraction(0))


def kernel_line(rows, d):
    """Generator of the null space of `rows` if it is one-dimensional."""
    red, piv = rref(rows)
    if len(piv) != d - 1:
        return None
    free = next(c for c in range(d) if c not in piv)
    y = [Fraction(0)] * d
    y[free] = Fraction(1)
    for r, c in enumerate(piv):
        y[c] = -red[r][free]
    return tuple(y)


def affine_dim(points):
    if not points:
        return -1
    p0 = points[0]
    diffs = [[a - b for a, b in zip(p, p0)] for p in points[1:]]
    return rank(diffs) if diffs else 0


def box(lo, hi):
    d = len(lo)
    rows = []
    for i in range(d):
        e = [0] * d
        e[i] = 1
        rows.append((e, hi[i]))
        rows.append(([-x for x in e], -Q(lo[i])))
    return HPolytope(d, rows)


def standard_simplex(d):
    rows = []
    for i in range(d):
        e = [0] * d
        e[i] = -1
        rows.append((e, 0))
    rows.append(([1] * d, 1))
    return HPolytope(d, rows)


# -- integration ------------------------------------------------------------

def integrate_simplex(f, S):
    d = S.dim
    if f.nvars != d:
        raise ParamError(f"polynomial in {f.nvars} variables, simplex of dim {d}")
    A = [[v[j] for v in S.verts] for j in range(d)]
    g = f.affine_substitute(A)
    tot = Fraction(0)
    for b, c in g.terms.items():
        num = 1
        for k in b:
            num *= fact(k)
        tot += c * Fraction(num, fact(sum(b) + d))
    return tot * S.jac()


def integrate(f, P, simplices=None):
    """Exact int_P f dx."""
    if f.nvars != P.d:
        raise ParamError(f"polynomial in {f.nvars} variables, polytope in {P.d}")
    simplices = simplices if simplices is not None else P.triangulate()
    return sum((integrate_simplex(f, S) for S in simplices), Fraction(0))


def integrate_abs_affine(a, b, g, P):
    """int_P |a.x + b| g dx, splitting P along a.x + b = 0."""
    lin = MultiPoly.affine(a, b)
    neg, pos = P.split(a, -Q(b))  # a.x <= -b  /  a.x >= -b
    tot = Fraction(0)
    for half, sgn in ((pos, 1), (neg, -1)):
        try:
            tot += sgn * integrate(lin * g, half)
        except DomainError:
            pass  # empty or lower-dimensional half contributes nothing
    return tot


# -- fast path: products of affine forms ------------------------------------

_SHIFT = 7  # bits per exponent slot in the packed monomial key (degree < 128)


def _hom_int_form(a, b, S):
    """Integer homogeneous linear form in lambda equal to (a.x + b)*scale on S."""
    vals = [sum((ai * vi for ai, vi in zip(a, v)), Fraction(0)) + b for v in S.verts]
    L = lcm(*[v.denominator for v in vals])
    return [int(v * L) for v in vals], L


def _mul_linear(poly, coeffs):
    out = {}
    get = out.get
    for key, c in poly.items():
        for i, a in enumerate(coeffs):
            if a:
                k2 = key + (1 << (_SHIFT * i))
                out[k2] = get(k2, 0) + c * a
    return {k: v for k, v in out.items() if v}


def _unpack(key, m):
    mask = (1 << _SHIFT) - 1
    return [(key >> (_SHIFT * i)) & mask for i in range(m)]


def simplex_product_moments(factors, moments, S):
    """[int_S l(x) prod f_i(x)^k_i dx for l in moments] on one simplex.

    factors: list of (a, b, k) meaning (a.x + b)^k; moments: list of (a, b)
    affine forms (use ((0,...,0), 1) for the plain mass).
    """
    d = S.dim
    m = d + 1
    poly = {0: 1}
    scale = 1
    deg = 0
    for a, b, k in factors:
        coeffs, L = _hom_int_form(a, b, S)
        for _ in range(k):
            poly = _mul_linear(poly, coeffs)
            scale *= L
            deg += 1
        if not poly:
            break
    # weights w_b = c_b prod b_i!, then a linear moment l gives
    # sum_b w_b sum_i l_i (b_i + 1) over the common denominator (deg+1+d)!.
    acc_mass = 0
    acc_lin = [0] * m
    for key, c in poly.items():
        b = _unpack(key, m)
        w = c
        for t in b:
            w *= fact(t)
        acc_mass += w
        for i in range(m):
            acc_lin[i] += w * (b[i] + 1)
    jac = S.jac()
    out = []
    for a, b0 in moments:
        a = tuple(Q(x) for x in a)
        if all(x == 0 for x in a):
            # constant moment: homogeneous of degree deg
            val = Fraction(acc_mass, fact(deg + d)) * Q(b0)
        else:
            coeffs = [sum((ai * vi for ai, vi in zip(a, v)), Fraction(0)) + Q(b0) for v in S.verts]
            num = sum((ci * li for ci, li in zip(coeffs, acc_lin)), Fraction(0))
            val = num / fact(deg + 1 + d)
        out.append(val * jac / scale)
    return out


def integrate_product_moments(factors, moments, P, simplices=None, executor=None):
    """Moments of prod (a.x + b)^k over P (see simplex_product_moments)."""
    for a, _, _ in factors:
        if len(a) != P.d:
            raise ParamError("factor dimension mismatch")
    simplices = simplices if simplices is not None else P.triangulate()
    if executor is None:
        parts = [simplex_product_moments(factors, moments, S) for S in simplices]
    else:
        parts = list(executor.map(lambda S: simplex_product_moments(factors, moments, S), simplices))
    totals = [Fraction(0)] * len(moments)
    for part in parts:  # fixed order: deterministic exact reduction
        for i, v in enumerate(part):
            totals[i] += v
    return totals


# -- text format ------------------------------------------------------------

def parse_polytope_text(text):
    """Lines 'ineq: a1 ... ad <= b' (also accepts '>=' and the unicode forms)."""
    rows = []
    for raw in text.splitlines():
        ln = raw.split("#")[0].strip()
        if not ln:
            continue
        key, _, rest = ln.partition(":")
        if key.strip().lower() != "ineq":
            raise ParamError(f"unknown line in polytope file: {raw!r}")
        rest = rest.replace("≤", "<=").replace("≥", ">=")
        if "<=" in rest:
            lhs, rhs = rest.split("<=")
            sgn = 1
        elif ">=" in rest:
            lhs, rhs = rest.split(">=")
            sgn = -1
        else:
            raise ParamError(f"inequality needs <= or >=: {raw!r}")
        a = [sgn * Q(t) for t in lhs.split()]
        rows.append((a, sgn * Q(rhs.strip())))
    if not rows:
        raise ParamError("polytope file has no inequalities")
    d = len(rows[0][0])
    return HPolytope(d, rows)


def polytope_text(P):
    return "".join("ineq: " + " ".join(str(x) for x in a) + f" <= {b}\n" for a, b in P.rows)
