"""Small exact linear algebra over Q.

Matrices are lists of lists of Fraction (or int).  Determinants use fraction
free Bareiss elimination after clearing row denominators, so the inner loop
only ever touches Python ints.
"""

from fractions import Fraction
from math import lcm

from .errors import ParamError


def Q(x):
    """Coerce int / str 'a/b' / Fraction to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot make an exact rational from {type(x).__name__}")


def fstr(x):
    """Rational -> 'num/den' string (always with a denominator)."""
    x = Q(x)
    return f"{x.numerator}/{x.denominator}"


class RatMatrix:
    """Dense rational matrix, rows x cols."""

    __slots__ = ("rows", "cols", "a")

    def __init__(self, data):
        data = [[Q(v) for v in row] for row in data]
        if not data or not data[0]:
            raise ParamError("matrix dimensions must be positive")
        c = len(data[0])
        if any(len(r) != c for r in data):
            raise ParamError("ragged matrix")
        self.rows, self.cols, self.a = len(data), c, data

    @classmethod
    def zeros(cls, r, c):
        return cls([[0] * c for _ in range(r)])

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.a[i][j]

    def __setitem__(self, ij, v):
        i, j = ij
        self.a[i][j] = Q(v)

    def __eq__(self, other):
        return isinstance(other, RatMatrix) and self.a == other.a

    def __repr__(self):
        return "RatMatrix(%r)" % [[fstr(v) for v in r] for r in self.a]

    def copy(self):
        return RatMatrix([list(r) for r in self.a])

    def columns(self, idx):
        """Submatrix taking 1-based columns in the given order."""
        return [[row[j - 1] for j in idx] for row in self.a]

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ParamError("dimension mismatch in matmul")
        b = other.a
        return RatMatrix([[sum((ri[k] * b[k][j] for k in range(self.cols)), Fraction(0))
                           for j in range(other.cols)] for ri in self.a])

    def rank(self):
        return rank([list(r) for r in self.a])


def bareiss_det_int(m):
    """Determinant of a square integer matrix (list of lists), Bareiss."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * akk - aik * rk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def det(m):
    """Exact determinant of a square rational matrix."""
    n = len(m)
    if any(len(r) != n for r in m):
        raise ParamError("det of non-square matrix")
    if n == 0:
        return Fraction(1)
    scale = 1
    im = []
    for row in m:
        row = [Q(v) for v in row]
        L = lcm(*[v.denominator for v in row]) if row else 1
        scale *= L
        im.append([v.numerator * (L // v.denominator) for v in row])
    return Fraction(bareiss_det_int(im), scale)


def rref(m):
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    a = [[Q(v) for v in r] for r in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    piv = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [vi - f * vr for vi, vr in zip(a[i], a[r])]
        piv.append(c)
        r += 1
        if r == rows:
            break
    return a, piv


def rank(m):
    return len(rref(m)[1])


def solve(A, b):
    """Solve the square system A x = b exactly; None if singular."""
    n = len(A)
    aug = [[Q(v) for v in A[i]] + [Q(b[i])] for i in range(n)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)) or len(piv) < n:
        return None
    return [red[i][n] for i in range(n)]


def inverse(A):
    n = len(A)
    aug = [[Q(v) for v in A[i]] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ParamError("singular matrix")
    return [row[n:] for row in red]


def matmul(A, B):
    return [[sum((A[i][k] * B[k][j] for k in range(len(B))), Fraction(0))
             for j in range(len(B[0]))] for i in range(len(A))]
