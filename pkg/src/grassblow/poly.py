"""Sparse multivariate polynomials with exact rational coefficients.

Terms live in a dict {exponent tuple: Fraction}; zero coefficients are never
stored.  Nothing clever: the densities we need have at most ~10^4 terms.
"""

from fractions import Fraction

from .errors import ParamError
from .linalg import Q


class MultiPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        if nvars < 0:
            raise ParamError("nvars must be >= 0")
        self.nvars = nvars
        self.terms = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != nvars or any(x < 0 for x in e):
                raise ParamError(f"bad exponent {e} for {nvars} variables")
            c = Q(c)
            if c:
                self.terms[e] = self.terms.get(e, 0) + c
                if not self.terms[e]:
                    del self.terms[e]

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def affine(cls, coeffs, c=0):
        """sum coeffs[i] x_i + c."""
        d = len(coeffs)
        t = {(0,) * d: c}
        for i, a in enumerate(coeffs):
            if a:
                e = [0] * d
                e[i] = 1
                t[tuple(e)] = a
        return cls(d, t)

    @classmethod
    def _raw(cls, nvars, terms):
        out = cls.__new__(cls)
        out.nvars = nvars
        out.terms = terms
        return out

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ParamError(f"dimension mismatch: {self.nvars} vs {other.nvars} variables")
            return other
        return MultiPoly.const(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            v = t.get(e, 0) + c
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return MultiPoly._raw(self.nvars, t)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            k = Q(other)
            if not k:
                return MultiPoly(self.nvars)
            return MultiPoly._raw(self.nvars, {e: c * k for e, c in self.terms.items()})
        other = self._coerce(other)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return MultiPoly._raw(self.nvars, {e: c for e, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ParamError("only non-negative integer powers")
        result = MultiPoly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        return self == MultiPoly.const(self.nvars, other)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- queries ----------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def __len__(self):
        return len(self.terms)

    def evaluate(self, point):
        if len(point) != self.nvars:
            raise ParamError("point has wrong dimension")
        point = [Q(x) for x in point]
        tot = Fraction(0)
        for e, c in self.terms.items():
            m = c
            for x, k in zip(point, e):
                if k:
                    m *= x ** k
            tot += m
        return tot

    def affine_substitute(self, A, c=None):
        """Compose with x = A v + c, A an nvars x m matrix (list of rows).

        Returns a polynomial in the m variables v, fully expanded.
        """
        if len(A) != self.nvars:
            raise ParamError(f"substitution needs {self.nvars} rows, got {len(A)}")
        m = len(A[0]) if A else 0
        if any(len(row) != m for row in A):
            raise ParamError("ragged substitution matrix")
        c = c if c is not None else [0] * self.nvars
        if len(c) != self.nvars:
            raise ParamError("offset has wrong dimension")
        images = [MultiPoly.affine(row, ci) for row, ci in zip(A, c)]
        # cache powers of each image
        cache = [{0: MultiPoly.const(m, 1)} for _ in images]

        def power(i, k):
            got = cache[i]
            if k not in got:
                got[k] = power(i, k - 1) * images[i]
            return got[k]

        out = MultiPoly(m)
        for e, coef in self.terms.items():
            term = MultiPoly.const(m, coef)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def pin(self, i, value):
        """Substitute x_i = value and drop the variable."""
        value = Q(value)
        t = {}
        for e, c in self.terms.items():
            ne = e[:i] + e[i + 1:]
            v = t.get(ne, 0) + c * value ** e[i]
            t[ne] = v
        return MultiPoly._raw(self.nvars - 1, {e: c for e, c in t.items() if c})

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            mono = "*".join(f"x{i + 1}^{k}" if k > 1 else f"x{i + 1}"
                            for i, k in enumerate(e) if k)
            parts.append(f"{self.terms[e]}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def product_of_affine(forms, nvars=None):
    """prod (a.x + b)^k for forms given as (a, b, k)."""
    if nvars is None:
        nvars = len(forms[0][0])
    out = MultiPoly.const(nvars, 1)
    for a, b, k in forms:
        out = out * MultiPoly.affine(a, b) ** k
    return out


# -- text format ------------------------------------------------------------

def parse_poly_text(text):
    """Lines 'term: coeff e1 ... ed'; '#' comments; optional 'vars: d'."""
    nvars, terms = None, []
    for raw in text.splitlines():
        ln = raw.split("#")[0].strip()
        if not ln:
            continue
        key, _, rest = ln.partition(":")
        key = key.strip().lower()
        toks = rest.split()
        if key == "vars":
            nvars = int(toks[0])
        elif key == "term":
            if not toks:
                raise ParamError(f"empty term line: {raw!r}")
            terms.append((Q(toks[0]), tuple(int(t) for t in toks[1:])))
        else:
            raise ParamError(f"unknown line in polynomial file: {raw!r}")
    if nvars is None:
        if not terms:
            raise ParamError("polynomial file has no terms and no 'vars:' line")
        nvars = len(terms[0][1])
    out = MultiPoly(nvars)
    for c, e in terms:
        out = out + MultiPoly(nvars, {e: c})
    return out


def poly_text(f):
    lines = [f"vars: {f.nvars}"]
    for e in sorted(f.terms):
        lines.append("term: " + " ".join([str(f.terms[e])] + [str(k) for k in e]))
    return "\n".join(lines) + "\n"
