"""Plucker index sets I_{p,n}, the strata I^k_{s,p,n} and the special indices.

An index is a strictly decreasing tuple (i_1 > i_2 > ... > i_p) with entries in
[1, n].  Canonical order everywhere = plain lexicographic order on the tuples
(so for p=2, n=4: (2,1) < (3,1) < (3,2) < (4,1) < ...).
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

from .errors import ParamError


@dataclass(frozen=True)
class GrassParams:
    s: int
    p: int
    n: int

    def __post_init__(self):
        check_params(self.s, self.p, self.n)

    @property
    def r(self):
        return rank(self.s, self.p, self.n)


def check_params(s, p, n):
    if not (isinstance(s, int) and isinstance(p, int) and isinstance(n, int)):
        raise ParamError("s, p, n must be integers")
    if not (0 < p < n):
        raise ParamError(f"need 0 < p < n, got p={p}, n={n}")
    if not (0 < s < n):
        raise ParamError(f"need 0 < s < n, got s={s}, n={n}")


def check_pn(p, n):
    if not (isinstance(p, int) and isinstance(n, int)) or not (0 < p < n):
        raise ParamError(f"need 0 < p < n, got p={p}, n={n}")


def rank(s, p, n):
    check_params(s, p, n)
    return min(s, n - s, p, n - p)


def is_index(t, p, n):
    if len(t) != p:
        return False
    if any(not (1 <= x <= n) for x in t):
        return False
    return all(t[i] > t[i + 1] for i in range(p - 1))


@lru_cache(maxsize=None)
def _full(p, n):
    out = [tuple(sorted(c, reverse=True)) for c in combinations(range(1, n + 1), p)]
    out.sort()
    return tuple(out)


def enumerate_full(p, n):
    """All C(n,p) decreasing p-tuples in [1,n], canonical (lex) order."""
    check_pn(p, n)
    return list(_full(p, n))


def N_full(p, n):
    return comb(n, p) - 1


def in_stratum(t, s, k):
    """Band membership: first k entries in [s+1, n], last p-k entries in [1, s]."""
    p = len(t)
    return all(x > s for x in t[:k]) and all(x <= s for x in t[k:p])


def enumerate_stratum(s, p, n, k):
    check_params(s, p, n)
    if not (isinstance(k, int) and 0 <= k <= p):
        raise ParamError(f"stratum index k={k} outside [0,{p}]")
    return [t for t in _full(p, n) if in_stratum(t, s, k)]


def stratum_size(s, p, n, k):
    return comb(s, p - k) * comb(n - s, k)


def N_stratum(s, p, n, k):
    # -1 for an empty stratum, matching the "point when N^k = 0, -1" convention
    return stratum_size(s, p, n, k) - 1


def stratum_of(t, s):
    """The unique k with t in I^k (number of entries above s)."""
    return sum(1 for x in t if x > s)


def partition_check(s, p, n):
    check_params(s, p, n)
    full = set(_full(p, n))
    seen = set()
    for k in range(p + 1):
        st = enumerate_stratum(s, p, n, k)
        ss = set(st)
        if ss & seen:
            return False
        seen |= ss
        if len(st) != stratum_size(s, p, n, k):
            return False
    return seen == full


# ---------------------------------------------------------------------------
# special indices

def _member_or_fail(t, s, p, n, k, name):
    if not is_index(t, p, n) or not in_stratum(t, s, k):
        raise ParamError(f"{name}={t} is not a member of I^{k}_{{{s},{p},{n}}}")
    return t


def I_k(s, p, n, k):
    """I_k = (s+k, s+k-1, ..., s-p+k+1), 0 <= k <= p."""
    check_params(s, p, n)
    if not (0 <= k <= p):
        raise ParamError(f"I_k needs 0<=k<=p, got k={k}")
    t = tuple(range(s + k, s - p + k, -1))
    return _member_or_fail(t, s, p, n, k, "I_k")


def I_star(s, p, n, k):
    """I*_k: replace s+k by s+k+1 and s-p+k+1 by s-p+k in I_k; 1 <= k <= p-1."""
    check_params(s, p, n)
    if not (1 <= k <= p - 1):
        raise ParamError(f"I*_k needs 1<=k<=p-1, got k={k}")
    mid = list(range(s + k - 1, s - p + k + 1, -1))
    t = tuple([s + k + 1] + mid + [s - p + k])
    return _member_or_fail(t, s, p, n, k, "I*_k")


def I_mu_nu(s, p, n, k, mu, nu):
    """I^k_{mu nu}: drop mu (s-p+k+1<=mu<=s) from I_k, append nu (1<=nu<=s-p+k)."""
    check_params(s, p, n)
    if not (0 <= k <= p):
        raise ParamError(f"k={k} outside [0,{p}]")
    if not (s - p + k + 1 <= mu <= s):
        raise ParamError(f"mu={mu} outside [{s-p+k+1},{s}]")
    if not (1 <= nu <= s - p + k):
        raise ParamError(f"nu={nu} outside [1,{s-p+k}]")
    base = [x for x in range(s + k, s - p + k, -1) if x != mu]
    t = tuple(sorted(base + [nu], reverse=True))
    return _member_or_fail(t, s, p, n, k, "I^k_{mu nu}")


def I_star_mu_nu(s, p, n, k, mu, nu):
    """I^{k*}_{mu nu}: drop mu (s+1<=mu<=s+k) from I_k, add nu (s+k+1<=nu<=n)."""
    check_params(s, p, n)
    if not (0 <= k <= p):
        raise ParamError(f"k={k} outside [0,{p}]")
    if not (s + 1 <= mu <= s + k):
        raise ParamError(f"mu={mu} outside [{s+1},{s+k}]")
    if not (s + k + 1 <= nu <= n):
        raise ParamError(f"nu={nu} outside [{s+k+1},{n}]")
    base = [x for x in range(s + k, s - p + k, -1) if x != mu]
    t = tuple(sorted(base + [nu], reverse=True))
    return _member_or_fail(t, s, p, n, k, "I^{k*}_{mu nu}")


def special_indices(s, p, n, k, mu=None, nu=None):
    """Collect whichever special indices are defined for (k, mu, nu).

    Without mu/nu returns I_k (and I*_k when 1<=k<=p-1 and it lands in range).
    With mu/nu returns the mu-nu family that matches the ranges.  Raises
    ParamError when nothing applies.
    """
    out = {}
    if mu is None and nu is None:
        out["I_k"] = I_k(s, p, n, k)
        if 1 <= k <= p - 1:
            try:
                out["I*_k"] = I_star(s, p, n, k)
            except ParamError:
                pass
        return out
    if mu is None or nu is None:
        raise ParamError("mu and nu must be given together")
    try:
        out["I^k_mu_nu"] = I_mu_nu(s, p, n, k, mu, nu)
    except ParamError:
        pass
    try:
        out["I^k*_mu_nu"] = I_star_mu_nu(s, p, n, k, mu, nu)
    except ParamError:
        pass
    if not out:
        raise ParamError(f"(k,mu,nu)=({k},{mu},{nu}) out of range for ({s},{p},{n})")
    return out


def all_params(nmax, nmin=2):
    """Every valid (s,p,n) with nmin <= n <= nmax."""
    for n in range(nmin, nmax + 1):
        for p in range(1, n):
            for s in range(1, n):
                yield (s, p, n)


def normalized_params(nmax, nmin=2):
    """Valid (s,p,n) with 2p <= n <= 2s."""
    for s, p, n in all_params(nmax, nmin):
        if 2 * p <= n <= 2 * s:
            yield (s, p, n)
