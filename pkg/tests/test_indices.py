from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from grassblow.errors import ParamError
from grassblow.indices import (I_k, check_params, enumerate_full, enumerate_stratum,
                               in_stratum, partition_check, rank, stratum_size)


def test_indices_352_k1_has_six():
    assert len(enumerate_stratum(3, 2, 5, 1)) == 6


def test_full_is_decreasing_tuples():
    full = enumerate_full(3, 6)
    assert len(full) == comb(6, 3)
    assert all(list(t) == sorted(t, reverse=True) for t in full)


@given(st.integers(2, 9).flatmap(lambda n: st.tuples(st.integers(1, n - 1), st.integers(1, n - 1), st.just(n))))
@settings(max_examples=60, deadline=None)
def test_strata_partition(spn):
    s, p, n = spn
    assert partition_check(s, p, n)
    for k in range(p + 1):
        brute = [t for t in combinations(range(n, 0, -1), p) if sum(x > s for x in t) == k]
        assert stratum_size(s, p, n, k) == len(brute)


def test_I_k_lands_in_its_stratum():
    for k in range(0, 3):
        assert in_stratum(I_k(5, 2, 9, k), 5, k)


def test_rank_and_errors():
    assert rank(5, 3, 10) == 3
    with pytest.raises(ParamError):
        check_params(0, 1, 3)
    with pytest.raises(ParamError):
        I_k(3, 2, 5, 3)
