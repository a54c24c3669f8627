import random
from fractions import Fraction

import pytest

from grassblow.errors import DomainError
from grassblow.linalg import RatMatrix, bareiss_det_int, det
from grassblow.plucker import (blowup_map, matrix_text, parse_matrix_text, plucker_vector,
                               random_matrix, reversal_sign, three_term)


def test_three_term_on_random_2x4():
    rng = random.Random(1)
    for _ in range(25):
        v = plucker_vector(random_matrix(rng, 2, 4))
        assert three_term(v, 1, 2, 3, 4) == 0


def test_three_term_with_extra_columns():
    rng = random.Random(2)
    v = plucker_vector(random_matrix(rng, 3, 6))
    assert three_term(v, 1, 2, 3, 4, S=(6,)) == 0


def test_bareiss_matches_fraction_det():
    rng = random.Random(3)
    for n in range(1, 6):
        m = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        assert det(m) == bareiss_det_int([r[:] for r in m])


def test_reversal_sign():
    M = RatMatrix([[1, 2, 0, 1], [0, 1, 5, 2], [3, 0, 1, -1]])
    asc = plucker_vector(M, order="ascending")
    desc = plucker_vector(M)
    for I in [(3, 2, 1), (4, 2, 1), (4, 3, 2)]:
        assert desc[I] == reversal_sign(3) * asc[I]


def test_rank_deficient_is_outside_domain():
    with pytest.raises(DomainError):
        blowup_map(RatMatrix([[1, 2, 3], [2, 4, 6]]), 1)


def test_matrix_text_roundtrip():
    M = RatMatrix([[Fraction(1, 2), 0, 3], [1, -1, Fraction(2, 3)]])
    assert parse_matrix_text(matrix_text(M)) == M
