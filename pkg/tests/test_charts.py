import random

import pytest

from grassblow import charts
from grassblow.errors import ParamError


@pytest.mark.parametrize("spn", [(3, 2, 5), (4, 2, 6), (4, 3, 7), (4, 4, 8), (5, 3, 8)])
def test_claims_hold_on_every_chart(spn):
    s, p, n = spn
    rng = random.Random(7)
    for l in range(min(p, n - s) + 1):
        ch = charts.canonical_tau(s, p, n, l)
        for _ in range(4):
            pt = charts.random_point(ch, rng)
            assert charts.verify_claim_I(s, p, n, l, pt)[0]
            assert charts.verify_claim_III(s, p, n, l, pt)[0]


def test_literal_y_sign_is_off():
    # the printed exponent for the y-branch disagrees with brute force somewhere
    s, p, n = 4, 3, 7
    rng = random.Random(0)
    seen_diff = False
    for l in range(1, 4):
        ch = charts.canonical_tau(s, p, n, l)
        pt = charts.random_point(ch, rng)
        a = charts.claim_table(s, p, n, l, pt)
        b = charts.claim_table(s, p, n, l, pt, literal_y_sign=True)
        seen_diff |= a != b
    assert seen_diff


def test_weights_checked():
    s, p, n, l = 4, 2, 6, 1
    ch = charts.canonical_tau(s, p, n, l)
    pt = charts.random_point(ch, random.Random(5))
    assert charts.check_weights(s, p, n, l, pt, 3)


def test_chart_needs_p_le_s():
    with pytest.raises(ParamError):
        charts.canonical_tau(2, 3, 6, 0)
