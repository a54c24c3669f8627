import pytest

from grassblow import curves
from grassblow.errors import ParamError
from grassblow.indices import normalized_params, rank


@pytest.mark.parametrize("spn", list(normalized_params(9)))
def test_nef_ample_and_adjunction(spn):
    s, p, n = spn
    t = curves.nef_ample_T(s, p, n)  # raises on any closed-form mismatch
    assert t["nef"]
    assert t["ample"] == (rank(s, p, n) <= 2)
    assert curves.adjunction_identity(s, p, n)
    m = curves.ample_M(s, p, n)
    assert m["min_degree"] is None or m["min_degree"] >= 1


def test_witness_5_3_10():
    t = curves.nef_ample_T(5, 3, 10)
    assert (t["nef"], t["ample"], t["witness"].label()) == (True, False, "gamma_1")


def test_no_relation_defects():
    for spn in [(4, 3, 7), (3, 3, 6), (6, 2, 9)]:
        for c in curves.enumerate_curves(*spn):
            assert curves.relation_defects(*spn, c) == []


def test_bad_curve_id():
    with pytest.raises(ParamError):
        curves.curve_class(5, 2, 8, curves.CurveId("zeta", 0, j=7))
