import pytest

from grassblow import picard
from grassblow.errors import ParamError
from grassblow.indices import normalized_params


@pytest.mark.parametrize("spn", list(normalized_params(8)))
def test_T_identities_small(spn):
    res = picard.lattice_identities(*spn)
    assert all(res.values()), res


@pytest.mark.parametrize("spn", list(picard.m_params(8)))
def test_M_identities_small(spn):
    res = picard.m_lattice_identities(*spn)
    assert all(res.values()), res


def test_basis_variants():
    assert picard.T_basis(5, 2, 8).gens == ("H", "D+1", "D+2", "D-1", "D-2")
    # p = n-s: D-r is not a generator
    assert "D-3" not in picard.T_basis(4, 3, 7).gens
    # p = s = n-s: H_M is zero, basis Dc1..Dc_{r-1}
    M = picard.M_basis(3, 3, 6)
    assert M.gens == ("Dc1", "Dc2") and M.H().is_zero()


def test_usd_on_Mppp_is_integral():
    for p in range(2, 6):
        f = picard.pullback("Usd", p, p, 2 * p)
        assert f.integral and f.is_involution()


def test_unnormalized_rejected():
    with pytest.raises(ParamError, match="DUAL"):
        picard.T_basis(3, 5, 10)
    with pytest.raises(ParamError):
        picard.pullback("USD", 6, 2, 10)
    with pytest.raises(ParamError):
        picard.M_basis(4, 4, 9)
