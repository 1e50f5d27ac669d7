from fractions import Fraction

import pytest

from simplesc.errors import HalfPowerResidue
from simplesc.lparam import (ASSUMPTIONS, Candidate, ParamNumerology, adjoint_l_ratio, derive_from_fdc,
                             gamma_principal, kostant_product, mu_jx, perturbed_candidates,
                             principal_parameter, ssc_parameter, ssc_parameter_invariants)
from simplesc.polynomials import IntPoly, RatFunc
from simplesc.root_data import SUPPORTED_TYPES, build_root_datum, omega_group

Q = IntPoly.x("q")
T = IntPoly.x("t")
ALL = [build_root_datum(f, r) for f, r in SUPPORTED_TYPES]
IDS = [rd.name for rd in ALL]


def test_principal_examples():
    p = principal_parameter(build_root_datum("A", 1))
    assert p.u_dims == {2: 1} and p.alpha == 2
    p = principal_parameter(build_root_datum("A", 2))
    assert p.u_dims == {2: 1, 4: 1} and p.alpha == 6


@pytest.mark.parametrize("rd", ALL, ids=IDS)
def test_principal_invariants(rd):
    p = principal_parameter(rd)
    assert not p.invariant_violations()
    assert sum((n + 1) * d for n, d in p.u_dims.items()) == rd.dim_g
    assert p.alpha == rd.dim_g - rd.rank
    assert p.center_order == rd.det_cartan == len(omega_group(rd))


@pytest.mark.parametrize("rd", ALL, ids=IDS)
def test_kostant_identity(rd):
    assert adjoint_l_ratio(principal_parameter(rd)) == kostant_product(rd)
    assert len(omega_group(rd)) * Q ** rd.rank * mu_jx(rd).value == kostant_product(rd)


def test_l_ratio_examples():
    assert adjoint_l_ratio(principal_parameter(build_root_datum("A", 1))) == RatFunc(Q, Q + 1)
    trivial = ssc_parameter(build_root_datum("B", 3))
    assert adjoint_l_ratio(trivial) == 1


def test_half_power_residue():
    rd = build_root_datum("A", 1)
    p = principal_parameter(rd)
    bad = ParamNumerology(**{**p.__dict__, "pn": {1: IntPoly([1, -1])}})
    with pytest.raises(HalfPowerResidue):
        adjoint_l_ratio(bad)
    ok = ParamNumerology(**{**p.__dict__, "pn": {1: IntPoly([1, 0, -1])}})
    assert adjoint_l_ratio(ok) == RatFunc(Q * (Q - 1), Q ** 3 - 1) * Q


def test_mu_and_gamma():
    a1 = build_root_datum("A", 1)
    assert mu_jx(a1).value == RatFunc(1, 2 * Q + 2)
    assert gamma_principal(a1).magnitude == RatFunc(Q ** 2, Q + 1)
    assert gamma_principal(a1).sign == "±"
    assert gamma_principal(build_root_datum("A", 2)).half_exponent == 10
    e8 = build_root_datum("E", 8)
    assert mu_jx(e8).value == kostant_product(e8) / Q ** 8
    odd = gamma_principal(a1)
    odd = type(odd)(odd.sign, odd.omega_order, 5, odd.mu)
    assert odd.magnitude is None and "q^(5/2)" in odd.magnitude_str()


@pytest.mark.parametrize("rd", ALL, ids=IDS)
def test_fdc_forced_conclusions(rd):
    v = derive_from_fdc(rd, Candidate.unknowns())
    assert v.consistent and v.alpha_forced == rd.dim_g + rd.rank
    assert v.pn_all_constant and v.C_forced == 1 and v.sl2_trivial and v.rho_trivial
    assert derive_from_fdc(rd, Candidate({}, rd.dim_g + rd.rank, Fraction(1))).consistent
    cands = perturbed_candidates(rd)
    assert len(cands) == 20
    for c in cands:
        assert not derive_from_fdc(rd, c).consistent, c.label


def test_fdc_examples():
    a1 = build_root_datum("A", 1)
    assert derive_from_fdc(a1, Candidate.unknowns()).alpha_forced == 4
    v = derive_from_fdc(a1, Candidate({2: 1 - T}, 4))
    assert not v.consistent and "deg" in v.reason
    assert not derive_from_fdc(a1, Candidate({}, 6)).consistent
    assert not derive_from_fdc(a1, Candidate(None, 5)).consistent
    assert not derive_from_fdc(a1, Candidate(None, None, Fraction(2))).consistent
    assert not derive_from_fdc(a1, Candidate({}, 4, Fraction(1, 2))).consistent
    # a constant factor other than 1 cannot be a characteristic polynomial
    assert not derive_from_fdc(a1, Candidate({2: IntPoly([2])}, 4)).consistent


@pytest.mark.parametrize("rd", ALL, ids=IDS)
def test_ssc_invariants(rd):
    inv = ssc_parameter_invariants(rd)
    assert inv["alpha"] == rd.dim_g + rd.rank and inv["swan"] == rd.rank
    assert inv["L_trivial"] and inv["packet_size"] == 1 and inv["inertia_fixed_dim"] == 0
    assert inv["alpha"] - principal_parameter(rd).alpha == 2 * rd.rank
    assert inv["conditional_on"] == ["A1", "A2"] and set(ASSUMPTIONS) == {"A1", "A2"}


@pytest.mark.parametrize("name,alpha,swan", [("A1", 4, 1), ("E8", 256, 8), ("G2", 16, 2), ("F4", 56, 4)])
def test_ssc_examples(name, alpha, swan):
    inv = ssc_parameter_invariants(build_root_datum(name[0], int(name[1])))
    assert (inv["alpha"], inv["swan"]) == (alpha, swan)
