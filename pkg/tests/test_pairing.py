import pytest
from hypothesis import given

from hopfyd.examples import HOPF_FIXTURES, hopf_fixture, sweedler_h4
from hopfyd.hopf import dual, opposite
from hopfyd.linalg import Field, LinearMap, reorder, tensor_product
from hopfyd.pairing import (
    Degenerate,
    PairingData,
    canonical,
    canonical_element,
    canonical_pairing,
    circ_u,
    circ_u_report,
    dual_basis_sum,
    flip_pairing,
    slice_identities,
    t_u,
    t_u_inv,
    verify_canonical_identities,
    verify_pairing,
)

from strategies import elements

H4 = sweedler_h4()
C4 = canonical(H4)


@pytest.mark.parametrize("name", HOPF_FIXTURES)
def test_canonical_suites(name):
    C = canonical(hopf_fixture(name))
    assert verify_pairing(C.pairing).ok
    for rep in (verify_canonical_identities(C), circ_u_report(C), slice_identities(C)):
        assert rep.ok, rep.render()


@pytest.mark.parametrize("name", ["group:S3", "sweedler4"])
def test_canonical_suites_mod_7(name):
    C = canonical(hopf_fixture(name, Field(7)))
    assert verify_canonical_identities(C).ok and slice_identities(C).ok


def test_h4_canonical_element():
    # DERIVED: canonical pairing is the identity matrix on dual bases
    assert C4.U.pretty() == "1⊗δ1 + g⊗δg + x⊗δx + gx⊗δgx"
    assert C4.U == dual_basis_sum(H4)
    # (S⊗id)U with S(x) = -gx, S(gx) = x
    assert C4.U_inv.pretty() == "1⊗δ1 + g⊗δg + x⊗δgx + -1*gx⊗δx"


@given(elements(H4), elements(dual(H4)))
def test_slices_of_u_recover_arguments(h, w):
    P = C4.pairing
    # p(h, ω) computed directly and through the dual basis
    direct = P(h, w)
    via = sum((P(h, dual(H4).e(i)) * P(H4.e(i), w) for i in range(4)), 0)
    assert direct == via


@given(elements(H4), elements(H4), elements(dual(H4)))
def test_pairing_is_hopf_pairing_on_random_elements(x, y, w):
    P = C4.pairing
    K = dual(H4)
    assert P(H4.mul(x, y), w) == P.pair2(tensor_product(x, y), K.cop(w))
    assert P(H4.S(x), w) == P(x, K.S(w))


def test_flip_has_swapped_canonical_element():
    Cf = canonical_element(flip_pairing(C4.pairing))
    assert Cf.U == reorder(C4.U, (1, 0))


def test_circ_u_is_canonical_for_opposite():
    cU = circ_u(C4)
    assert cU.legs[0].dim == 4
    T, Ti = t_u(C4), t_u_inv(C4)
    assert T.compose(Ti) == Ti.compose(T)


def test_degenerate_pairing_rejected():
    V, W = H4.space, dual(H4).space
    form = LinearMap((V, W), (), {(0, 0): {(): 1}}, H4.field)
    with pytest.raises(Degenerate):
        canonical_element(PairingData(H4, dual(H4), form))


def test_pairing_with_wrong_partner_fails_verification():
    # the canonical form of H4, read as a pairing of H4 with (H4)^op's dual, is not a Hopf pairing
    P = canonical_pairing(H4)
    bad = PairingData(opposite(H4), dual(H4), P.form)
    assert not verify_pairing(bad).ok
