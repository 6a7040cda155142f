import pytest
from hypothesis import given

from hopfyd.actions import verify_algebra
from hopfyd.doubles import (
    KINDS,
    AntipodeNotFound,
    NotACocycle,
    cocycle_check,
    cocycle_condition,
    cocycle_twist,
    codouble_coproduct_is_plain,
    convolution_inverse_form,
    double_canonical_report,
    double_comparisons,
    drinfeld_codouble,
    drinfeld_double,
    heisenberg_anti_iso_report,
    heisenberg_double,
    heisenberg_report,
    is_normal,
    solve_antipode,
    trivial_cocycle,
    twist_forms,
    verify_twist_theorems,
)
from hopfyd.examples import HOPF_FIXTURES, hopf_fixture, sweedler_h4
from hopfyd.hopf import dual, verify_hopf_axioms
from hopfyd.linalg import LinearMap, Space, Tensor

from strategies import elements

H4 = sweedler_h4()


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("name", HOPF_FIXTURES)
def test_doubles_are_hopf_and_cross_checked(name, kind):
    H = hopf_fixture(name)
    D = drinfeld_double(H, kind)  # raises CrossCheckMismatch if the two constructions disagree
    T = drinfeld_codouble(H, kind)
    assert D.dim == T.dim == H.dim**2
    assert verify_hopf_axioms(T).ok
    assert dual(T).structure_equal(D)


@pytest.mark.parametrize("name", HOPF_FIXTURES)
def test_double_comparisons(name):
    rep = double_comparisons(hopf_fixture(name))
    assert rep.ok, rep.render()


@pytest.mark.parametrize("name", ["group:C2", "group:C3", "sweedler4"])
def test_heisenberg_double_reports(name):
    H = hopf_fixture(name)
    assert heisenberg_report(H).ok
    assert heisenberg_anti_iso_report(H).ok
    assert double_canonical_report(H).ok


def test_codouble_coproduct_plainness():
    # DERIVED: untwisted exactly for commutative and cocommutative H
    got = {n: codouble_coproduct_is_plain(hopf_fixture(n)) for n in HOPF_FIXTURES}
    assert got == {
        "group:C2": True,
        "group:C3": True,
        "group:C4": True,
        "group:V4": True,
        "group:S3": False,
        "fn:S3": False,
        "sweedler4": False,
    }


def test_double_labels():
    D = drinfeld_double(H4, "radford")
    assert D.labels[:5] == ("δ1⋈1", "δ1⋈g", "δ1⋈x", "δ1⋈gx", "δg⋈1")
    T = drinfeld_codouble(H4, "radford")
    assert T.labels[:2] == ("1⊗δ1", "1⊗δg")


def test_solve_antipode_recovers_s():
    S = solve_antipode(H4.mult, H4.unit, H4.comult, H4.counit)
    assert S == H4.antipode


def test_solve_antipode_fails_for_bialgebra_without_antipode():
    # the monoid algebra of {1, z} with z² = z is a bialgebra with no antipode
    V = Space("M", 2, ("1", "z"))
    F = H4.field
    mult = LinearMap((V, V), (V,), {(0, 0): {(0,): 1}, (0, 1): {(1,): 1}, (1, 0): {(1,): 1}, (1, 1): {(1,): 1}}, F)
    comult = LinearMap((V,), (V, V), {(0,): {(0, 0): 1}, (1,): {(1, 1): 1}}, F)
    counit = LinearMap((V,), (), {(0,): {(): 1}, (1,): {(): 1}}, F)
    with pytest.raises(AntipodeNotFound):
        solve_antipode(mult, Tensor((V,), {(0,): 1}, F), comult, counit)


@given(elements(drinfeld_double(H4, "radford")), elements(drinfeld_double(H4, "radford")))
def test_double_comult_multiplicative_on_random_elements(x, y):
    D = drinfeld_double(H4, "radford")
    assert D.cop(D.mul(x, y)) == (D.algebra @ D.algebra).mul(D.cop(x), D.cop(y))


def test_trivial_cocycle_twist_is_identity():
    c = cocycle_check(H4, trivial_cocycle(H4), "left")
    assert cocycle_twist(H4, c).mult == H4.mult


def test_non_cocycle_rejected_with_minimal_witness():
    V = H4.space
    ones = LinearMap((V, V), (), {(i, j): {(): 1} for i in range(4) for j in range(4)}, H4.field)
    c = cocycle_condition(H4, ones, "left")
    assert (c.passed, c.witness) == (False, "1⊗1⊗x: lhs=1 rhs=2")
    assert not is_normal(H4, ones)
    with pytest.raises(NotACocycle):
        cocycle_check(H4, ones, "left")


def test_first_twist_theorems_hold_everywhere():
    for name in HOPF_FIXTURES:
        rep = verify_twist_theorems(hopf_fixture(name))
        for key in ("σ: left cocycle condition", "ℋ(H) = _σ𝒯_R(H)", "η: right cocycle condition", "ℋ(Ĥ) = 𝒟_R(H)_η"):
            assert rep.get(key).passed, (name, key)
        assert rep.get("σ⁻¹: right cocycle condition").passed
        assert rep.get("sigma_inv is the convolution inverse of sigma").passed


def test_twisted_heisenberg_algebras_are_associative():
    H = hopf_fixture("group:S3")
    assert verify_algebra(heisenberg_double(H)).ok


# DERIVED: the inverse-twist identities fail as literal equalities under the identity
# correspondence whenever S is not the identity; these are the frozen first witnesses.
INVERSE_TWIST_WITNESSES = {
    "group:C3": ("at 1⊗δ1⊗g⊗δg", "at δ1⋈g⊗δg⋈1"),
    "group:S3": ("at e⊗δe⊗(123)⊗δ(123)", "at δe⋈(123)⊗δ(123)⋈e"),
    "sweedler4": ("at 1⊗δ1⊗1⊗δx", "at δ1⋈g⊗δx⋈1"),
}


@pytest.mark.parametrize("name", sorted(INVERSE_TWIST_WITNESSES))
def test_inverse_twist_witnesses(name):
    rep = verify_twist_theorems(hopf_fixture(name))
    a, b = rep.get("ℋ(H) = 𝒯_R(H)_σ⁻¹"), rep.get("ℋ(Ĥ) = _η⁻¹𝒟_R(H)")
    assert (a.passed, b.passed) == (False, False)
    assert (a.witness, b.witness) == INVERSE_TWIST_WITNESSES[name]


@pytest.mark.parametrize("name", ["group:C2", "group:V4"])
def test_inverse_twists_hold_when_s_is_identity(name):
    assert verify_twist_theorems(hopf_fixture(name)).ok


def test_eta_inv_is_not_the_convolution_inverse_on_h4():
    D = drinfeld_double(H4, "radford")
    f = twist_forms(H4)
    true_inv = convolution_inverse_form(D, f["eta"])
    assert true_inv != f["eta_inv"].with_spaces((D.space, D.space), ())
    assert cocycle_condition(D, true_inv, "left").passed
