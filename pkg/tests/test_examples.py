import pytest

from hopfyd.examples import (
    HOPF_FIXTURES,
    HypothesisNotMet,
    NotContained,
    coideal_report,
    coideal_subalgebras,
    coideal_yd,
    counit_morphism,
    fixture_names,
    heisenberg_over_double,
    heisenberg_over_double_report,
    hopf_fixture,
    morphism_fixture,
    sign_morphism,
    subalgebra,
    sweedler_h4,
    trivial_yd,
    unit_hopf,
    yd_catalog,
    yd_fixture,
)
from hopfyd.hopf import verify_hopf_axioms
from hopfyd.linalg import QQ, Field, LinearMap
from hopfyd.yd import check_braided_standard, check_coaction_yd, check_standard_yd

H4 = sweedler_h4()

# DERIVED: I(ε) = H, I(id) = 𝕜, I(sign) = kA3
COIDEAL_DIMS = {
    ("sweedler4", "eps"): 4,
    ("sweedler4", "id"): 1,
    ("group:S3", "eps"): 6,
    ("group:S3", "id"): 1,
    ("group:S3", "sign"): 3,
}


@pytest.mark.parametrize("key", sorted(COIDEAL_DIMS))
def test_coideal_subalgebras(key):
    hname, m = key
    pi = morphism_fixture(hopf_fixture(hname), m)
    I_r, I_l = coideal_subalgebras(pi)
    assert I_r.space.dim == I_l.space.dim == COIDEAL_DIMS[key]
    rep = coideal_report(pi)
    assert rep.ok, rep.render()
    for inst in coideal_yd(pi):
        assert check_coaction_yd(inst).ok


def test_sign_coideal_is_the_alternating_group():
    I_r, _ = coideal_subalgebras(sign_morphism())
    assert I_r.space.labels == ("e", "(123)", "(132)")


def test_subalgebra_restrict_rejects_outside_vectors():
    A = H4.algebra
    sub = subalgebra(A, [H4.e("1"), H4.e("g")], "kC2")
    assert sub.restrict(H4.e("g"), 0).coeffs == {(1,): 1}
    with pytest.raises(NotContained):
        sub.restrict(H4.e("x"), 0)


def test_morphism_fixtures():
    assert verify_hopf_axioms(unit_hopf()).ok
    assert counit_morphism(H4).target.dim == 1
    with pytest.raises(HypothesisNotMet):
        morphism_fixture(H4, "sign")
    with pytest.raises(KeyError):
        morphism_fixture(H4, "nope")


def test_trivial_yd_with_given_coaction_needs_commutative_hopf():
    kC2 = hopf_fixture("group:C2")
    X = kC2.algebra
    V = kC2.space
    # x ↦ grading coaction: g ↦ g⊗g, 1 ↦ 1⊗1 (a left kC2-coaction on kC2)
    co = LinearMap((V,), (V, V), {(0,): {(0, 0): 1}, (1,): {(1, 1): 1}}, QQ)
    s = trivial_yd(X, kC2, "ll", coaction=co)
    assert check_standard_yd(s).ok and check_braided_standard(s).ok
    with pytest.raises(HypothesisNotMet):
        trivial_yd(H4.algebra, H4, "ll", coaction=LinearMap((H4.space,), (H4.space, H4.space), {}, QQ))
    with pytest.raises(ValueError):
        trivial_yd(X, kC2, "ll", "neither")


@pytest.mark.parametrize("name", ["group:C2", "sweedler4"])
def test_heisenberg_over_double_suite(name):
    rep = heisenberg_over_double_report(hopf_fixture(name))
    assert rep.ok, rep.render()


def test_heisenberg_over_double_shapes():
    hd = heisenberg_over_double(H4)
    assert hd.X.space.dim == 16 and hd.D.dim == 16 and hd.T.dim == 16
    assert check_standard_yd(hd.ll_instance()).ok
    assert check_coaction_yd(hd.rr_instance()).ok
    assert heisenberg_over_double(H4) is hd  # cached


def test_fixture_registry():
    names = fixture_names()
    assert len(names) == len(set(names)) == 85
    assert names[: len(HOPF_FIXTURES)] == HOPF_FIXTURES
    assert "heisdouble:sweedler4" in names and "coideal:group:S3:sign" in names
    assert len(yd_catalog()) == 21
    with pytest.raises(KeyError):
        yd_fixture("adjoint:sweedler4:zz")
    with pytest.raises(KeyError):
        yd_fixture("bogus:sweedler4")


def test_fixtures_over_f7():
    F = Field(7)
    (_, s), (_, c) = yd_fixture("adjoint:group:S3:rr", F)
    assert s.carrier.field == F
    assert check_standard_yd(s).ok and check_coaction_yd(c).ok
    assert verify_hopf_axioms(hopf_fixture("fn:S3", F)).ok
