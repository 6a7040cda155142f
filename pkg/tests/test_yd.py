import pytest
from hypothesis import given

from hopfyd.actions import LEFT
from hopfyd.examples import adjoint_yd, hopf_fixture, sweedler_h4, trivial_yd, yd_catalog, yd_fixture
from hopfyd.linalg import apply, tensor_product
from hopfyd.yd import (
    FUNCTORS,
    INVERSE_FUNCTOR,
    SUITES,
    CoactionYd,
    StandardYd,
    UnknownFunctor,
    algebra_object_check,
    category_functor,
    check_braided_coaction,
    check_braided_standard,
    check_coaction_yd,
    check_standard_yd,
    conversion_report,
    double_action,
    dual_opposite_report,
    dual_opposite_yd,
    equivalence_square,
    full_report,
    functor_report,
    functor_source,
    is_standard_yd,
    lambda_braided_check,
    lambda_verdict,
    to_coaction,
    to_standard,
)

from strategies import elements

H4 = sweedler_h4()
VARIANTS = ("ll", "lr", "rr", "rl")


def instances(hopfs=("sweedler4", "group:S3")):
    for name in yd_catalog(hopfs):
        for label, inst in yd_fixture(name):
            yield pytest.param(name, inst, id=label)


@pytest.mark.parametrize("name,inst", list(instances()))
def test_catalog_full_report(name, inst):
    rep = full_report(inst)
    if name.startswith("trivial:"):
        # the carriers H4 and kS3 are noncommutative, so only braided commutativity fails
        bad = [c.name for c in rep.checks if not c.passed]
        assert bad and all(n.startswith(("braided τ/ρ/", "braided Heisenberg/", "braided λ/ρ_U/")) for n in bad), rep.render()
        assert rep.get("braided formulations agree").passed
    else:
        assert rep.ok, rep.render()


@pytest.mark.parametrize("v", VARIANTS)
def test_conversion_round_trips(v):
    s, c = adjoint_yd(H4, v)
    assert to_standard(to_coaction(s)).same_as(s)
    assert to_coaction(to_standard(c)).same_as(c)
    assert to_coaction(s).same_as(c)
    assert conversion_report(c).ok


def test_trivial_yd_on_commutative_carrier_is_braided():
    H = hopf_fixture("group:C3")
    s = trivial_yd(H.algebra, H, "rr")
    assert check_braided_standard(s).ok
    assert check_braided_coaction(to_coaction(s)).ok
    assert lambda_verdict(lambda_braided_check(s))


def test_trivial_noncommutative_braided_witness():
    s = trivial_yd(H4.algebra, H4, "ll")
    assert is_standard_yd(s)
    f = check_braided_standard(s).first_failure()
    assert (f.name, f.witness) == ("m∘τ = m", "g⊗x: lhs=-1*gx rhs=gx")


def test_broken_coaction_is_not_yd():
    # the adjoint action with the trivial coaction x ↦ 1⊗x is not YD on H4
    s, _ = adjoint_yd(H4, "ll")
    triv = trivial_yd(H4.algebra, H4, "ll")
    bad = StandardYd("ll", H4, s.carrier, s.action, triv.coaction)
    assert not check_standard_yd(bad).ok
    assert not check_coaction_yd(to_coaction(bad)).ok


@pytest.mark.parametrize("which", FUNCTORS)
def test_functor_round_trips_on_h4(which):
    kind, src = functor_source(which)
    f = "standard" if kind == "standard" else "coaction"
    pool = [inst for v in VARIANTS for inst in adjoint_yd(H4, v)]
    inst = next(i for i in pool if i.variant == src and isinstance(i, StandardYd) == (f == "standard"))
    rep = functor_report(inst, which)
    assert rep.ok, rep.render()
    out = category_functor(inst, which)
    assert category_functor(out, INVERSE_FUNCTOR[which]).same_as(inst)


def test_functor_misuse():
    s, c = adjoint_yd(H4, "ll")
    with pytest.raises(UnknownFunctor):
        category_functor(s, "Z")
    with pytest.raises(TypeError):
        category_functor(c, "F")
    with pytest.raises(ValueError):
        category_functor(s, "F")  # F expects lr


def test_equivalence_square_on_rl():
    for inst in adjoint_yd(H4, "rl") + adjoint_yd(H4, "ll"):
        if isinstance(inst, CoactionYd) and inst.variant == "rl":
            assert equivalence_square(inst).ok


def test_dual_opposite_is_involutive_up_to_structure():
    c = adjoint_yd(H4, "rr")[1]
    assert dual_opposite_report(c).ok
    d = dual_opposite_yd(c)
    assert d.variant == c.variant and check_coaction_yd(d).ok


def test_algebra_object_for_ll_instances():
    for v in VARIANTS:
        for inst in adjoint_yd(H4, v):
            if isinstance(inst, CoactionYd) and inst.variant == "ll":
                assert algebra_object_check(inst).ok


def test_double_action_dimension():
    s = adjoint_yd(H4, "ll")[0]
    M = double_action(s)
    assert M.hopf.dim == 16 and M.side == LEFT


def test_suites_are_selectable():
    inst = yd_fixture("adjoint:group:C2:ll")[0][1]
    small = full_report(inst, ("yd",))
    assert small.ok and all(c.name.startswith(("standard/", "coaction/")) for c in small.checks)
    lam = full_report(inst, ("appendix-c",))
    assert lam.checks and all(c.name.startswith("braided λ/ρ_U/") for c in lam.checks)
    assert set(SUITES) >= {"yd", "convert", "braided", "double", "appendix-c"}


@given(elements(H4), elements(H4))
def test_adjoint_coaction_is_multiplicative_on_random_elements(x, y):
    s = adjoint_yd(H4, "ll")[0]
    B = s.coaction_hopf.algebra @ s.carrier
    assert apply(s.coaction, H4.mul(x, y)) == B.mul(apply(s.coaction, x), apply(s.coaction, y))


@given(elements(H4), elements(H4), elements(H4))
def test_adjoint_action_is_module_algebra_on_random_elements(h, x, y):
    s = adjoint_yd(H4, "ll")[0]
    act = lambda a, b: apply(s.action, tensor_product(a, b))
    lhs = act(h, H4.mul(x, y))
    d = H4.cop(h)
    rhs = sum(
        (H4.mul(act(H4.e(i), x), act(H4.e(j), y)).scale(c) for (i, j), c in d.coeffs.items()),
        H4.mul(x, y).scale(0),
    )
    assert lhs == rhs
