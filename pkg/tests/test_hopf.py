import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopfyd.examples import HOPF_FIXTURES, BadCharacteristic, group_algebra, hopf_fixture, sweedler_h4
from hopfyd.groups import GroupPresentation, InvalidGroupTable, cyclic
from hopfyd.hopf import (
    HopfMorphism,
    InvalidStructure,
    NotAHopfMorphism,
    coopposite,
    dual,
    identity_morphism,
    op_cop,
    opposite,
    transpose_morphism,
    verify_hopf_axioms,
)
from hopfyd.linalg import QQ, Field, LinearMap

from strategies import elements

F7 = Field(7)
H4 = sweedler_h4()


@pytest.mark.parametrize("field", [QQ, F7], ids=str)
@pytest.mark.parametrize("name", HOPF_FIXTURES)
def test_fixture_axioms(name, field):
    H = hopf_fixture(name, field)
    rep = verify_hopf_axioms(H)
    assert rep.ok, rep.render()
    for K in (dual(H), opposite(H), coopposite(H), op_cop(H)):
        assert verify_hopf_axioms(K).ok
    assert dual(dual(H)).structure_equal(H)


def test_fixture_shapes():
    # DERIVED: hand-checked commutativity pattern
    shapes = {n: (hopf_fixture(n).dim, hopf_fixture(n).is_commutative(), hopf_fixture(n).is_cocommutative()) for n in HOPF_FIXTURES}
    assert shapes == {
        "group:C2": (2, True, True),
        "group:C3": (3, True, True),
        "group:C4": (4, True, True),
        "group:V4": (4, True, True),
        "group:S3": (6, False, True),
        "fn:S3": (6, True, False),
        "sweedler4": (4, False, False),
    }


def test_sweedler_antipode_has_order_four():
    S, P, k = H4.antipode, H4.antipode, 1
    while P != H4.identity():
        P, k = P.compose(S), k + 1
    assert k == 4
    # S² is conjugation by g
    g = H4.e("g")
    for i in range(4):
        x = H4.e(i)
        assert H4.S(H4.S(x)) == H4.mul(H4.mul(g, x), g)


def test_sweedler_needs_odd_characteristic():
    with pytest.raises(BadCharacteristic):
        sweedler_h4(Field(2))


@given(elements(H4), elements(H4))
def test_h4_comult_multiplicative_and_antipode_antimultiplicative(x, y):
    assert H4.cop(H4.mul(x, y)) == (H4.algebra @ H4.algebra).mul(H4.cop(x), H4.cop(y))
    assert H4.S(H4.mul(x, y)) == H4.mul(H4.S(y), H4.S(x))
    assert H4.Sinv(H4.S(x)) == x


@given(st.integers(1, 7))
def test_cyclic_group_algebras_are_hopf(n):
    assert verify_hopf_axioms(group_algebra(cyclic(n))).ok


def test_bad_group_table_rejected():
    with pytest.raises(InvalidGroupTable):
        GroupPresentation(2, ((0, 1), (1, 1)), (0, 1), 0, ("e", "a"))


def test_broken_antipode_first_failure():
    H = sweedler_h4()
    S = LinearMap((H.space,), (H.space,), dict(H.antipode.table), QQ)
    S.table[(2,)] = {(3,): 1}
    bad = type(H)("bad", H.space, H.mult, H.unit, H.comult, H.counit, S)
    f = verify_hopf_axioms(bad).first_failure()
    assert (f.name, f.witness) == ("antipode left", "x: lhs=2*gx rhs=0")


def test_singular_antipode_is_invalid():
    H = sweedler_h4()
    S = LinearMap((H.space,), (H.space,), {(0,): {(0,): 1}}, QQ)
    with pytest.raises(InvalidStructure):
        type(H)("sing", H.space, H.mult, H.unit, H.comult, H.counit, S)


def test_dual_of_group_algebra_is_function_algebra():
    kS3 = hopf_fixture("group:S3")
    d = dual(kS3)
    assert d.is_commutative() and not d.is_cocommutative()
    assert d.structure_equal(hopf_fixture("fn:S3"))
    assert d.labels[0] == "δe"


def test_opposite_of_opposite():
    assert opposite(opposite(H4)).structure_equal(H4)
    assert coopposite(coopposite(H4)).structure_equal(H4)
    # H4 ≅ H4^cop is not identity on the basis: tables differ
    assert not coopposite(H4).structure_equal(H4)


def test_morphisms():
    idm = identity_morphism(H4)
    assert idm(H4.e("x")) == H4.e("x")
    T = transpose_morphism(idm)
    assert T.map == identity_morphism(dual(H4)).map
    # x ↦ g breaks x² = 0
    kC2 = hopf_fixture("group:C2")
    bad = LinearMap((H4.space,), (kC2.space,), {(0,): {(0,): 1}, (1,): {(1,): 1}, (2,): {(1,): 1}}, QQ)
    with pytest.raises(NotAHopfMorphism):
        HopfMorphism(H4, kC2, bad)
