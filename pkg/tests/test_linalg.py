from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopfyd import linalg
from hopfyd.linalg import (
    NO_SOLUTION,
    QQ,
    DimensionLimitExceeded,
    Field,
    FieldMismatch,
    LinearMap,
    NotInvertible,
    Space,
    Tensor,
    field_from_tag,
    invert_map,
    kernel_basis,
    linear_solve,
    rank,
    reorder,
    tensor_product,
    embed_legs,
)

F7 = Field(7)
V3 = Space("V", 3, ("a", "b", "c"))
W2 = Space("W", 2, ("p", "q"))

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=12)
small = st.integers(-6, 6)


def vec(space, coeffs, F=QQ):
    return Tensor((space,), {(i,): F(c) for i, c in enumerate(coeffs)}, F)


@given(fractions, fractions, fractions)
def test_rational_field_axioms(a, b, c):
    F = QQ
    assert F(a) * (F(b) + F(c)) == F(a) * F(b) + F(a) * F(c)
    if a:
        assert F(a) * F.inv(F(a)) == 1


@given(small, small, st.integers(1, 6))
def test_residues_match_integer_arithmetic_mod_7(a, b, d):
    x, y = F7(a), F7(b)
    assert x * y == F7(a * b)
    assert x - y == F7(a - b)
    assert F7(Fraction(a, d)) * F7(d) == x


def test_field_tags_and_format():
    assert field_from_tag("Q") is QQ
    assert field_from_tag("Fp:7") == F7
    assert F7.tag == "Fp:7" and QQ.tag == "Q"
    assert QQ.format(QQ.parse("-6/4")) == "-3/2"
    assert F7.format(F7.parse("1/2")) == "4"
    with pytest.raises(ValueError):
        Field(9)
    with pytest.raises(ZeroDivisionError):
        F7.parse("1/7")
    with pytest.raises(FieldMismatch):
        QQ(F7(3))


def test_integers_stay_plain_over_q():
    assert type(QQ(Fraction(4, 2))) is int


def test_space_guard():
    old = linalg.set_max_dim(4)
    try:
        with pytest.raises(DimensionLimitExceeded):
            Space("big", 5)
    finally:
        linalg.set_max_dim(old)
    assert Space("ok", 5).labels == ("e0", "e1", "e2", "e3", "e4")


def test_tensor_algebra_basics():
    t = tensor_product(vec(V3, [1, 0, 2]), vec(W2, [0, 3]))
    assert t.coeffs == {(0, 1): 3, (2, 1): 6}
    r = reorder(t, (1, 0))
    assert r.coeffs == {(1, 0): 3, (1, 2): 6}
    assert r.legs == (W2, V3)
    assert t.pretty() == "3*a⊗q + 6*c⊗q"
    assert (t - t) == Tensor.zero((V3, W2), QQ)


def test_embed_legs_places_units():
    u = vec(W2, [1, 0])
    e = embed_legs(vec(V3, [0, 1, 0]), (1,), (W2, V3, W2), {0: u, 2: u})
    assert e.coeffs == {(0, 1, 0): 1}


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3), st.lists(small, min_size=3, max_size=3))
def test_linear_solve_is_sound(rows, b):
    M = LinearMap.from_matrix(V3, V3, rows, QQ)
    rhs = vec(V3, b)
    z = linear_solve(M, rhs)
    if z is NO_SOLUTION:
        # then rhs is independent of the image
        assert rank([M.image((i,)) for i in range(3)] + [rhs], QQ) > rank([M.image((i,)) for i in range(3)], QQ)
    else:
        assert M(z) == rhs


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3))
def test_rank_nullity(rows):
    M = LinearMap.from_matrix(V3, V3, rows, QQ)
    ker = kernel_basis(M)
    assert all(not M(k) for k in ker)
    assert len(ker) + rank([M.image((i,)) for i in range(3)], QQ) == 3
    assert rank(ker, QQ) == len(ker)


@given(st.lists(st.lists(st.integers(0, 6), min_size=3, max_size=3), min_size=3, max_size=3))
def test_rank_nullity_mod_7(rows):
    M = LinearMap.from_matrix(V3, V3, rows, F7)
    assert len(kernel_basis(M)) + rank([M.image((i,)) for i in range(3)], F7) == 3


def test_invert_map_round_trip_and_singular():
    M = LinearMap.from_matrix(V3, V3, [[1, 2, 0], [0, 1, 0], [3, 0, 1]], QQ)
    Mi = invert_map(M)
    assert M.compose(Mi) == LinearMap.identity((V3,), QQ) or Mi.compose(M) == LinearMap.identity((V3,), QQ)
    with pytest.raises(NotInvertible):
        invert_map(LinearMap.from_matrix(V3, V3, [[1, 1, 0], [2, 2, 0], [0, 0, 1]], QQ))


def test_kernel_over_f7_differs_from_q():
    # det = 7, singular only mod 7
    rows = [[1, 2], [-2, 3]]
    assert kernel_basis(LinearMap.from_matrix(W2, W2, rows, QQ)) == []
    assert len(kernel_basis(LinearMap.from_matrix(W2, W2, rows, F7))) == 1
