"""Shared hypothesis strategies: random elements of a fixed finite-dimensional space."""

from hypothesis import strategies as st

from hopfyd.linalg import Tensor

coeff = st.integers(-3, 3)


def elements(H, nonzero=False):
    """Random combinations of basis vectors of a Hopf algebra (or anything with .space and .field)."""
    n = H.space.dim
    s = st.lists(coeff, min_size=n, max_size=n)
    if nonzero:
        s = s.filter(any)
    return s.map(lambda cs: Tensor((H.space,), {(i,): H.field(c) for i, c in enumerate(cs) if c}, H.field))
