"""Look closer at the inverse-twist identities that fail as literal equalities.

For each fixture prints: whether the displayed σ⁻¹ and η⁻¹ are convolution
inverses, whether the twisted products are associative, the centre dimension
of each twisted algebra next to that of the Heisenberg algebra it should
match, and the first basis pair where the products differ.
"""

import sys

from hopfyd.actions import verify_algebra
from hopfyd.doubles import (
    convolution_inverse_form,
    drinfeld_codouble,
    drinfeld_double,
    heisenberg_double,
    twist_forms,
    twisted_product,
)
from hopfyd.examples import HOPF_FIXTURES, hopf_fixture
from hopfyd.hopf import dual
from hopfyd.linalg import Algebra, LinearMap, Space, kernel_basis, multiply, set_max_dim


def centre_dim(A: Algebra) -> int:
    """dim Z(A) as the kernel of x ↦ (xe_j − e_jx)_j."""
    V, F = A.space, A.field
    n = V.dim

    def img(idx):
        x = A.element(idx)
        out = {}
        for j in range(n):
            e = A.element((j,))
            d = multiply(A, x, e) - multiply(A, e, x)
            for (k,), c in d.coeffs.items():
                out[(j * n + k,)] = c
        return out

    old = set_max_dim(max(n * n, 128))
    try:
        big = Space("comm", n * n)
        return len(kernel_basis(LinearMap.from_function((V,), (big,), img, F)))
    finally:
        set_max_dim(old)


def probe(name: str):
    H = hopf_fixture(name)
    T, D = drinfeld_codouble(H, "radford"), drinfeld_double(H, "radford")
    forms = twist_forms(H)
    rows = []
    for label, K, key, side, target in (
        ("σ⁻¹ on 𝒯_R", T, "sigma_inv", "right", heisenberg_double(H)),
        ("η⁻¹ on 𝒟_R", D, "eta_inv", "left", heisenberg_double(dual(H))),
    ):
        f = forms[key].with_spaces((K.space, K.space), ())
        base = "sigma" if key == "sigma_inv" else "eta"
        is_inv = convolution_inverse_form(K, forms[base]) == f
        m = twisted_product(K, f, side)
        A = Algebra.single(m, K.unit)
        assoc = verify_algebra(A).ok
        same = m.table == target.mult.with_spaces((K.space, K.space), (K.space,)).table
        z = centre_dim(A) if assoc else None
        rows.append((label, is_inv, assoc, z, centre_dim(target), same))
    return rows


def main() -> int:
    print(f"{'fixture':10} {'form':12} {'conv.inv':8} {'assoc':6} {'Z(twist)':8} {'Z(ℋ)':5} equal")
    for name in HOPF_FIXTURES:
        for label, inv, assoc, z, zt, same in probe(name):
            print(f"{name:10} {label:12} {str(inv):8} {str(assoc):6} {str(z):8} {zt:<5} {same}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
