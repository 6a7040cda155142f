"""Pairings of Hopf algebras, the canonical element U and what is built from it."""

from __future__ import annotations

from dataclasses import dataclass

from .hopf import HopfAlgebraData, dual, opposite
from .linalg import (
    Algebra,
    LinearMap,
    NotInvertible,
    Tensor,
    ad_map,
    apply,
    apply_at,
    at,
    embed_legs,
    invert_element,
    invert_map,
    multiply,
    perm,
    pipe,
    reorder,
    tensor_product,
)
from .reports import Check, Report, compare


class Degenerate(ValueError):
    pass


@dataclass(eq=False)
class PairingData:
    """A bilinear form p: left × right → 𝕜 between two Hopf algebras."""

    left: HopfAlgebraData
    right: HopfAlgebraData
    form: LinearMap

    def __post_init__(self):
        self.form = self.form.with_spaces((self.left.space, self.right.space), ())
        self.field = self.left.field

    def __call__(self, h: Tensor, w: Tensor):
        return apply(self.form, tensor_product(h, w)).coefficient(())

    def matrix(self) -> list[list]:
        z = self.field.zero
        M = [[z] * self.right.dim for _ in range(self.left.dim)]
        for (i, j), img in self.form.table.items():
            M[i][j] = img[()]
        return M

    def pair2(self, x: Tensor, y: Tensor):
        """(p⊗p)(x, y) for x ∈ left⊗left and y ∈ right⊗right."""
        t = reorder(tensor_product(x, y), (0, 2, 1, 3))
        return apply_at(self.form, apply_at(self.form, t, 2), 0).coefficient(())

    def slice_right(self, h: Tensor) -> LinearMap:
        """ₕp = p(h, ·) as a form on the right factor."""
        R = self.right.space
        return LinearMap((R,), (), {(j,): {(): self(h, self.right.e(j))} for j in range(self.right.dim)}, self.field)

    def slice_left(self, w: Tensor) -> LinearMap:
        """p(·, ω) as a form on the left factor."""
        L = self.left.space
        return LinearMap((L,), (), {(i,): {(): self(self.left.e(i), w)} for i in range(self.left.dim)}, self.field)


def canonical_pairing(H: HopfAlgebraData) -> PairingData:
    """p(h, θ) = θ(h); with dual bases its matrix is the identity."""
    if "pairing" in H.cache:
        return H.cache["pairing"]
    Hd = dual(H)
    form = LinearMap((H.space, Hd.space), (), {(i, i): {(): H.field.one} for i in range(H.dim)}, H.field)
    P = PairingData(H, Hd, form)
    H.cache["pairing"] = P
    return P


def flip_pairing(P: PairingData) -> PairingData:
    """p̄(ω, h) = p(h, ω)."""
    table = {(j, i): img for (i, j), img in P.form.table.items()}
    return PairingData(P.right, P.left, LinearMap((P.right.space, P.left.space), (), table, P.field))


def verify_pairing(P: PairingData) -> Report:
    H, K, F = P.left, P.right, P.field
    V, W = H.space, K.space
    form = P.form
    r = Report(f"pairing {H.name} x {K.name}")

    # (h, h', θ)
    r.add(
        compare(
            "p⊗p(h⊗h', Δθ) = p(hh', θ)",
            (V, V, W),
            F,
            lambda t: pipe(t, at(K.comult, 2), perm(0, 2, 1, 3), at(form, 2), at(form, 0)),
            lambda t: apply(form, apply_at(H.mult, t, 0)),
        )
    )
    # (h, θ, θ')
    r.add(
        compare(
            "p⊗p(Δh, θ⊗θ') = p(h, θθ')",
            (V, W, W),
            F,
            lambda t: pipe(t, at(H.comult, 0), perm(0, 2, 1, 3), at(form, 2), at(form, 0)),
            lambda t: apply(form, apply_at(K.mult, t, 1)),
        )
    )
    r.add(
        compare(
            "p(1, θ) = ε(θ)",
            (W,),
            F,
            lambda t: apply(form, tensor_product(H.unit, t)),
            lambda t: apply(K.counit, t),
        )
    )
    r.add(
        compare(
            "p(h, 1) = ε(h)",
            (V,),
            F,
            lambda t: apply(form, tensor_product(t, K.unit)),
            lambda t: apply(H.counit, t),
        )
    )
    r.add(
        compare(
            "p(Sh, θ) = p(h, Sθ)",
            (V, W),
            F,
            lambda t: apply(form, apply_at(H.antipode, t, 0)),
            lambda t: apply(form, apply_at(K.antipode, t, 1)),
        )
    )
    return r


# ---------------------------------------------------------------------------
# canonical element


class CanonicalElementData:
    """U ∈ left⊗right with p²(U, ω⊗h) = p(h, ω), and its inverse."""

    def __init__(self, pairing: PairingData, U: Tensor, U_inv: Tensor):
        self.pairing = pairing
        self.H = pairing.left
        self.K = pairing.right
        self.U = U
        self.U_inv = U_inv
        self.algebra: Algebra = self.H.algebra @ self.K.algebra
        self.field = pairing.field
        self.cache: dict = {}

    @property
    def legs(self):
        return (self.H.space, self.K.space)


def _inverse_matrix(P: PairingData) -> list[list]:
    n, m = P.left.dim, P.right.dim
    if n != m:
        raise Degenerate("pairing between spaces of different dimension")
    try:
        inv = invert_map(
            LinearMap.from_matrix(P.left.space, P.right.space, P.matrix(), P.field)
        ).matrix()
    except NotInvertible as exc:
        raise Degenerate("pairing matrix is singular") from exc
    return inv


def canonical_element(P: PairingData) -> CanonicalElementData:
    """U = Σ (M⁻¹)ⱼᵢ hᵢ⊗kⱼ, with U⁻¹ = (S⊗id)U checked to be a two-sided inverse."""
    if getattr(P, "_canonical", None) is not None:
        return P._canonical
    H, K, F = P.left, P.right, P.field
    Minv = _inverse_matrix(P)
    coeffs = {}
    for i in range(H.dim):
        for j in range(K.dim):
            c = Minv[j][i]
            if c:
                coeffs[(i, j)] = c
    legs = (H.space, K.space)
    U = Tensor(legs, coeffs, F)
    U_inv = apply_at(H.antipode, U, 0)
    A = H.algebra @ K.algebra
    one = tensor_product(H.unit, K.unit)
    if multiply(A, U, U_inv) != one or multiply(A, U_inv, U) != one:
        raise NotInvertible("(S⊗id)U is not inverse to U; the pairing is not a Hopf pairing")
    C = CanonicalElementData(P, U, U_inv)
    P._canonical = C
    return C


def canonical(H: HopfAlgebraData) -> CanonicalElementData:
    """Canonical element of the canonical pairing of H."""
    return canonical_element(canonical_pairing(H))


def dual_basis_sum(H: HopfAlgebraData) -> Tensor:
    """Σᵢ hᵢ⊗ĥᵢ, computed without any matrix inversion."""
    Hd = dual(H)
    return Tensor((H.space, Hd.space), {(i, i): H.field.one for i in range(H.dim)}, H.field)


def p2(C: CanonicalElementData, x: Tensor, y: Tensor):
    """p²(h⊗ω, ω'⊗h') = p(h, ω')·p̄(ω, h') for x ∈ H⊗K, y ∈ K⊗H."""
    form = C.pairing.form
    t = tensor_product(x, y)  # h ω ω' h'
    t = reorder(t, (0, 2, 3, 1))  # h ω' h' ω
    return apply_at(form, apply_at(form, t, 2), 0).coefficient(())


def verify_canonical_identities(C: CanonicalElementData, with_solver: bool = True) -> Report:
    H, K, F = C.H, C.K, C.field
    V, W = H.space, K.space
    U, Uinv = C.U, C.U_inv
    r = Report(f"canonical element {H.name} x {K.name}")
    P = C.pairing

    w = None
    for a in range(K.dim):
        for b in range(H.dim):
            lhs = p2(C, U, tensor_product(K.e(a), H.e(b)))
            rhs = P(H.e(b), K.e(a))
            if lhs != rhs:
                w = f"ω={K.labels[a]}, h={H.labels[b]}: {lhs} vs {rhs}"
                break
        if w:
            break
    r.flag("p²(U, ω⊗h) = p(h, ω)", w is None, w)

    A3l = H.algebra @ H.algebra @ K.algebra
    lhs = apply_at(H.comult, U, 0)
    U13 = embed_legs(U, (0, 2), (V, V, W), {1: H.unit})
    U23 = embed_legs(U, (1, 2), (V, V, W), {0: H.unit})
    rhs = multiply(A3l, U13, U23)
    r.flag("(Δ⊗id)U = U13 U23", lhs == rhs, f"lhs={lhs.pretty()} rhs={rhs.pretty()}")

    A3r = H.algebra @ K.algebra @ K.algebra
    lhs = apply_at(K.comult, U, 1)
    U12 = embed_legs(U, (0, 1), (V, W, W), {2: K.unit})
    U13 = embed_legs(U, (0, 2), (V, W, W), {1: K.unit})
    rhs = multiply(A3r, U12, U13)
    r.flag("(id⊗Δ)U = U12 U13", lhs == rhs, f"lhs={lhs.pretty()} rhs={rhs.pretty()}")

    r.add(
        compare(
            "(p(·,ω)⊗id)U = ω",
            (W,),
            F,
            lambda t: _slice_left_of(C, t),
            lambda t: t,
        )
    )
    r.add(
        compare(
            "(id⊗p(h,·))U = h",
            (V,),
            F,
            lambda t: _slice_right_of(C, t),
            lambda t: t,
        )
    )
    s1 = apply_at(H.antipode, U, 0)
    s2 = apply_at(K.antipode, U, 1)
    r.flag("U⁻¹ = (S⊗id)U", s1 == Uinv, f"(S⊗id)U={s1.pretty()}")
    r.flag("U⁻¹ = (id⊗S)U", s2 == Uinv, f"(id⊗S)U={s2.pretty()}")
    one = tensor_product(H.unit, K.unit)
    r.flag("U U⁻¹ = 1 = U⁻¹ U", multiply(C.algebra, U, Uinv) == one and multiply(C.algebra, Uinv, U) == one)
    if with_solver:
        try:
            solved = invert_element(C.algebra, U)
            r.flag("U⁻¹ by linear solve", solved == Uinv, f"solved={solved.pretty()}")
        except NotInvertible as exc:
            r.flag("U⁻¹ by linear solve", False, str(exc))

    # the flipped pairing has canonical element Σ(U)
    Cf = canonical_element(flip_pairing(P))
    r.flag("canonical element of p̄ is Σ(U)", Cf.U == reorder(U, (1, 0)), f"got {Cf.U.pretty()}")
    return r


def _slice_left_of(C: CanonicalElementData, w: Tensor) -> Tensor:
    # (p(·,ω)⊗id)U
    t = tensor_product(C.U, w)  # H K K'
    t = reorder(t, (0, 2, 1))
    return apply_at(C.pairing.form, t, 0)


def _slice_right_of(C: CanonicalElementData, h: Tensor) -> Tensor:
    t = tensor_product(h, C.U)  # H' H K
    t = reorder(t, (0, 2, 1))  # H' K H
    return apply_at(C.pairing.form, t, 0)


# ---------------------------------------------------------------------------
# °U, T_U, T_{U⁻¹}


def circ_u(C: CanonicalElementData) -> Tensor:
    """°U = (op⊗id)U in H^op⊗K."""
    Hop = opposite(C.H)
    return C.U.with_legs((Hop.space, C.K.space))


def _t_map(C: CanonicalElementData, which: str) -> LinearMap:
    if which in C.cache:
        return C.cache[which]
    W = C.U if which == "T_U" else C.U_inv
    Winv = C.U_inv if which == "T_U" else C.U
    ad = ad_map(C.algebra, W, Winv)
    K = C.K
    Sk = LinearMap.identity((C.H.space,), C.field).kron(K.antipode)
    Skinv = LinearMap.identity((C.H.space,), C.field).kron(K.antipode_inv)
    T = Skinv.compose(ad).compose(Sk)
    C.cache[which] = T
    return T


def t_u(C: CanonicalElementData) -> LinearMap:
    """T_U = (id⊗Ŝ⁻¹)Ad(U)(id⊗Ŝ)."""
    return _t_map(C, "T_U")


def t_u_inv(C: CanonicalElementData) -> LinearMap:
    """T_{U⁻¹} = (id⊗Ŝ⁻¹)Ad(U⁻¹)(id⊗Ŝ)."""
    return _t_map(C, "T_Uinv")


def circ_u_report(C: CanonicalElementData) -> Report:
    H, K, F = C.H, C.K, C.field
    Hop = opposite(H)
    r = Report(f"°U and T_U for {H.name}")
    T, Ti = t_u(C), t_u_inv(C)
    ident = LinearMap.identity(C.legs, F)
    r.flag("T_U T_{U⁻¹} = id", T.compose(Ti) == ident)
    r.flag("T_{U⁻¹} T_U = id", Ti.compose(T) == ident)
    cU = circ_u(C)
    Aop = Hop.algebra @ K.algebra
    try:
        cUinv = invert_element(Aop, cU)
    except NotInvertible as exc:
        r.flag("(°U)⁻¹ = (op⊗Ŝ⁻¹)U", False, str(exc))
        return r
    expected = apply_at(K.antipode_inv, C.U, 1).with_legs(cU.legs)
    r.flag("(°U)⁻¹ = (op⊗Ŝ⁻¹)U", cUinv == expected, f"got {cUinv.pretty()}")
    ad_c = ad_map(Aop, cU, cUinv)
    r.flag("Ad(°U) = (op⊗id)T_U(op⊗id)", ad_c.table == T.table)
    # °U is the canonical element of H^op's canonical pairing
    Cop = canonical(Hop)
    w = None
    for a in range(Cop.K.dim):
        for b in range(Hop.dim):
            lhs = p2(Cop, cU.with_legs(Cop.legs), tensor_product(Cop.K.e(a), Hop.e(b)))
            rhs = Cop.pairing(Hop.e(b), Cop.K.e(a))
            if lhs != rhs:
                w = f"ω={Cop.K.labels[a]}, h={Hop.labels[b]}"
                break
        if w:
            break
    r.flag("°U is canonical for H^op", w is None, w)
    return r


# ---------------------------------------------------------------------------
# regular actions as maps, used by the slice identities and by `actions`


def hit_left_map(P: PairingData) -> LinearMap:
    """ω ▶ h = h(1) p(h(2), ω), as a map K⊗H → H."""
    H, K = P.left, P.right

    def img(idx):
        a, b = idx
        t = apply(H.comult, H.e(b))  # h1 h2
        t = tensor_product(t, K.e(a))
        return apply_at(P.form, t, 1)

    return LinearMap.from_function((K.space, H.space), (H.space,), img, P.field)


def hit_right_map(P: PairingData) -> LinearMap:
    """h ◀ ω = p(h(1), ω) h(2), as a map H⊗K → H."""
    H, K = P.left, P.right

    def img(idx):
        b, a = idx
        t = apply(H.comult, H.e(b))
        t = reorder(tensor_product(t, K.e(a)), (0, 2, 1))  # h1 ω h2
        return apply_at(P.form, t, 0)

    return LinearMap.from_function((H.space, K.space), (H.space,), img, P.field)


def slice_identities(C: CanonicalElementData) -> Report:
    """The four slice formulas for U, U⁻¹, T_U, T_{U⁻¹}, on every basis triple (h, g, ω)."""
    H, K, F = C.H, C.K, C.field
    V, W = H.space, K.space
    P = C.pairing
    form = P.form
    m, S, Sinv, d = H.mult, H.antipode, H.antipode_inv, H.comult
    lhit = hit_left_map(P)  # K⊗H → H
    rhit = hit_right_map(P)  # H⊗K → H
    A3 = H.algebra @ H.algebra @ K.algebra
    legs = (V, V, W)

    def emb(x):
        return embed_legs(x, (1, 2), legs, {0: H.unit})

    def slice_h(t):
        # t on (h, X, ω) → X·p(h, ω)
        return apply_at(form, reorder(t, (1, 0, 2)), 1)

    U1, Ui = emb(C.U), emb(C.U_inv)
    T, Ti = t_u(C), t_u_inv(C)
    r = Report(f"slice identities {H.name}")

    def lhs_i(t):
        return slice_h(multiply(A3, multiply(A3, U1, t), Ui))

    def lhs_ii(t):
        return slice_h(multiply(A3, multiply(A3, Ui, t), U1))

    def lhs_iii(t):
        return slice_h(apply_at(T, t, 1))

    def lhs_iv(t):
        return slice_h(apply_at(Ti, t, 1))

    # after Δ at leg 0 the legs are (h1, h2, g, ω)
    def i_a(t):  # (ω▶h1) g S(h2)
        return pipe(t, at(d, 0), perm(3, 0, 2, 1), at(lhit, 0), at(S, 2), at(m, 0), at(m, 0))

    def i_b(t):  # h1 g S(h2◀ω)
        return pipe(t, at(d, 0), perm(0, 2, 1, 3), at(rhit, 2), at(S, 2), at(m, 0), at(m, 0))

    def ii_a(t):  # S(h1) g (h2◀ω)
        return pipe(t, at(d, 0), perm(0, 2, 1, 3), at(rhit, 2), at(S, 0), at(m, 0), at(m, 0))

    def ii_b(t):  # S(ω▶h1) g h2
        return pipe(t, at(d, 0), perm(3, 0, 2, 1), at(lhit, 0), at(S, 0), at(m, 0), at(m, 0))

    def iii_a(t):  # S⁻¹(h2◀ω) g h1
        return pipe(t, at(d, 0), perm(1, 3, 2, 0), at(rhit, 0), at(Sinv, 0), at(m, 0), at(m, 0))

    def iii_b(t):  # S⁻¹(h2) g (ω▶h1)
        return pipe(t, at(d, 0), perm(1, 2, 3, 0), at(Sinv, 0), at(lhit, 2), at(m, 0), at(m, 0))

    def iv_a(t):  # h2 g S⁻¹(ω▶h1)
        return pipe(t, at(d, 0), perm(1, 2, 3, 0), at(lhit, 2), at(Sinv, 2), at(m, 0), at(m, 0))

    def iv_b(t):  # (h2◀ω) g S⁻¹(h1)
        return pipe(t, at(d, 0), perm(1, 3, 2, 0), at(rhit, 0), at(Sinv, 2), at(m, 0), at(m, 0))

    for tag, lhs, ra, rb in (
        ("(i) U(g⊗ω)U⁻¹", lhs_i, i_a, i_b),
        ("(ii) U⁻¹(g⊗ω)U", lhs_ii, ii_a, ii_b),
        ("(iii) T_U", lhs_iii, iii_a, iii_b),
        ("(iv) T_{U⁻¹}", lhs_iv, iv_a, iv_b),
    ):
        r.add(compare(f"{tag} first form", legs, F, lhs, ra))
        r.add(compare(f"{tag} second form", legs, F, lhs, rb))
    return r
