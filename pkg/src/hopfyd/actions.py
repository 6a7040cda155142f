"""Module and comodule algebras, the canonical actions, and smash products."""

from __future__ import annotations

from dataclasses import dataclass

from .hopf import HopfAlgebraData, coopposite, dual, opposite
from .linalg import (
    Algebra,
    LinearMap,
    NotInvertible,
    Space,
    Tensor,
    apply,
    apply_at,
    as_map,
    at,
    embed_legs,
    fuse_legs,
    invert_element,
    kernel_basis,
    multiply,
    perm,
    pipe,
    product_space,
    reorder,
    split_leg,
    tensor_product,
)
from .pairing import CanonicalElementData, PairingData, canonical_pairing, flip_pairing, hit_left_map, hit_right_map
from .reports import Report, compare


class CocycleConditionFailed(ValueError):
    pass


LEFT, RIGHT = "left", "right"


@dataclass(eq=False)
class ModuleAlgebraData:
    hopf: HopfAlgebraData
    carrier: Algebra
    side: str
    action: LinearMap
    check_algebra: bool = True

    def __post_init__(self):
        H, X = self.hopf.space, self.carrier.space
        dom = (H, X) if self.side == LEFT else (X, H)
        self.action = self.action.with_spaces(dom, (X,))

    def act(self, h: Tensor, x: Tensor) -> Tensor:
        t = tensor_product(h, x) if self.side == LEFT else tensor_product(x, h)
        return apply(self.action, t)


@dataclass(eq=False)
class ComoduleAlgebraData:
    hopf: HopfAlgebraData
    carrier: Algebra
    side: str
    coaction: LinearMap

    def __post_init__(self):
        H, X = self.hopf.space, self.carrier.space
        cod = (H, X) if self.side == LEFT else (X, H)
        self.coaction = self.coaction.with_spaces((X,), cod)

    def __call__(self, x: Tensor) -> Tensor:
        return apply(self.coaction, x)


def verify_algebra(A: Algebra, name: str = "algebra") -> Report:
    X, F = A.space, A.field
    m = A.mult
    r = Report(f"algebra {name}")
    r.add(compare("associativity", (X, X, X), F, lambda t: apply(m, apply_at(m, t, 0)), lambda t: apply(m, apply_at(m, t, 1))))
    r.add(compare("left unit", (X,), F, lambda t: apply(m, tensor_product(A.unit, t)), lambda t: t))
    r.add(compare("right unit", (X,), F, lambda t: apply(m, tensor_product(t, A.unit)), lambda t: t))
    return r


def verify_module_algebra(M: ModuleAlgebraData) -> Report:
    H, A, F = M.hopf, M.carrier, M.hopf.field
    V, X = H.space, A.space
    act, mX = M.action, A.mult
    r = Report(f"{M.side} {H.name}-module algebra")
    if M.side == LEFT:
        r.add(compare("(hh')▷x = h▷(h'▷x)", (V, V, X), F, lambda t: pipe(t, at(H.mult, 0), at(act, 0)), lambda t: pipe(t, at(act, 1), at(act, 0))))
        r.add(compare("1▷x = x", (X,), F, lambda t: apply(act, tensor_product(H.unit, t)), lambda t: t))
        if M.check_algebra:
            r.add(
                compare(
                    "h▷(xy) = (h1▷x)(h2▷y)",
                    (V, X, X),
                    F,
                    lambda t: pipe(t, at(mX, 1), at(act, 0)),
                    lambda t: pipe(t, at(H.comult, 0), perm(0, 2, 1, 3), at(act, 0), at(act, 1), at(mX, 0)),
                )
            )
            r.add(compare("h▷1 = ε(h)1", (V,), F, lambda t: apply(act, tensor_product(t, A.unit)), lambda t: A.unit.scale(H.eps(t))))
    else:
        r.add(compare("x◁(hh') = (x◁h)◁h'", (X, V, V), F, lambda t: pipe(t, at(H.mult, 1), at(act, 0)), lambda t: pipe(t, at(act, 0), at(act, 0))))
        r.add(compare("x◁1 = x", (X,), F, lambda t: apply(act, tensor_product(t, H.unit)), lambda t: t))
        if M.check_algebra:
            r.add(
                compare(
                    "(xy)◁h = (x◁h1)(y◁h2)",
                    (X, X, V),
                    F,
                    lambda t: pipe(t, at(mX, 0), at(act, 0)),
                    lambda t: pipe(t, at(H.comult, 2), perm(0, 2, 1, 3), at(act, 0), at(act, 1), at(mX, 0)),
                )
            )
            r.add(compare("1◁h = ε(h)1", (V,), F, lambda t: apply(act, tensor_product(A.unit, t)), lambda t: A.unit.scale(H.eps(t))))
    return r


def verify_comodule_algebra(Cm: ComoduleAlgebraData) -> Report:
    H, A, F = Cm.hopf, Cm.carrier, Cm.hopf.field
    X = A.space
    al = Cm.coaction
    r = Report(f"{Cm.side} {H.name}-comodule algebra")
    if Cm.side == LEFT:
        r.add(compare("(id⊗α)α = (Δ⊗id)α", (X,), F, lambda t: pipe(t, at(al), at(al, 1)), lambda t: pipe(t, at(al), at(H.comult, 0))))
        counit = compare("(ε⊗id)α = id", (X,), F, lambda t: pipe(t, at(al), at(H.counit, 0)), lambda t: t)
        B = H.algebra @ A
    else:
        r.add(compare("(α⊗id)α = (id⊗Δ)α", (X,), F, lambda t: pipe(t, at(al), at(al, 0)), lambda t: pipe(t, at(al), at(H.comult, 1))))
        counit = compare("(id⊗ε)α = id", (X,), F, lambda t: pipe(t, at(al), at(H.counit, 1)), lambda t: t)
        B = A @ H.algebra
    r.add(counit)

    def prod_images(t):
        (i, j), c = next(iter(t.coeffs.items()))
        return multiply(B, apply(al, A.element((i,))), apply(al, A.element((j,)))).scale(c)

    r.add(compare("α(xy) = α(x)α(y)", (X, X), F, lambda t: apply(al, apply(A.mult, t)), prod_images))
    r.flag("α(1) = 1⊗1", apply(al, A.unit) == B.unit, f"α(1) = {apply(al, A.unit).pretty()}")
    injective = not kernel_basis(al)
    r.flag("α injective", injective, "α has a nonzero kernel")
    r.flag("injectivity matches counit law", injective == counit.passed)
    return r


# ---------------------------------------------------------------------------
# canonical actions

REGULAR = ("dual-on-H-left", "dual-on-H-right", "H-on-dual-left", "H-on-dual-right")


def regular_action(H: HopfAlgebraData, which: str) -> ModuleAlgebraData:
    """ω▶h = h(1)p(h(2),ω), h◀ω = p(h(1),ω)h(2), h▶ω = ω(1)p(h,ω(2)), ω◀h = p(h,ω(1))ω(2)."""
    P = canonical_pairing(H)
    Hd = P.right
    if which == "dual-on-H-left":
        return ModuleAlgebraData(Hd, H.algebra, LEFT, hit_left_map(P), check_algebra=False)
    if which == "dual-on-H-right":
        return ModuleAlgebraData(Hd, H.algebra, RIGHT, hit_right_map(P), check_algebra=False)
    Pf = flip_pairing(P)
    if which == "H-on-dual-left":
        return ModuleAlgebraData(H, Hd.algebra, LEFT, hit_left_map(Pf), check_algebra=False)
    if which == "H-on-dual-right":
        return ModuleAlgebraData(H, Hd.algebra, RIGHT, hit_right_map(Pf), check_algebra=False)
    raise ValueError(f"unknown regular action {which!r}; expected one of {REGULAR}")


def adjoint_action(H: HopfAlgebraData, side: str = LEFT) -> ModuleAlgebraData:
    """h▶g = h(1)gS(h(2)) or g◀h = S(h(1))gh(2)."""
    V, F = H.space, H.field
    m, S, d = H.mult, H.antipode, H.comult
    if side == LEFT:
        fn = lambda t: pipe(t, at(d, 0), perm(0, 2, 1), at(S, 2), at(m, 0), at(m, 0))
    else:
        fn = lambda t: pipe(t, at(d, 1), perm(1, 0, 2), at(S, 0), at(m, 0), at(m, 0))
    return ModuleAlgebraData(H, H.algebra, side, as_map((V, V), (V,), fn, F))


def coadjoint_action(H: HopfAlgebraData, side: str = LEFT) -> ModuleAlgebraData:
    """h▶ω = h(1)▶ω◀S⁻¹(h(2)) or ω◀h = S⁻¹(h(1))▶ω◀h(2)."""
    Hd = dual(H)
    V, W, F = H.space, Hd.space, H.field
    lft = regular_action(H, "H-on-dual-left").action  # (H, Ĥ) → Ĥ
    rgt = regular_action(H, "H-on-dual-right").action  # (Ĥ, H) → Ĥ
    if side == LEFT:
        # (h, ω) → (h1, h2, ω) → (h1, ω, S⁻¹h2)
        fn = lambda t: pipe(t, at(H.comult, 0), perm(0, 2, 1), at(H.antipode_inv, 2), at(rgt, 1), at(lft, 0))
        dom = (V, W)
    else:
        # (ω, h) → (ω, h1, h2) → (S⁻¹h1, ω, h2)
        fn = lambda t: pipe(t, at(H.comult, 1), perm(1, 0, 2), at(H.antipode_inv, 0), at(lft, 0), at(rgt, 0))
        dom = (W, V)
    # dual to the adjoint action, so it respects Δ̂ rather than the product of Ĥ
    return ModuleAlgebraData(H, Hd.algebra, side, as_map(dom, (W,), fn, F), check_algebra=False)


def verify_coadjoint(M: ModuleAlgebraData) -> Report:
    """Module axioms plus Δ̂(h▶ω) = h(2)▶ω(1)⊗h(1)▶ω(2) (left) or Δ̂(ω◀h) = ω(1)◀h(2)⊗ω(2)◀h(1) (right)."""
    H, F = M.hopf, M.hopf.field
    Hd = dual(H)
    act = M.action
    r = verify_module_algebra(M)
    r.suite = f"{M.side} coadjoint action of {H.name}"
    lhs = lambda t: pipe(t, at(act, 0), at(Hd.comult, 0))
    if M.side == LEFT:
        legs = (H.space, Hd.space)
        rhs = lambda t: pipe(t, at(H.comult, 0), at(Hd.comult, 2), perm(1, 2, 0, 3), at(act, 0), at(act, 1))
        name = "Δ(h▶ω) = h2▶ω1 ⊗ h1▶ω2"
    else:
        legs = (Hd.space, H.space)
        rhs = lambda t: pipe(t, at(Hd.comult, 0), at(H.comult, 2), perm(0, 3, 1, 2), at(act, 0), at(act, 1))
        name = "Δ(ω◀h) = ω1◀h2 ⊗ ω2◀h1"
    r.add(compare(name, legs, F, lhs, rhs))
    r.add(compare("ε(h▶ω) = ε(h)ε(ω)", legs, F, lambda t: pipe(t, at(act, 0), at(Hd.counit, 0)), lambda t: pipe(t, at(H.counit, 0 if M.side == LEFT else 1), at(Hd.counit, 0))))
    return r


def coadjoint_consistency(H: HopfAlgebraData) -> Report:
    """p(g, h▶ω) = p(S⁻¹(h)▶g, ω) and p(g, ω◀h) = p(g◀S⁻¹(h), ω)."""
    Hd = dual(H)
    P = canonical_pairing(H)
    F = H.field
    la, ra = adjoint_action(H, LEFT), adjoint_action(H, RIGHT)
    lc, rc = coadjoint_action(H, LEFT), coadjoint_action(H, RIGHT)
    r = Report(f"coadjoint vs adjoint {H.name}")
    legs = (H.space, H.space, Hd.space)  # (h, g, ω)

    def coad_l(t):
        return apply_at(P.form, apply_at(lc.action, reorder(t, (1, 0, 2)), 1), 0)

    def ad_l(t):
        return apply(P.form, apply_at(la.action, apply_at(H.antipode_inv, t, 0), 0))

    def coad_r(t):
        return apply_at(P.form, apply_at(rc.action, reorder(t, (1, 2, 0)), 1), 0)

    def ad_r(t):
        return apply(P.form, apply_at(ra.action, reorder(apply_at(H.antipode_inv, t, 0), (1, 0, 2)), 0))

    r.add(compare("p(g, h▶coad ω) = p(S⁻¹h ▶ad g, ω)", legs, F, coad_l, ad_l))
    r.add(compare("p(g, ω◀coad h) = p(g ◀ad S⁻¹h, ω)", legs, F, coad_r, ad_r))
    return r


# ---------------------------------------------------------------------------
# action ⇄ coaction through a pairing


def _slot(P: PairingData, K: HopfAlgebraData) -> str:
    if K is P.left:
        return "left"
    if K is P.right:
        return "right"
    if K.name == P.left.name:
        return "left"
    if K.name == P.right.name:
        return "right"
    raise ValueError(f"{K.name} is neither factor of the pairing")


def action_from_coaction(Cm: ComoduleAlgebraData, P: PairingData) -> ModuleAlgebraData:
    """Right coactions become left actions of the other factor, left coactions right ones."""
    A, F = Cm.carrier, Cm.hopf.field
    X = A.space
    al, form = Cm.coaction, P.form
    slot = _slot(P, Cm.hopf)
    other = P.right if slot == "left" else P.left
    W = other.space
    if Cm.side == RIGHT:
        if slot == "left":  # ω▷x = x[0] p(x[1], ω)
            fn = lambda t: pipe(t, perm(1, 0), at(al, 0), at(form, 1))
        else:  # h▷x = x[0] p(h, x[1])
            fn = lambda t: pipe(t, perm(1, 0), at(al, 0), perm(0, 2, 1), at(form, 1))
        return ModuleAlgebraData(other, A, LEFT, as_map((W, X), (X,), fn, F))
    if slot == "left":  # x◁ω = p(x[-1], ω) x[0]
        fn = lambda t: pipe(t, at(al, 0), perm(0, 2, 1), at(form, 0))
    else:  # x◁h = p(h, x[-1]) x[0]
        fn = lambda t: pipe(t, at(al, 0), perm(2, 0, 1), at(form, 0))
    return ModuleAlgebraData(other, A, RIGHT, as_map((X, W), (X,), fn, F))


def coaction_from_action(M: ModuleAlgebraData, C: CanonicalElementData) -> ComoduleAlgebraData:
    """Inverse of :func:`action_from_coaction`, built from U."""
    A, F = M.carrier, M.hopf.field
    X = A.space
    act = M.action
    U = C.U
    slot = _slot(C.pairing, M.hopf)
    other = C.K if slot == "left" else C.H

    if M.side == LEFT:
        if slot == "left":  # (U1▷x)⊗U2
            fn = lambda t: pipe(tensor_product(U, t), perm(0, 2, 1), at(act, 0))
        else:  # (U2▷x)⊗U1
            fn = lambda t: pipe(tensor_product(U, t), perm(1, 2, 0), at(act, 0))
        return ComoduleAlgebraData(other, A, RIGHT, as_map((X,), (X, other.space), fn, F))
    if slot == "left":  # U2⊗(x◁U1)
        fn = lambda t: pipe(tensor_product(U, t), perm(1, 2, 0), at(act, 1))
    else:  # U1⊗(x◁U2)
        fn = lambda t: pipe(tensor_product(U, t), perm(0, 2, 1), at(act, 1))
    return ComoduleAlgebraData(other, A, LEFT, as_map((X,), (other.space, X), fn, F))


def coaction_from_invertible(W: Tensor, hopf: HopfAlgebraData, carrier: Algebra, side: str = LEFT) -> ComoduleAlgebraData:
    """α_W(x) = W(1⊗x)W⁻¹ (left) or W(x⊗1)W⁻¹ (right)."""
    F = hopf.field
    H, X = hopf.space, carrier.space
    if side == LEFT:
        B = hopf.algebra @ carrier
        legs = (H, X)
        W = W.with_legs(legs)
        Winv = invert_element(B, W)
        B3 = hopf.algebra @ hopf.algebra @ carrier
        lhs = apply_at(hopf.comult, W, 0)
        rhs = multiply(B3, embed_legs(W, (1, 2), (H, H, X), {0: hopf.unit}), embed_legs(W, (0, 2), (H, H, X), {1: hopf.unit}))
        if lhs != rhs:
            raise CocycleConditionFailed("(Δ⊗id)W ≠ W23 W13")
        fn = lambda t: multiply(B, multiply(B, W, tensor_product(hopf.unit, t)), Winv)
        return ComoduleAlgebraData(hopf, carrier, LEFT, as_map((X,), legs, fn, F))
    B = carrier @ hopf.algebra
    legs = (X, H)
    W = W.with_legs(legs)
    Winv = invert_element(B, W)
    B3 = carrier @ hopf.algebra @ hopf.algebra
    lhs = apply_at(hopf.comult, W, 1)
    rhs = multiply(B3, embed_legs(W, (0, 1), (X, H, H), {2: hopf.unit}), embed_legs(W, (0, 2), (X, H, H), {1: hopf.unit}))
    if lhs != rhs:
        raise CocycleConditionFailed("(id⊗Δ)W ≠ W12 W13")
    fn = lambda t: multiply(B, multiply(B, W, tensor_product(t, hopf.unit)), Winv)
    return ComoduleAlgebraData(hopf, carrier, RIGHT, as_map((X,), legs, fn, F))


def opposite_coaction(Cm: ComoduleAlgebraData, mode: str) -> ComoduleAlgebraData:
    """α^op = (op⊗op)α into H^op, or α^co = (S⊗op)α into H^co (S of whatever H carries the coaction)."""
    H = Cm.hopf
    Xop = Cm.carrier.opposite()
    if mode == "op":
        T = opposite(H)
        return ComoduleAlgebraData(T, Xop, Cm.side, Cm.coaction)
    if mode == "co":
        T = coopposite(H)
        pos = 0 if Cm.side == LEFT else 1
        S = H.antipode
        table = {}
        for k, img in Cm.coaction.table.items():
            table[k] = apply_at(S, Tensor(Cm.coaction.codomain, img, H.field), pos).coeffs
        return ComoduleAlgebraData(T, Xop, Cm.side, LinearMap(Cm.coaction.domain, Cm.coaction.codomain, table, H.field))
    raise ValueError(f"mode must be 'op' or 'co', not {mode!r}")


# ---------------------------------------------------------------------------
# smash products


def smash_product(M: ModuleAlgebraData, sep: str = "#") -> Algebra:
    """X # H with (x#h)(y#h') = x(h(1)▷y) # h(2)h'."""
    if M.side != LEFT:
        raise ValueError("smash product needs a left action")
    H, A, F = M.hopf, M.carrier, M.hopf.field
    X, V = A.space, H.space
    P = product_space(f"{X.name}{sep}{V.name}", X, V, sep)
    act = M.action

    def img(idx):
        t = Tensor.basis((P, P), idx, F)
        t = split_leg(split_leg(t, 1, X, V), 0, X, V)  # x h y h'
        t = pipe(t, at(H.comult, 1), perm(0, 1, 3, 2, 4), at(act, 1), at(A.mult, 0), at(H.mult, 1))
        return fuse_legs(t, 0, P)

    mult = LinearMap.from_function((P, P), (P,), img, F)
    unit = fuse_legs(tensor_product(A.unit, H.unit), 0, P)
    return Algebra.single(mult, unit)
