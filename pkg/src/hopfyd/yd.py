"""Yetter–Drinfeld algebras in both characterizations and all four side variants.

A *standard* instance is (X, action, coaction) over one Hopf algebra H.  An
*only-coaction* instance is (X, α, β) over a pairing H × K with canonical
element U; α coacts by H (or H^op) and β by K.  Every coaction records its
target Hopf algebra explicitly, so "δ lands in H^op" is part of the type
rather than a sign hidden in a formula.
"""

from __future__ import annotations

from dataclasses import dataclass

from .actions import (
    LEFT,
    RIGHT,
    ComoduleAlgebraData,
    ModuleAlgebraData,
    action_from_coaction,
    coaction_from_action,
    smash_product,
    verify_comodule_algebra,
    verify_module_algebra,
)
from .doubles import Flat, lift
from .hopf import HopfAlgebraData, coopposite, dual, opposite
from .linalg import (
    Algebra,
    LinearMap,
    Tensor,
    apply,
    apply_at,
    as_map,
    at,
    embed_legs,
    fuse_legs,
    invert_element,
    multiply,
    perm,
    pipe,
    reorder,
    split_leg,
    tensor_algebra,
    tensor_product,
)
from .pairing import (
    CanonicalElementData,
    PairingData,
    canonical,
    canonical_element,
    flip_pairing,
    hit_left_map,
)
from .reports import Check, Report, compare

VARIANTS = ("ll", "lr", "rr", "rl")


class UnknownFunctor(KeyError):
    pass


def _variant(v: str) -> str:
    if v not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, not {v!r}")
    return v


def _one_basis(t: Tensor):
    (idx, c), = t.coeffs.items()
    return idx, c


def map_check(name: str, f: LinearMap, g: LinearMap, anchor: str = "") -> Check:
    """f = g, with the first basis element where they differ as witness."""
    if f.domain_dims != g.domain_dims or f.codomain_dims != g.codomain_dims:
        return Check(name, False, f"shapes {f.domain_dims}->{f.codomain_dims} vs {g.domain_dims}->{g.codomain_dims}", anchor)
    return compare(name, f.domain, f.field, lambda t: apply(f, t), lambda t: apply(g, t).with_legs(f.codomain), anchor)


# ---------------------------------------------------------------------------
# the standard characterization

_ACTION_SIDE = {"ll": LEFT, "lr": LEFT, "rr": RIGHT, "rl": RIGHT}
_STD_CO_SIDE = {"ll": LEFT, "lr": RIGHT, "rr": RIGHT, "rl": LEFT}
_STD_CO_OP = {"ll": False, "lr": True, "rr": False, "rl": True}


@dataclass(eq=False)
class StandardYd:
    """(X, ▷ or ◁, δ).  In lr and rl the coaction lands in H^op."""

    variant: str
    hopf: HopfAlgebraData
    carrier: Algebra
    action: LinearMap
    coaction: LinearMap

    def __post_init__(self):
        _variant(self.variant)
        V, X = self.hopf.space, self.carrier.space
        dom = (V, X) if self.action_side == LEFT else (X, V)
        self.action = self.action.with_spaces(dom, (X,))
        T = self.coaction_hopf.space
        cod = (T, X) if self.coaction_side == LEFT else (X, T)
        self.coaction = self.coaction.with_spaces((X,), cod)

    @property
    def action_side(self) -> str:
        return _ACTION_SIDE[self.variant]

    @property
    def coaction_side(self) -> str:
        return _STD_CO_SIDE[self.variant]

    @property
    def coaction_hopf(self) -> HopfAlgebraData:
        return opposite(self.hopf) if _STD_CO_OP[self.variant] else self.hopf

    def module(self) -> ModuleAlgebraData:
        return ModuleAlgebraData(self.hopf, self.carrier, self.action_side, self.action)

    def comodule(self) -> ComoduleAlgebraData:
        return ComoduleAlgebraData(self.coaction_hopf, self.carrier, self.coaction_side, self.coaction)

    def same_as(self, other: "StandardYd") -> bool:
        return (
            self.variant == other.variant
            and self.hopf.structure_equal(other.hopf)
            and self.carrier.mult == other.carrier.mult
            and self.action == other.action
            and self.coaction == other.coaction
        )


def _std_condition(s: StandardYd):
    """(legs, symmetric lhs, symmetric rhs, closed lhs, closed rhs, anchors)."""
    H = s.hopf
    d, m, S, Si = H.comult, H.mult, H.antipode, H.antipode_inv
    a, dl = s.action, s.coaction
    V, X = H.space, s.carrier.space
    v = s.variant
    closed_lhs = (at(a, 0), at(dl, 0))
    if v == "ll":
        return (
            (V, X),
            (at(d, 0), at(dl, 2), perm(0, 2, 1, 3), at(m, 0), at(a, 1)),
            (at(d, 0), perm(0, 2, 1), at(a, 0), at(dl, 0), perm(0, 2, 1), at(m, 0)),
            closed_lhs,
            (at(d, 0), at(d, 1), at(dl, 3), perm(0, 3, 2, 1, 4), at(S, 2), at(m, 0), at(m, 0), at(a, 1)),
            ("h1x₋₁ ⊗ h2▷x0 = (h1▷x)₋₁h2 ⊗ (h1▷x)0", "δ(h▷x) = h1x₋₁S(h3) ⊗ h2▷x0"),
        )
    if v == "lr":
        return (
            (V, X),
            (at(d, 0), at(dl, 2), perm(0, 2, 1, 3), at(a, 0), at(m, 1)),
            (at(d, 0), at(a, 1), at(dl, 1), perm(1, 2, 0), at(m, 1)),
            closed_lhs,
            (at(d, 0), at(d, 1), at(dl, 3), perm(1, 3, 2, 4, 0), at(Si, 4), at(a, 0), at(m, 1), at(m, 1)),
            ("h1▷x0 ⊗ h2x1 = (h2▷x)0 ⊗ (h2▷x)1h1", "δ(h▷x) = h2▷x0 ⊗ h3x1S⁻¹(h1)"),
        )
    if v == "rr":
        return (
            (X, V),
            (at(d, 1), at(dl, 0), perm(0, 2, 1, 3), at(a, 0), at(m, 1)),
            (at(d, 1), perm(0, 2, 1), at(a, 0), at(dl, 0), perm(0, 2, 1), at(m, 1)),
            closed_lhs,
            (at(d, 1), at(d, 2), at(dl, 0), perm(0, 3, 2, 1, 4), at(S, 2), at(a, 0), at(m, 1), at(m, 1)),
            ("x0◁h1 ⊗ x1h2 = (x◁h2)0 ⊗ h1(x◁h2)1", "δ(x◁h) = x0◁h2 ⊗ S(h1)x1h3"),
        )
    return (
        (X, V),
        (at(d, 1), at(dl, 0), perm(0, 2, 1, 3), at(m, 0), at(a, 1)),
        (at(d, 1), at(a, 0), at(dl, 0), perm(2, 0, 1), at(m, 0)),
        closed_lhs,
        (at(d, 1), at(d, 2), at(dl, 0), perm(4, 0, 2, 1, 3), at(Si, 0), at(m, 0), at(m, 0), at(a, 1)),
        ("x₋₁h1 ⊗ x0◁h2 = h2(x◁h1)₋₁ ⊗ (x◁h1)0", "δ(x◁h) = S⁻¹(h3)x₋₁h1 ⊗ x0◁h2"),
    )


def check_standard_yd(s: StandardYd, structures: bool = True) -> Report:
    """Both displayed forms of the YD condition, plus the (co)module-algebra axioms."""
    F = s.hopf.field
    r = Report(f"standard {s.variant} YD over {s.hopf.name}")
    if structures:
        r.extend(verify_module_algebra(s.module()), "action")
        r.extend(verify_comodule_algebra(s.comodule()), "coaction")
    legs, sl, sr, cl, cr, (a_sym, a_closed) = _std_condition(s)
    sym = r.add(compare("YD condition, symmetric form", legs, F, lambda t: pipe(t, *sl), lambda t: pipe(t, *sr), a_sym))
    closed = r.add(compare("YD condition, closed form", legs, F, lambda t: pipe(t, *cl), lambda t: pipe(t, *cr), a_closed))
    r.flag("the two forms agree", sym.passed == closed.passed, f"symmetric {sym.passed}, closed {closed.passed}")
    return r


def is_standard_yd(s: StandardYd) -> bool:
    return check_standard_yd(s).ok


def braiding_maps(s: StandardYd) -> tuple[LinearMap, LinearMap]:
    """τ_X and ρ_X on X⊗X; braided commutativity is m∘τ = m, equivalently m∘ρ = m."""
    H, X, F = s.hopf, s.carrier.space, s.hopf.field
    a, dl = s.action, s.coaction
    S, Si = H.antipode, H.antipode_inv
    v = s.variant
    if v == "ll":  # x₋₁▷y ⊗ x0 ; y0 ⊗ S⁻¹(y₋₁)▷x
        tau = (at(dl, 0), perm(0, 2, 1), at(a, 0))
        rho = (at(dl, 1), at(Si, 1), perm(2, 1, 0), at(a, 1))
    elif v == "lr":  # S(x1)▷y ⊗ x0 ; y0 ⊗ y1▷x
        tau = (at(dl, 0), at(S, 1), perm(1, 2, 0), at(a, 0))
        rho = (at(dl, 1), perm(1, 2, 0), at(a, 1))
    elif v == "rr":  # y◁S⁻¹(x1) ⊗ x0 ; y0 ⊗ x◁y1
        tau = (at(dl, 0), at(Si, 1), perm(2, 1, 0), at(a, 0))
        rho = (at(dl, 1), perm(1, 0, 2), at(a, 1))
    else:  # y◁x₋₁ ⊗ x0 ; y0 ⊗ x◁S(y₋₁)
        tau = (at(dl, 0), perm(2, 0, 1), at(a, 0))
        rho = (at(dl, 1), at(S, 1), perm(2, 0, 1), at(a, 1))
    T = as_map((X, X), (X, X), lambda t: pipe(t, *tau), F)
    R = as_map((X, X), (X, X), lambda t: pipe(t, *rho), F)
    return T, R


_BC_ANCHORS = {
    "ll": ("xy = (x₋₁▷y)x0", "xy = y0(S⁻¹(y₋₁)▷x)"),
    "lr": ("xy = (S(x1)▷y)x0", "xy = y0(y1▷x)"),
    "rr": ("xy = (y◁S⁻¹(x1))x0", "xy = y0(x◁y1)"),
    "rl": ("xy = (y◁x₋₁)x0", "xy = y0(x◁S(y₋₁))"),
}


def check_braided_standard(s: StandardYd) -> Report:
    X, F = s.carrier.space, s.hopf.field
    m = s.carrier.mult
    T, R = braiding_maps(s)
    at_, ar_ = _BC_ANCHORS[s.variant]
    r = Report(f"braided commutativity, standard {s.variant}")
    c1 = r.add(compare("m∘τ = m", (X, X), F, lambda t: apply(m, apply(T, t)), lambda t: apply(m, t), at_))
    c2 = r.add(compare("m∘ρ = m", (X, X), F, lambda t: apply(m, apply(R, t)), lambda t: apply(m, t), ar_))
    ident = LinearMap.identity((X, X), F)
    r.add(map_check("τρ = id", T.compose(R), ident))
    r.add(map_check("ρτ = id", R.compose(T), ident))
    r.flag("τ-form and ρ-form agree", c1.passed == c2.passed)
    return r


def is_braided_standard(s: StandardYd) -> bool:
    r = check_braided_standard(s)
    return r.get("m∘τ = m").passed


# ---------------------------------------------------------------------------
# the only-coaction characterization

_ALPHA_SIDE = {"lr": LEFT, "rr": RIGHT, "rl": RIGHT, "ll": LEFT}
_ALPHA_OP = {"lr": False, "rr": True, "rl": False, "ll": True}
_BETA_SIDE = {"lr": RIGHT, "rr": RIGHT, "rl": LEFT, "ll": LEFT}


@dataclass(eq=False)
class CoactionYd:
    """(X, α, β) over a pairing C: α coacts by H (H^op for rr and ll), β by K."""

    variant: str
    C: CanonicalElementData
    carrier: Algebra
    alpha: LinearMap
    beta: LinearMap

    def __post_init__(self):
        _variant(self.variant)
        X = self.carrier.space
        A = self.alpha_hopf.space
        self.alpha = self.alpha.with_spaces((X,), (A, X) if self.alpha_side == LEFT else (X, A))
        K = self.C.K.space
        self.beta = self.beta.with_spaces((X,), (K, X) if self.beta_side == LEFT else (X, K))

    @property
    def hopf(self) -> HopfAlgebraData:
        return self.C.H

    @property
    def alpha_side(self) -> str:
        return _ALPHA_SIDE[self.variant]

    @property
    def beta_side(self) -> str:
        return _BETA_SIDE[self.variant]

    @property
    def alpha_hopf(self) -> HopfAlgebraData:
        return opposite(self.C.H) if _ALPHA_OP[self.variant] else self.C.H

    def alpha_comodule(self) -> ComoduleAlgebraData:
        return ComoduleAlgebraData(self.alpha_hopf, self.carrier, self.alpha_side, self.alpha)

    def beta_comodule(self) -> ComoduleAlgebraData:
        return ComoduleAlgebraData(self.C.K, self.carrier, self.beta_side, self.beta)

    def same_as(self, other: "CoactionYd") -> bool:
        return (
            self.variant == other.variant
            and self.C.H.structure_equal(other.C.H)
            and self.C.K.structure_equal(other.C.K)
            and self.C.pairing.form == other.C.pairing.form
            and self.carrier.mult == other.carrier.mult
            and self.alpha == other.alpha
            and self.beta == other.beta
        )


def circ_u_inverse(C: CanonicalElementData) -> Tensor:
    """(°U)⁻¹ in H^op⊗K: (id⊗S_K⁻¹)U, confirmed, with a solve as fallback."""
    if "circ_u_inv" in C.cache:
        return C.cache["circ_u_inv"]
    Hop = opposite(C.H)
    legs = (Hop.space, C.K.space)
    A = Hop.algebra @ C.K.algebra
    cU = C.U.with_legs(legs)
    guess = apply_at(C.K.antipode_inv, C.U, 1).with_legs(legs)
    one = A.unit
    if multiply(A, cU, guess) == one and multiply(A, guess, cU) == one:
        inv = guess
    else:
        inv = invert_element(A, cU)
    C.cache["circ_u_inv"] = inv
    return inv


def _conjugate(B: Algebra, W: Tensor, Winv: Tensor):
    return lambda t: multiply(B, multiply(B, W, t), Winv)


def _coaction_condition(c: CoactionYd):
    C, X = c.C, c.carrier
    H, K = C.H, C.K
    al, be = c.alpha, c.beta
    Hop = opposite(H)
    v = c.variant
    if v == "lr":  # (α⊗id)β = Ad(U13)(id⊗β)α in H⊗X⊗K
        B = tensor_algebra(H.algebra, X, K.algebra)
        W = embed_legs(C.U, (0, 2), B.legs, {1: X.unit})
        Wi = embed_legs(C.U_inv, (0, 2), B.legs, {1: X.unit})
        lhs = (at(be, 0), at(al, 0))
        rhs = (at(al, 0), at(be, 1), _conjugate(B, W, Wi))
        return lhs, rhs, "(α⊗id)β = Ad(U13)(id⊗β)α"
    if v == "rr":  # (α⊗id)β = (id⊗Ad(°U)⁻¹)(id⊗Σ)(β⊗id)α in X⊗H^op⊗K
        B = tensor_algebra(X, Hop.algebra, K.algebra)
        W = embed_legs(circ_u_inverse(C), (1, 2), B.legs, {0: X.unit})
        Wi = embed_legs(C.U.with_legs((Hop.space, K.space)), (1, 2), B.legs, {0: X.unit})
        lhs = (at(be, 0), at(al, 0))
        rhs = (at(al, 0), at(be, 0), perm(0, 2, 1), _conjugate(B, W, Wi))
        return lhs, rhs, "(α⊗id)β = (id⊗Ad(°U)⁻¹)(id⊗Σ)(β⊗id)α"
    if v == "rl":  # (id⊗α)β = Ad(Σ(U⁻¹)13)(β⊗id)α in K⊗X⊗H
        B = tensor_algebra(K.algebra, X, H.algebra)
        W = embed_legs(pipe(C.U_inv, perm(1, 0)), (0, 2), B.legs, {1: X.unit})
        Wi = embed_legs(pipe(C.U, perm(1, 0)), (0, 2), B.legs, {1: X.unit})
        lhs = (at(be, 0), at(al, 1))
        rhs = (at(al, 0), at(be, 0), _conjugate(B, W, Wi))
        return lhs, rhs, "(id⊗α)β = Ad(Σ(U⁻¹)13)(β⊗id)α"
    # ll: (id⊗α)β = (Σ⊗id)(Ad(°U)⊗id)(id⊗β)α, Ad taken in H^op⊗K⊗X
    B = tensor_algebra(Hop.algebra, K.algebra, X)
    W = embed_legs(C.U.with_legs((Hop.space, K.space)), (0, 1), B.legs, {2: X.unit})
    Wi = embed_legs(circ_u_inverse(C), (0, 1), B.legs, {2: X.unit})
    lhs = (at(be, 0), at(al, 1))
    rhs = (at(al, 0), at(be, 1), _conjugate(B, W, Wi), perm(1, 0, 2))
    return lhs, rhs, "(id⊗α)β = (Σ⊗id)(Ad(°U)⊗id)(id⊗β)α"


def check_coaction_yd(c: CoactionYd, structures: bool = True) -> Report:
    F = c.C.field
    r = Report(f"only-coaction {c.variant} YD over ({c.C.H.name}, {c.C.K.name})")
    if structures:
        r.extend(verify_comodule_algebra(c.alpha_comodule()), "α")
        r.extend(verify_comodule_algebra(c.beta_comodule()), "β")
    lhs, rhs, anchor = _coaction_condition(c)
    r.add(compare("mixed condition", (c.carrier.space,), F, lambda t: pipe(t, *lhs), lambda t: pipe(t, *rhs), anchor))
    return r


def is_coaction_yd(c: CoactionYd) -> bool:
    return check_coaction_yd(c).ok


# ---------------------------------------------------------------------------
# between the two characterizations

_TO_STANDARD = {"lr": "ll", "rr": "lr", "rl": "rr", "ll": "rl"}
_TO_COACTION = {v: k for k, v in _TO_STANDARD.items()}


def induced_action(c: CoactionYd) -> LinearMap:
    """▷_β (β right: h▷x = x0 p(h, x1)) or ◁_β (β left: x◁h = p(h, x₋₁) x0)."""
    M = action_from_coaction(c.beta_comodule(), c.C.pairing)
    return M.action


def to_standard(c: CoactionYd) -> StandardYd:
    """lr→ll, rr→lr, rl→rr, ll→rl: keep α, slice β."""
    return StandardYd(_TO_STANDARD[c.variant], c.C.H, c.carrier, induced_action(c), c.alpha)


def to_coaction(s: StandardYd, C: CanonicalElementData | None = None) -> CoactionYd:
    """Keep the coaction and rebuild β from the action through U."""
    if C is None:
        C = canonical(s.hopf)
    M = ModuleAlgebraData(C.H, s.carrier, s.action_side, s.action, False)
    beta = coaction_from_action(M, C).coaction
    return CoactionYd(_TO_COACTION[s.variant], C, s.carrier, s.coaction, beta)


def conversion_report(c: CoactionYd) -> Report:
    """Round trips are identities and the YD verdict survives conversion."""
    r = Report(f"conversion {c.variant} ↔ {_TO_STANDARD[c.variant]}")
    s = to_standard(c)
    back = to_coaction(s, c.C)
    r.flag("to_coaction(to_standard(c)) = c", back.same_as(c))
    r.flag("to_standard(to_coaction(s)) = s", to_standard(back).same_as(s))
    ok_c, ok_s = check_coaction_yd(c).ok, check_standard_yd(s).ok
    r.flag("c is YD ⇔ to_standard(c) is YD", ok_c == ok_s, f"coaction {ok_c}, standard {ok_s}")
    return r


# ---------------------------------------------------------------------------
# braided commutativity through Heisenberg algebras


def heisenberg_of(C: CanonicalElementData) -> Algebra:
    """H # K along ω▶h = h1 p(h2, ω)."""
    if "heis" not in C.cache:
        M = ModuleAlgebraData(C.K, C.H.algebra, LEFT, hit_left_map(C.pairing), False)
        C.cache["heis"] = smash_product(M)
    return C.cache["heis"]


def heisenberg_hat_of(C: CanonicalElementData) -> Algebra:
    """K # H along h▶ω = ω1 p(h, ω2)."""
    if "heis_hat" not in C.cache:
        M = ModuleAlgebraData(C.H, C.K.algebra, LEFT, hit_left_map(flip_pairing(C.pairing)), False)
        C.cache["heis_hat"] = smash_product(M)
    return C.cache["heis_hat"]


def _inclusions(C: CanonicalElementData):
    H, K, F = C.H, C.K, C.field
    P = Flat(heisenberg_of(C).space, H.space, K.space)
    Q = Flat(heisenberg_hat_of(C).space, K.space, H.space)
    i1 = lift(lambda t: tensor_product(t, K.unit), (H.space,), (P,), F)
    i2 = lift(lambda t: tensor_product(H.unit, t), (K.space,), (P,), F)
    j1 = lift(lambda t: tensor_product(t, H.unit), (K.space,), (Q,), F)
    j2 = lift(lambda t: tensor_product(K.unit, t), (H.space,), (Q,), F)
    return i1, i2, j1, j2


def heisenberg_bc_maps(c: CoactionYd) -> tuple[Algebra, LinearMap, LinearMap]:
    """(B, a, b) with c braided commutative iff a(x)b(y) = b(y)a(x) in B for all x, y."""
    C, Xa = c.C, c.carrier
    X, F = Xa.space, C.field
    H, K = C.H, C.K
    al, be = c.alpha, c.beta
    i1, i2, j1, j2 = _inclusions(C)
    HH = heisenberg_of(C)
    v = c.variant
    if v == "lr":
        B = HH @ Xa
        a = (at(al, 0), at(i1, 0))
        b = (at(be, 0), perm(1, 0), at(i2, 0))
    elif v == "rr":
        B = Xa @ HH
        a = (at(al, 0), at(H.antipode, 1), at(i1, 1))
        b = (at(be, 0), at(i2, 1))
    elif v == "rl":
        B = Xa @ heisenberg_hat_of(C)
        a = (at(al, 0), at(j2, 1))
        b = (at(be, 0), perm(1, 0), at(j1, 1))
    else:
        B = HH @ Xa.opposite()
        a = (at(al, 0), at(i1, 0))
        b = (at(be, 0), at(K.antipode, 0), at(i2, 0))
    amap = as_map((X,), B.legs, lambda t: pipe(t, *a), F)
    bmap = as_map((X,), B.legs, lambda t: pipe(t, *b), F)
    return B, amap, bmap


_HBC_ANCHORS = {
    "lr": "m(ι1⊗ι2)(α(x)⊗Σβ(y)) = m(ι2⊗ι1)(Σβ(y)⊗α(x))",
    "rr": "(id⊗ι1S)α(x)·(id⊗ι2)β(y) = (id⊗ι2)β(y)·(id⊗ι1S)α(x)",
    "rl": "(id⊗ι̂2)α(x)·(id⊗ι̂1)Σβ(y) = (id⊗ι̂1)Σβ(y)·(id⊗ι̂2)α(x)",
    "ll": "(ι1⊗id)α(x)·(ι2Ŝ⊗id)β(y) = (ι2Ŝ⊗id)β(y)·(ι1⊗id)α(x) in ℋ(H)⊗X^op",
}


def check_braided_coaction(c: CoactionYd, cross_check: bool = True) -> Report:
    X, F = c.carrier.space, c.C.field
    B, a, b = heisenberg_bc_maps(c)

    def lhs(t):
        (i, j), k = _one_basis(t)
        return multiply(B, a.image((i,)), b.image((j,))).scale(k)

    def rhs(t):
        (i, j), k = _one_basis(t)
        return multiply(B, b.image((j,)), a.image((i,))).scale(k)

    r = Report(f"braided commutativity, only-coaction {c.variant}")
    h = r.add(compare("Heisenberg form", (X, X), F, lhs, rhs, _HBC_ANCHORS[c.variant]))
    if cross_check:
        s_ok = is_braided_standard(to_standard(c))
        r.flag("agrees with the standard τ-form", s_ok == h.passed, f"Heisenberg {h.passed}, standard {s_ok}")
    return r


# ---------------------------------------------------------------------------
# the slice forms p₋ and p₊


def p_minus(C: CanonicalElementData) -> LinearMap:
    """p₋(h⊗ω) = p(S⁻¹h, ω)."""
    return as_map(C.legs, (), lambda t: apply(C.pairing.form, apply_at(C.H.antipode_inv, t, 0)), C.field)


def p_plus(C: CanonicalElementData) -> LinearMap:
    """p₊(h⊗ω) = p(Sh, ω)."""
    return as_map(C.legs, (), lambda t: apply(C.pairing.form, apply_at(C.H.antipode, t, 0)), C.field)


# ---------------------------------------------------------------------------
# the dual opposite instance


def _map_of(X, fn, F) -> LinearMap:
    """Tabulate fn on the basis of X; the codomain is read off the first image."""
    legs = fn(Tensor.basis((X,), (0,), F)).legs
    return as_map((X,), legs, fn, F)


def _is_canonical(C: CanonicalElementData) -> bool:
    return C.K is dual(C.H)


def dual_opposite_yd(c: CoactionYd) -> CoactionYd:
    """The instance on X^op over the flipped pairing (K, H).

    lr: ((Σβ)^co, Σ(α^co))   rr: (β^op, α^op)   rl: (Σ(β^co), (Σα)^co)   ll: (β^op, α^op)
    """
    C = c.C
    H, K, F = C.H, C.K, C.field
    X = c.carrier.space
    al, be = c.alpha, c.beta
    v = c.variant
    if v == "lr":  # Ŝ⁻¹(x1)⊗x0 and x0⊗S(x₋₁)
        a2 = _map_of(X, lambda t: pipe(apply(be, t), at(K.antipode_inv, 1), perm(1, 0)), F)
        b2 = _map_of(X, lambda t: pipe(apply(al, t), at(H.antipode, 0), perm(1, 0)), F)
    elif v == "rl":  # x0⊗Ŝ(x₋₁) and S⁻¹(x1)⊗x0
        a2 = _map_of(X, lambda t: pipe(apply(be, t), at(K.antipode, 0), perm(1, 0)), F)
        b2 = _map_of(X, lambda t: pipe(apply(al, t), at(H.antipode_inv, 1), perm(1, 0)), F)
    else:  # rr and ll keep the coefficients and only change the targets
        a2, b2 = be, al
    C2 = canonical_element(flip_pairing(C.pairing))
    return CoactionYd(v, C2, c.carrier.opposite(), a2, b2)


def _then(f: LinearMap, g: LinearMap, pos: int) -> LinearMap:
    F = f.field
    return as_map(f.domain, f.codomain[:pos] + g.codomain + f.codomain[pos + len(g.domain):], lambda t: apply_at(g, apply(f, t), pos), F)


def dual_opposite_report(c: CoactionYd) -> Report:
    from .doubles import heisenberg_anti_isos

    d = dual_opposite_yd(c)
    r = Report(f"dual opposite of {c.variant} over ({c.C.H.name}, {c.C.K.name})")
    y_in, y_out = check_coaction_yd(c).ok, check_coaction_yd(d).ok
    r.flag("input YD ⇔ output YD", y_in == y_out, f"input {y_in}, output {y_out}")
    r.flag("output is YD", y_out, check_coaction_yd(d).first_failure() and check_coaction_yd(d).first_failure().witness)
    b_in, b_out = check_braided_coaction(c, False).ok, check_braided_coaction(d, False).ok
    r.flag("input braided ⇔ output braided", b_in == b_out, f"input {b_in}, output {b_out}")
    if not _is_canonical(c.C):
        return r
    L1, L2 = heisenberg_anti_isos(c.C.H)
    _, a, b = heisenberg_bc_maps(c)
    _, a2, b2 = heisenberg_bc_maps(d)
    v = c.variant
    if v in ("lr", "ll"):
        r.add(map_check("(ℒ1⊗op)a' = b", _then(a2, L1, 0), b))
        r.add(map_check("(ℒ1⊗op)b' = a", _then(b2, L1, 0), a))
    elif v == "rr":
        r.add(map_check("(op⊗ℒ2)a' = b", _then(a2, L2, 1), b))
        r.add(map_check("(op⊗ℒ2)b' = a", _then(b2, L2, 1), a))
    else:
        r.add(map_check("(op⊗ℒ1)b = a'", _then(b, L1, 1), a2))
        r.add(map_check("(op⊗ℒ1)a = b'", _then(a, L1, 1), b2))
    return r


# ---------------------------------------------------------------------------
# Drinfeld doubles and codoubles

_DOUBLE_KIND = {"ll": "majid", "rr": "majid", "lr": "radford", "rl": "radford"}


def _both_forms(inst) -> tuple[StandardYd, CoactionYd]:
    if isinstance(inst, StandardYd):
        return inst, to_coaction(inst)
    return to_standard(inst), inst


def _double_action_steps(s: StandardYd, form: LinearMap):
    """Steps on (ω, h, x) for left variants, (x, ω, h) for right ones."""
    a, dl = s.action, s.coaction
    v = s.variant
    if v == "ll":  # p((h▷x)₋₁, ω)(h▷x)0
        return (at(a, 1), at(dl, 1), perm(1, 0, 2), at(form, 0))
    if v == "lr":  # (h▷x)0 p((h▷x)1, ω)
        return (at(a, 1), at(dl, 1), perm(1, 2, 0), at(form, 1))
    if v == "rr":  # (x0 p(x1, ω))◁h
        return (at(dl, 0), at(form, 1), at(a, 0))
    return (at(dl, 0), perm(0, 2, 1, 3), at(form, 0), at(a, 0))  # (p(x₋₁, ω)x0)◁h


def double_action(s: StandardYd) -> ModuleAlgebraData:
    """The 𝒟_M (ll, rr) or 𝒟_R (lr, rl) action on X, as a map on the flattened double."""
    from .doubles import drinfeld_double

    H, F = s.hopf, s.hopf.field
    D = drinfeld_double(H, _DOUBLE_KIND[s.variant])
    A, B = D.cache["factors"]
    P = Flat(D.space, A.space, B.space)
    X = s.carrier.space
    steps = _double_action_steps(s, canonical(H).pairing.form)
    if s.action_side == LEFT:
        act = lift(lambda t: pipe(t, *steps), (P, X), (X,), F)
    else:
        act = lift(lambda t: pipe(t, *steps), (X, P), (X,), F)
    return ModuleAlgebraData(D, s.carrier, s.action_side, act)


def codouble_coaction(c: CoactionYd) -> ComoduleAlgebraData:
    """γ: lr (Σα⊗id)β, rl (id⊗β)Σα into 𝒯_M; rr (α⊗id)β, ll (id⊗β)α into 𝒯_R."""
    from .doubles import drinfeld_codouble

    C, F = c.C, c.C.field
    X = c.carrier.space
    al, be = c.alpha, c.beta
    kind = _DOUBLE_KIND[_TO_STANDARD[c.variant]]
    T = drinfeld_codouble(C.H, kind)
    v = c.variant
    if v == "lr":
        fn, side = (lambda t: fuse_legs(pipe(t, at(be, 0), at(al, 0), perm(1, 0, 2)), 1, T.space)), RIGHT
    elif v == "rr":
        fn, side = (lambda t: fuse_legs(pipe(t, at(be, 0), at(al, 0)), 1, T.space)), RIGHT
    elif v == "rl":
        fn, side = (lambda t: fuse_legs(pipe(t, at(al, 0), perm(1, 0), at(be, 1)), 0, T.space)), LEFT
    else:
        fn, side = (lambda t: fuse_legs(pipe(t, at(al, 0), at(be, 1)), 0, T.space)), LEFT
    cod = (X, T.space) if side == RIGHT else (T.space, X)
    return ComoduleAlgebraData(T, c.carrier, side, as_map((X,), cod, fn, F))


def double_pairing(H: HopfAlgebraData, kind: str) -> PairingData:
    """𝒟×𝒯 through the flat dual bases: the identity matrix."""
    from .doubles import drinfeld_codouble, drinfeld_double

    D, T = drinfeld_double(H, kind), drinfeld_codouble(H, kind)
    key = f"double_pairing:{kind}"
    if key not in H.cache:
        form = LinearMap((D.space, T.space), (), {(i, i): {(): H.field.one} for i in range(D.dim)}, H.field)
        H.cache[key] = PairingData(D, T, form)
    return H.cache[key]


def double_equivalence(inst) -> Report:
    """Module algebra over the double, comodule algebra over the codouble, and the round trips."""
    s, c = _both_forms(inst)
    H, F = s.hopf, s.hopf.field
    X = s.carrier.space
    kind = _DOUBLE_KIND[s.variant]
    M = double_action(s)
    D = M.hopf
    A, B = D.cache["factors"]
    r = Report(f"{s.variant} instance and 𝒟_{kind[0].upper()}({H.name})")
    r.extend(verify_module_algebra(M), "𝒟-action")
    act = M.action

    # (1⋈h)·x = h▷x
    if s.action_side == LEFT:
        hx = lambda t: apply(act, fuse_legs(tensor_product(A.unit, t), 0, D.space))
    else:
        hx = lambda t: apply(act, fuse_legs(reorder(tensor_product(A.unit, t), (1, 0, 2)), 1, D.space))
    r.add(compare("(1⋈h)·x = h▷x", s.action.domain, F, hx, lambda t: apply(s.action, t)))

    # the coaction from the U-slices θ_i⋈1
    U = canonical(H).U
    Hu = H.unit
    v = s.variant
    if v == "ll":  # Σ h_i ⊗ (θ_i⋈1)·x
        rec = lambda t: pipe(reorder(tensor_product(tensor_product(U, t), Hu), (0, 1, 3, 2)), _fuse(1, D), at(act, 1))
    elif v == "lr":  # Σ (θ_i⋈1)·x ⊗ h_i
        rec = lambda t: pipe(reorder(tensor_product(tensor_product(U, t), Hu), (0, 1, 3, 2)), _fuse(1, D), at(act, 1), perm(1, 0))
    elif v == "rr":  # Σ x·(θ_i⋈1) ⊗ h_i
        rec = lambda t: pipe(reorder(tensor_product(tensor_product(U, t), Hu), (2, 1, 3, 0)), _fuse(1, D), at(act, 0))
    else:  # Σ h_i ⊗ x·(θ_i⋈1)
        rec = lambda t: pipe(reorder(tensor_product(tensor_product(U, t), Hu), (0, 2, 1, 3)), _fuse(2, D), at(act, 1))
    r.add(compare("coaction from the slices θ_i⋈1", (X,), F, rec, lambda t: apply(s.coaction, t)))

    # the codouble side
    G = codouble_coaction(c)
    T = G.hopf
    r.extend(verify_comodule_algebra(G), "𝒯-coaction")
    ta, tb = T.cache["factors"]
    eps_a, eps_b = ta.counit, tb.counit
    if G.side == RIGHT:
        split = lambda t: split_leg(apply(G.coaction, t), 1, ta.space, tb.space)
        get_a = lambda t: apply_at(eps_b, split(t), 2)
        get_b = lambda t: apply_at(eps_a, split(t), 1)
        want_a = (lambda t: pipe(apply(c.alpha, t), perm(1, 0))) if c.variant == "lr" else (lambda t: apply(c.alpha, t))
    else:
        split = lambda t: split_leg(apply(G.coaction, t), 0, ta.space, tb.space)
        get_a = lambda t: apply_at(eps_b, split(t), 1)
        get_b = lambda t: apply_at(eps_a, split(t), 0)
        want_a = (lambda t: pipe(apply(c.alpha, t), perm(1, 0))) if c.variant == "rl" else (lambda t: apply(c.alpha, t))
    r.add(compare("α recovered from γ", (X,), F, get_a, want_a))
    r.add(compare("β recovered from γ", (X,), F, get_b, lambda t: apply(c.beta, t)))

    # the square: slicing γ through 𝒟×𝒯 gives the 𝒟-action back
    induced = action_from_coaction(G, double_pairing(H, kind)).action
    r.add(map_check("action induced by γ = 𝒟-action", induced, act))
    return r


def _fuse(pos: int, D: HopfAlgebraData):
    return lambda t: fuse_legs(t, pos, D.space)


# ---------------------------------------------------------------------------
# λ_U and ρ_U


def radford_action_map(s: StandardYd) -> LinearMap:
    """The 𝒟_R action on unflattened legs; ll and rr pass through ♮⁻¹ (Ŝ⁻¹ on ω)."""
    H, F = s.hopf, s.hopf.field
    Hd = dual(H)
    X = s.carrier.space
    steps = _double_action_steps(s, canonical(H).pairing.form)
    v = s.variant
    if v == "ll":
        steps = (at(Hd.antipode_inv, 0),) + steps
    elif v == "rr":
        steps = (at(Hd.antipode_inv, 1),) + steps
    dom = (Hd.space, H.space, X) if s.action_side == LEFT else (X, Hd.space, H.space)
    return as_map(dom, (X,), lambda t: pipe(t, *steps), F)


def lambda_map(s: StandardYd, P: Tensor) -> LinearMap:
    """λ_P(x⊗y) = (P1·x)⊗(P2·y) (left) or ρ_P(x⊗y) = (x·P1)⊗(y·P2) (right), P ∈ H⊗Ĥ."""
    H, F = s.hopf, s.hopf.field
    Hd = dual(H)
    X = s.carrier.space
    act = radford_action_map(s)
    one_d, one_h = Hd.unit, H.unit
    if s.action_side == LEFT:
        def fn(t):
            u = reorder(tensor_product(P, t), (0, 2, 1, 3))  # h x θ y
            u = tensor_product(tensor_product(one_d, u), one_h)  # 1 h x θ y 1
            u = reorder(u, (0, 1, 2, 3, 5, 4))  # 1 h x θ 1 y
            return pipe(u, at(act, 0), at(act, 1))
    else:
        def fn(t):
            u = reorder(tensor_product(P, t), (2, 0, 3, 1))  # x h y θ
            u = tensor_product(tensor_product(one_d, u), one_h)  # 1 x h y θ 1
            u = reorder(u, (1, 0, 2, 3, 4, 5))  # x 1 h y θ 1
            return pipe(u, at(act, 0), at(act, 1))
    return as_map((X, X), (X, X), fn, F)


def lambda_braided_check(s: StandardYd) -> Report:
    F = s.hopf.field
    X = s.carrier.space
    m = s.carrier.mult
    C = canonical(s.hopf)
    LU, LUi = lambda_map(s, C.U), lambda_map(s, C.U_inv)
    sw = LinearMap.from_function((X, X), (X, X), lambda i: {(i[1], i[0]): F.one}, F)
    name = "λ" if s.action_side == LEFT else "ρ"
    r = Report(f"{name}_U braided commutativity, {s.variant}")
    ident = LinearMap.identity((X, X), F)
    r.add(map_check(f"{name}_U{name}_(U⁻¹) = id", LU.compose(LUi), ident))
    r.add(map_check(f"{name}_(U⁻¹){name}_U = id", LUi.compose(LU), ident))
    if s.action_side == LEFT:
        f1 = r.add(map_check("m = mΣλ_U", m.compose(sw).compose(LU), m))
        f2 = r.add(map_check("m = mλ_(U⁻¹)Σ", m.compose(LUi).compose(sw), m))
    else:
        f1 = r.add(map_check("m = mΣρ_(U⁻¹)", m.compose(sw).compose(LUi), m))
        f2 = r.add(map_check("m = mρ_UΣ", m.compose(LU).compose(sw), m))
    std = is_braided_standard(s)
    r.flag("both forms agree with the τ-form", f1.passed == f2.passed == std, f"{f1.passed}, {f2.passed}, τ-form {std}")
    return r


# ---------------------------------------------------------------------------
# algebra objects in the left-left category


def _t_comodule_checks(r: Report, name: str, gamma: LinearMap, T: HopfAlgebraData, legs, F):
    """Left 𝒯-comodule axioms for γ: legs → T⊗legs."""
    r.add(
        compare(
            f"{name}: (Δ⊗id)γ = (id⊗γ)γ", legs, F,
            lambda t: apply_at(T.comult, apply(gamma, t), 0),
            lambda t: apply_at(gamma, apply(gamma, t), 1),
        )
    )
    r.add(compare(f"{name}: (ε⊗id)γ = id", legs, F, lambda t: apply_at(T.counit, apply(gamma, t), 0), lambda t: t))


def algebra_object_check(c: CoactionYd) -> Report:
    """X as an algebra object in ll(H, K): m_X and 1 are morphisms for α⊠α, β⊠β."""
    from .doubles import drinfeld_codouble

    if c.variant != "ll":
        raise ValueError("algebra objects are checked in the left-left category only")
    C, F = c.C, c.C.field
    H, K = C.H, C.K
    Xa = c.carrier
    X, m = Xa.space, Xa.mult
    al, be = c.alpha, c.beta
    T = drinfeld_codouble(H, "radford")
    r = Report(f"algebra object in ll({H.name}, {K.name})")
    gamma = as_map((X,), (T.space, X), lambda t: fuse_legs(pipe(t, at(al, 0), at(be, 1)), 0, T.space), F)
    _t_comodule_checks(r, "X", gamma, T, (X,), F)

    aa = as_map((X, X), (H.space, X, X), lambda t: pipe(t, at(al, 0), at(al, 2), perm(2, 0, 1, 3), at(H.mult, 0)), F)
    bb = as_map((X, X), (K.space, X, X), lambda t: pipe(t, at(be, 0), at(be, 2), perm(0, 2, 1, 3), at(K.mult, 0)), F)
    gg = as_map((X, X), (T.space, X, X), lambda t: fuse_legs(pipe(t, at(aa, 0), at(bb, 1)), 0, T.space), F)
    _t_comodule_checks(r, "X⊠X", gg, T, (X, X), F)
    r.add(compare("α m = (id⊗m)(α⊠α)", (X, X), F, lambda t: apply(al, apply(m, t)), lambda t: apply_at(m, apply(aa, t), 1), "α⊠α(x⊗y) = y₋₁x₋₁⊗x0⊗y0"))
    r.add(compare("β m = (id⊗m)(β⊠β)", (X, X), F, lambda t: apply(be, apply(m, t)), lambda t: apply_at(m, apply(bb, t), 1), "β⊠β(x⊗y) = x₋₁y₋₁⊗x0⊗y0"))
    r.flag("α(1) = 1⊗1", apply(al, Xa.unit).coeffs == tensor_product(H.unit, Xa.unit).coeffs)
    r.flag("β(1) = 1⊗1", apply(be, Xa.unit).coeffs == tensor_product(K.unit, Xa.unit).coeffs)
    yd = check_coaction_yd(c).ok
    r.flag("agrees with the only-coaction YD check", r.ok == yd, f"object {r.ok}, YD {yd}")
    return r


# ---------------------------------------------------------------------------
# equivalence functors
#
# Standard ones: (source, target, twist, action recipe, coaction recipe).  S is
# always the antipode of the source Hopf algebra, so running a functor and then
# its partner on the twisted algebra undoes it exactly.

_STD_FUNCTORS = {
    "F": ("lr", "rl", "op", "flip", "S·swap"),  # (X, ◁̇, δ_S)
    "F'": ("rl", "lr", "op", "flip", "S·swap"),  # (X, ▷̇, _Sδ)
    "G": ("lr", "rl", "co", "flip·S", "swap"),  # (X, ◁_S, Σδ)
    "G'": ("rl", "lr", "co", "flip·S", "swap"),  # (X, ▷_S, Σδ)
    "F2": ("lr", "ll", "", "same", "S·swap"),  # (X, ▷, δ_S)
    "F2'": ("ll", "lr", "", "same", "S⁻¹·swap"),
    "G2": ("lr", "rr", "op", "flip", "same"),  # (X, ◁̇, δ)
    "G2'": ("rr", "lr", "op", "flip", "same"),
    "F3": ("rr", "ll", "op", "flip", "S⁻¹·swap"),  # (X, ▷̇, δ_{S°}), S° = S⁻¹ is the antipode of H^op
    "F3'": ("ll", "rr", "op", "flip", "S⁻¹·swap"),
    "G3": ("rr", "ll", "co", "flip·S⁻¹", "swap"),
    "G3'": ("ll", "rr", "co", "flip·S⁻¹", "swap"),
}

# only-coaction ones: (source, target, kind)
_CO_FUNCTORS = {
    "Fc": ("ll", "rr", "flip"),  # ll(H,K) → rr(K,H): (x0⊗S_K⁻¹(x₋₁) from β, x0⊗S(x₋₁) from α)
    "Fc'": ("rr", "ll", "flip"),  # rr(H,K) → ll(K,H)
    "Fo": ("ll", "rr", "op"),  # ll(H,K) → rr(H^op,K^op) over p₊: (x0⊗S(x₋₁), x0⊗S_K⁻¹(x₋₁))
    "Fo'": ("rr", "ll", "op"),
}

INVERSE_FUNCTOR = {
    "F": "F'", "F'": "F", "G": "G'", "G'": "G",
    "F2": "F2'", "F2'": "F2", "G2": "G2'", "G2'": "G2",
    "F3": "F3'", "F3'": "F3", "G3": "G3'", "G3'": "G3",
    "Fc": "Fc'", "Fc'": "Fc", "Fo": "Fo'", "Fo'": "Fo",
}

FUNCTORS = tuple(INVERSE_FUNCTOR)


def _twisted_hopf(H: HopfAlgebraData, twist: str) -> HopfAlgebraData:
    return {"": H, "op": opposite(H), "co": coopposite(H)}[twist]


def _apply_std_functor(s: StandardYd, which: str) -> StandardYd:
    src, tgt, twist, arecipe, crecipe = _STD_FUNCTORS[which]
    H, F = s.hopf, s.hopf.field
    X = s.carrier.space
    a, dl = s.action, s.coaction
    S, Si = H.antipode, H.antipode_inv
    if arecipe == "same":
        act = a
    else:
        pre = {"flip": (), "flip·S": (at(S, 0),), "flip·S⁻¹": (at(Si, 0),)}[arecipe]
        if s.action_side == LEFT:  # new right action x◁h from h▷x
            act = as_map((X, H.space), (X,), lambda t: pipe(t, perm(1, 0), *pre, at(a, 0)), F)
        else:  # new left action h▷x from x◁h
            pre_r = tuple(at(f, 1) for f in {"flip": (), "flip·S": (S,), "flip·S⁻¹": (Si,)}[arecipe])
            act = as_map((H.space, X), (X,), lambda t: pipe(t, perm(1, 0), *pre_r, at(a, 0)), F)
    hpos = 0 if s.coaction_side == LEFT else 1
    if crecipe == "same":
        co = dl
    else:
        pre = {"swap": (), "S·swap": (at(S, hpos),), "S⁻¹·swap": (at(Si, hpos),)}[crecipe]
        co = _map_of(X, lambda t: pipe(apply(dl, t), *pre, perm(1, 0)), F)
    return StandardYd(tgt, _twisted_hopf(H, twist), s.carrier, act, co)


def _apply_co_functor(c: CoactionYd, which: str) -> CoactionYd:
    src, tgt, kind = _CO_FUNCTORS[which]
    C, F = c.C, c.C.field
    H, K = C.H, C.K
    X = c.carrier.space
    al, be = c.alpha, c.beta
    if kind == "flip":
        if src == "ll":
            a2 = _map_of(X, lambda t: pipe(apply(be, t), at(K.antipode_inv, 0), perm(1, 0)), F)
            b2 = _map_of(X, lambda t: pipe(apply(al, t), at(H.antipode, 0), perm(1, 0)), F)
        else:
            a2 = _map_of(X, lambda t: pipe(apply(be, t), at(K.antipode_inv, 1), perm(1, 0)), F)
            b2 = _map_of(X, lambda t: pipe(apply(al, t), at(H.antipode, 1), perm(1, 0)), F)
        C2 = canonical_element(flip_pairing(C.pairing))
        return CoactionYd(tgt, C2, c.carrier, a2, b2)
    pos = 0 if src == "ll" else 1
    a2 = _map_of(X, lambda t: pipe(apply(al, t), at(H.antipode, pos), perm(1, 0)), F)
    b2 = _map_of(X, lambda t: pipe(apply(be, t), at(K.antipode_inv, pos), perm(1, 0)), F)
    C2 = canonical_element(PairingData(opposite(H), opposite(K), p_plus(C)))
    return CoactionYd(tgt, C2, c.carrier, a2, b2)


def category_functor(inst, which: str):
    """Apply one of FUNCTORS; the source variant must match."""
    if which in _STD_FUNCTORS:
        if not isinstance(inst, StandardYd):
            raise TypeError(f"{which} acts on standard instances")
        src = _STD_FUNCTORS[which][0]
        if inst.variant != src:
            raise ValueError(f"{which} expects a {src} instance, got {inst.variant}")
        return _apply_std_functor(inst, which)
    if which in _CO_FUNCTORS:
        if not isinstance(inst, CoactionYd):
            raise TypeError(f"{which} acts on only-coaction instances")
        src = _CO_FUNCTORS[which][0]
        if inst.variant != src:
            raise ValueError(f"{which} expects a {src} instance, got {inst.variant}")
        return _apply_co_functor(inst, which)
    raise UnknownFunctor(which)


def functor_source(which: str) -> tuple[str, str]:
    """(characterization, variant) a functor accepts."""
    if which in _STD_FUNCTORS:
        return "standard", _STD_FUNCTORS[which][0]
    if which in _CO_FUNCTORS:
        return "coaction", _CO_FUNCTORS[which][0]
    raise UnknownFunctor(which)


def _yd_ok(inst) -> bool:
    return check_standard_yd(inst).ok if isinstance(inst, StandardYd) else check_coaction_yd(inst).ok


def _bc_ok(inst) -> bool:
    if isinstance(inst, StandardYd):
        return is_braided_standard(inst)
    return check_braided_coaction(inst, False).ok


def functor_report(inst, which: str) -> Report:
    out = category_functor(inst, which)
    back = category_functor(out, INVERSE_FUNCTOR[which])
    r = Report(f"functor {which}: {inst.variant} → {out.variant}")
    y_in, y_out = _yd_ok(inst), _yd_ok(out)
    r.flag("output is YD", y_out == y_in, f"input {y_in}, output {y_out}")
    r.flag(f"{INVERSE_FUNCTOR[which]}∘{which} = Id", back.same_as(inst))
    b_in, b_out = _bc_ok(inst), _bc_ok(out)
    r.flag("braided commutativity preserved", b_in == b_out, f"input {b_in}, output {b_out}")
    return r


def equivalence_square(c: CoactionYd) -> Report:
    """The four-corner diagram around an rl(H, K) instance (X, α, β).

    coaction corners: rl(H,K) (α, β); lr(K,H) (β, α); ll(H,K) ((S⁻¹⊗id)Σα, β); rr(K,H) ((id⊗S_K⁻¹)Σβ, α)
    standard corners: rr(H) (◁_β, α); ll(K) (▷_α, β); rl(H) (◁_β, (S⁻¹⊗id)Σα); lr(K) (▷_α, (id⊗S_K⁻¹)Σβ)
    """
    if c.variant != "rl":
        raise ValueError("the square is built around an rl instance")
    C, F = c.C, c.C.field
    H, K = C.H, C.K
    X = c.carrier.space
    al, be = c.alpha, c.beta
    Cf = canonical_element(flip_pairing(C.pairing))
    a_ll = _map_of(X, lambda t: pipe(apply(al, t), at(H.antipode_inv, 1), perm(1, 0)), F)
    a_rr = _map_of(X, lambda t: pipe(apply(be, t), at(K.antipode_inv, 0), perm(1, 0)), F)
    corners = {
        "rl(H,K)": c,
        "lr(K,H)": CoactionYd("lr", Cf, c.carrier, be, al),
        "ll(H,K)": CoactionYd("ll", C, c.carrier, a_ll, be),
        "rr(K,H)": CoactionYd("rr", Cf, c.carrier, a_rr, al),
    }
    ra = induced_action(c)  # ◁_β
    la = action_from_coaction(c.alpha_comodule(), C.pairing).action  # ▷_α
    standard = {
        "rl(H,K)": StandardYd("rr", H, c.carrier, ra, al),
        "lr(K,H)": StandardYd("ll", K, c.carrier, la, be),
        "ll(H,K)": StandardYd("rl", H, c.carrier, ra, a_ll),
        "rr(K,H)": StandardYd("lr", K, c.carrier, la, a_rr),
    }
    r = Report(f"four-corner square around rl({H.name}, {K.name})")
    base = check_coaction_yd(c).ok
    for key, inst in corners.items():
        s = standard[key]
        r.flag(f"{key} ↦ {s.variant}({s.hopf.name}) commutes", to_standard(inst).same_as(s))
        y1, y2 = check_coaction_yd(inst).ok, check_standard_yd(s).ok
        r.flag(f"{key} and {s.variant}({s.hopf.name}) agree with the rl verdict", y1 == y2 == base, f"{y1}, {y2}, rl {base}")
    return r


# ---------------------------------------------------------------------------
# everything at once

SUITES = ("yd", "convert", "braided", "double", "appendix-c", "dual", "functors", "algebra-object")


def lambda_verdict(rep: Report) -> bool:
    return all(c.passed for c in rep.checks if c.name.startswith("m = "))


def full_report(inst, suites=SUITES) -> Report:
    """Run the requested suites on an instance in either characterization."""
    s, c = _both_forms(inst)
    r = Report(f"{s.variant} ({s.hopf.name}) / {c.variant} ({c.C.H.name}, {c.C.K.name}) on {s.carrier.space.name}")
    suites = set(suites)
    if "yd" in suites:
        r.extend(check_standard_yd(s), "standard")
        r.extend(check_coaction_yd(c), "coaction")
    if "convert" in suites:
        r.extend(conversion_report(c), "conversion")
    if "braided" in suites:
        bs, bh = check_braided_standard(s), check_braided_coaction(c)
        r.extend(bs, "braided τ/ρ")
        r.extend(bh, "braided Heisenberg")
        verdicts = [bs.get("m∘τ = m").passed, bh.get("Heisenberg form").passed]
        if "appendix-c" in suites:
            bl = lambda_braided_check(s)
            r.extend(bl, "braided λ/ρ_U")
            verdicts.append(lambda_verdict(bl))
        r.flag("braided formulations agree", len(set(verdicts)) == 1, f"verdicts {verdicts}")
    elif "appendix-c" in suites:
        r.extend(lambda_braided_check(s), "braided λ/ρ_U")
    if "double" in suites:
        r.extend(double_equivalence(s), "double")
    if "dual" in suites:
        r.extend(dual_opposite_report(c), "dual opposite")
    if "functors" in suites:
        for name in FUNCTORS:
            kind, src = functor_source(name)
            src_inst = s if kind == "standard" else c
            if src_inst.variant == src:
                r.extend(functor_report(src_inst, name), f"functor {name}")
        if c.variant == "rl":
            r.extend(equivalence_square(c), "square")
    if "algebra-object" in suites and c.variant == "ll":
        r.extend(algebra_object_check(c), "algebra object")
    return r
