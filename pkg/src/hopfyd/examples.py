"""Catalog of concrete Hopf algebras and Yetter–Drinfeld instances."""

from __future__ import annotations

from dataclasses import dataclass

from .actions import (
    LEFT,
    RIGHT,
    ComoduleAlgebraData,
    adjoint_action,
    coaction_from_invertible,
    regular_action,
    verify_comodule_algebra,
)
from .doubles import (
    Flat,
    double_canonical_element,
    drinfeld_codouble,
    drinfeld_double,
    heisenberg_double,
    heisenberg_inclusions,
    lift,
)
from .groups import GroupPresentation, InvalidGroupTable, builtin_group, cyclic
from .hopf import HopfAlgebraData, HopfMorphism, dual, opposite
from .linalg import (
    NO_SOLUTION,
    QQ,
    Algebra,
    Field,
    LinearMap,
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
    linear_solve,
    multiply,
    perm,
    pipe,
    rank,
    reorder,
    split_leg,
    tensor_product,
)
from .pairing import canonical, canonical_element, circ_u
from .reports import Report


class BadCharacteristic(ValueError):
    pass


class HypothesisNotMet(ValueError):
    pass


def group_algebra(G: GroupPresentation, field: Field = QQ) -> HopfAlgebraData:
    """kG: group-likes, ε ≡ 1, S(g) = g⁻¹."""
    n = G.order
    return HopfAlgebraData.from_tables(
        f"k{G.name}",
        G.labels,
        field,
        mult={(a, b): {G.mul(a, b): 1} for a in range(n) for b in range(n)},
        unit={G.identity: 1},
        comult={a: {(a, a): 1} for a in range(n)},
        counit={a: 1 for a in range(n)},
        antipode={a: {G.inverse[a]: 1} for a in range(n)},
    )


def function_algebra(G: GroupPresentation, field: Field = QQ) -> HopfAlgebraData:
    """k^G, taken literally as the dual of kG."""
    return dual(group_algebra(G, field))


def sweedler_h4(field: Field = QQ) -> HopfAlgebraData:
    """Basis 1, g, x, gx with g² = 1, x² = 0, xg = −gx, Δx = x⊗1 + g⊗x."""
    if field.characteristic == 2:
        raise BadCharacteristic("Sweedler's algebra needs characteristic ≠ 2")
    basis = [(0, 0), (1, 0), (0, 1), (1, 1)]  # g^a x^b
    idx = {b: i for i, b in enumerate(basis)}
    mult = {}
    for i, (a1, b1) in enumerate(basis):
        for j, (a2, b2) in enumerate(basis):
            if b1 + b2 < 2:
                mult[(i, j)] = {idx[((a1 + a2) % 2, b1 + b2)]: (-1) ** (b1 * a2)}
    comult = {
        0: {(0, 0): 1},
        1: {(1, 1): 1},
        2: {(2, 0): 1, (1, 2): 1},
        3: {(3, 1): 1, (0, 3): 1},
    }
    return HopfAlgebraData.from_tables(
        "H4",
        ["1", "g", "x", "gx"],
        field,
        mult=mult,
        unit={0: 1},
        comult=comult,
        counit={0: 1, 1: 1},
        antipode={0: {0: 1}, 1: {1: 1}, 2: {3: -1}, 3: {2: 1}},
    )


def hopf_fixture(name: str, field: Field = QQ) -> HopfAlgebraData:
    """``group:C2``, ``fn:S3``, ``sweedler4`` and friends."""
    if name == "sweedler4":
        return sweedler_h4(field)
    kind, _, arg = name.partition(":")
    if kind == "group":
        return group_algebra(builtin_group(arg), field)
    if kind == "fn":
        return function_algebra(builtin_group(arg), field)
    raise KeyError(f"unknown Hopf fixture {name!r}")


HOPF_FIXTURES = ["group:C2", "group:C3", "group:C4", "group:V4", "group:S3", "fn:S3", "sweedler4"]


# ---------------------------------------------------------------------------
# Yetter–Drinfeld instances


def unit_hopf(field: Field = QQ) -> HopfAlgebraData:
    """The one-dimensional Hopf algebra 𝕜."""
    A = group_algebra(cyclic(1), field)
    return A.with_space(A.space.renamed("k", lambda s: s), "k")


def trivial_yd(X: Algebra, H: HopfAlgebraData, variant: str = "ll", characterization: str = "standard",
               coaction: LinearMap | None = None, action: LinearMap | None = None):
    """ε-action with 1-coaction; or a given coaction (needs H commutative) or action (needs H cocommutative)."""
    from .yd import StandardYd, to_coaction

    if coaction is not None and action is not None:
        raise ValueError("give a coaction or an action, not both")
    F = H.field
    V, S = H.space, X.space
    left_action = variant in ("ll", "lr")
    T = opposite(H).space if variant in ("lr", "rl") else V
    if action is None:
        if left_action:
            action = as_map((V, S), (S,), lambda t: apply_at(H.counit, t, 0), F)
        else:
            action = as_map((S, V), (S,), lambda t: apply_at(H.counit, t, 1), F)
    elif not H.is_cocommutative():
        raise HypothesisNotMet(f"{H.name} is not cocommutative, so an arbitrary action needs a nontrivial coaction")
    if coaction is None:
        if variant in ("ll", "rl"):
            coaction = as_map((S,), (T, S), lambda t: tensor_product(H.unit, t).with_legs((T, S)), F)
        else:
            coaction = as_map((S,), (S, T), lambda t: tensor_product(t, H.unit).with_legs((S, T)), F)
    elif not H.is_commutative():
        raise HypothesisNotMet(f"{H.name} is not commutative, so an arbitrary coaction needs a nontrivial action")
    else:  # for lr and rl the coaction lands in H^op (equal to H here)
        coaction = coaction.with_spaces(None, (T, S) if variant in ("ll", "rl") else (S, T))
    s = StandardYd(variant, H, X, action, coaction)
    if characterization == "standard":
        return s
    if characterization == "coaction":
        return to_coaction(s)
    raise ValueError("characterization must be 'standard' or 'coaction'")


def _swap_coaction(f: LinearMap, pos: int, g: LinearMap) -> LinearMap:
    """Apply g at leg pos of every image, then swap the two legs."""
    F = f.field
    return as_map(f.domain, tuple(reversed(f.codomain)), lambda t: pipe(apply(f, t), at(g, pos), perm(1, 0)), F)


def adjoint_yd(H: HopfAlgebraData, variant: str):
    """The four pairs (standard, only-coaction) built from ▶_ad, ◀_ad, Δ and Ad^Ĥ.

    ll: (▶_ad, Δ) with lr (Δ, Ad_r)       lr: (▶_ad, h2⊗S⁻¹h1) with rr
    rr: (◀_ad, Δ) with rl (Δ, Ad_l)       rl: (◀_ad, S⁻¹h2⊗h1) with ll
    """
    from .yd import CoactionYd, StandardYd

    C = canonical(H)
    Hd, F = C.K, H.field
    V = H.space
    d, Si = H.comult, H.antipode_inv
    if variant in ("ll", "lr"):
        act = adjoint_action(H, LEFT).action
        beta = ad_r(H).coaction
    else:
        act = adjoint_action(H, RIGHT).action
        beta = ad_l(H).coaction
    if variant == "ll":
        delta = d
    elif variant == "rr":
        delta = d
    elif variant == "lr":  # Δ_{S°}: h ↦ h2 ⊗ S⁻¹(h1)
        delta = _swap_coaction(d, 0, Si)
    else:  # _{S°}Δ: h ↦ S⁻¹(h2) ⊗ h1
        delta = _swap_coaction(d, 1, Si)
    s = StandardYd(variant, H, H.algebra, act, delta)
    c = CoactionYd({"ll": "lr", "lr": "rr", "rr": "rl", "rl": "ll"}[variant], C, H.algebra, delta, beta)
    return s, c


def ad_r(H: HopfAlgebraData) -> ComoduleAlgebraData:
    """Ad^Ĥ_r(h) = U(h⊗1)U⁻¹, a right Ĥ-coaction on H."""
    if "ad_r" not in H.cache:
        C = canonical(H)
        H.cache["ad_r"] = coaction_from_invertible(C.U, C.K, H.algebra, RIGHT)
    return H.cache["ad_r"]


def ad_l(H: HopfAlgebraData) -> ComoduleAlgebraData:
    """Ad^Ĥ_l(h) = Σ(U⁻¹)(1⊗h)Σ(U), a left Ĥ-coaction on H."""
    if "ad_l" not in H.cache:
        C = canonical(H)
        H.cache["ad_l"] = coaction_from_invertible(reorder(C.U_inv, (1, 0)), C.K, H.algebra, LEFT)
    return H.cache["ad_l"]


# ---------------------------------------------------------------------------
# coideal subalgebras of a surjection π: H → H'


class NotContained(ValueError):
    """A vector that should lie in a subspace does not."""


@dataclass(eq=False)
class Subalgebra:
    """A subalgebra given by basis vectors inside an ambient algebra."""

    ambient: Algebra
    vectors: list
    space: Space
    inclusion: LinearMap
    algebra: Algebra | None = None

    def restrict(self, t: Tensor, pos: int) -> Tensor:
        """Rewrite leg ``pos`` of t in the sub-basis; NotContained if it does not fit."""
        V = self.ambient.space
        groups: dict = {}
        for idx, c in t.coeffs.items():
            groups.setdefault(idx[:pos] + idx[pos + 1 :], {})[(idx[pos],)] = c
        out = {}
        for rest, vec in groups.items():
            z = linear_solve(self.inclusion, Tensor((V,), vec, t.field))
            if z is NO_SOLUTION:
                label = "⊗".join(t.legs[k].labels[i] for k, i in enumerate(rest[:pos])) or "·"
                raise NotContained(f"{Tensor((V,), vec, t.field).pretty()} (beside {label}) leaves {self.space.name}")
            for (j,), c in z.coeffs.items():
                out[rest[:pos] + (j,) + rest[pos:]] = c
        legs = t.legs[:pos] + (self.space,) + t.legs[pos + 1 :]
        return Tensor(legs, out, t.field)


def subalgebra(A: Algebra, vectors: list, name: str) -> Subalgebra:
    """The span of ``vectors``, checked closed under the product and containing 1."""
    F = A.field
    labels = []
    for v in vectors:
        lab = v.pretty()
        labels.append(lab if lab not in labels else f"{lab}#{len(labels)}")
    I = Space(name, len(vectors), tuple(labels))
    incl = LinearMap((I,), (A.space,), {(i,): v.coeffs for i, v in enumerate(vectors)}, F)
    sub = Subalgebra(A, list(vectors), I, incl)
    ii = incl.kron(incl)
    mult = as_map((I, I), (I,), lambda t: sub.restrict(apply(A.mult, apply(ii, t)), 0), F)
    sub.algebra = Algebra.single(mult, sub.restrict(A.unit, 0))
    return sub


def _fixed_points(f: LinearMap, g: LinearMap, name: str, A: Algebra) -> Subalgebra:
    """{h : f(h) = g(h)} as a subalgebra of A."""
    F = A.field
    diff = as_map(f.domain, f.codomain, lambda t: apply(f, t) - apply(g, t), F)
    return subalgebra(A, kernel_basis(diff), name)


def coideal_subalgebras(pi: HopfMorphism) -> tuple[Subalgebra, Subalgebra]:
    """(I_r(π), I_l(π)): fixed points of (id⊗π)Δ and (π⊗id)Δ."""
    H, K = pi.source, pi.target
    if rank([apply(pi.map, H.e(i)) for i in range(H.dim)], H.field) != K.dim:
        raise ValueError(f"{H.name} → {K.name} is not surjective")
    if "coideals" not in pi.__dict__:
        F = H.field
        V, W = H.space, K.space
        d, f = H.comult, pi.map
        lam_r = as_map((V,), (V, W), lambda t: apply_at(f, apply(d, t), 1), F)
        lam_l = as_map((V,), (W, V), lambda t: apply_at(f, apply(d, t), 0), F)
        one_r = as_map((V,), (V, W), lambda t: tensor_product(t, K.unit), F)
        one_l = as_map((V,), (W, V), lambda t: tensor_product(K.unit, t), F)
        pi.coideals = (
            _fixed_points(lam_r, one_r, f"I_r({K.name})", H.algebra),
            _fixed_points(lam_l, one_l, f"I_l({K.name})", H.algebra),
        )
    return pi.coideals


def coideal_yd(pi: HopfMorphism):
    """(I_r, Δ|, Ad^Ĥ_r|) as lr and (I_l, Δ|, Ad^Ĥ_l|) as rl only-coaction instances.

    Restriction raises NotContained when Δ or Ad^Ĥ leaves the coideal.
    """
    from .yd import CoactionYd

    H = pi.source
    F, C = H.field, canonical(H)
    I_r, I_l = coideal_subalgebras(pi)

    def restricted(I: Subalgebra, f: LinearMap, pos: int) -> LinearMap:
        cod = f.codomain[:pos] + (I.space,) + f.codomain[pos + 1 :]
        return as_map((I.space,), cod, lambda t: I.restrict(apply(f, apply(I.inclusion, t)), pos), F)

    right = CoactionYd("lr", C, I_r.algebra, restricted(I_r, H.comult, 1), restricted(I_r, ad_r(H).coaction, 0))
    left = CoactionYd("rl", C, I_l.algebra, restricted(I_l, H.comult, 0), restricted(I_l, ad_l(H).coaction, 1))
    return right, left


def counit_morphism(H: HopfAlgebraData) -> HopfMorphism:
    k = unit_hopf(H.field)
    table = {i: {(0,): c for c in img.values()} for i, img in H.counit.table.items()}
    return HopfMorphism(H, k, LinearMap((H.space,), (k.space,), table, H.field))


def sign_morphism(field: Field = QQ) -> HopfMorphism:
    """kS3 → kC2 sending transpositions to g."""
    S3, C2 = group_algebra(builtin_group("S3"), field), group_algebra(cyclic(2), field)
    odd = {l: int(len(l) == 4) for l in S3.labels}  # "(12)" vs "e", "(123)"
    table = {(i,): {(odd[l],): 1} for i, l in enumerate(S3.labels)}
    return HopfMorphism(S3, C2, LinearMap((S3.space,), (C2.space,), table, field))


def morphism_fixture(H: HopfAlgebraData, name: str) -> HopfMorphism:
    """``eps``, ``id`` or ``sign`` (the last only on kS3)."""
    if name == "eps":
        return counit_morphism(H)
    if name == "id":
        return HopfMorphism(H, H, H.identity())
    if name == "sign":
        if H.name != "kS3":
            raise HypothesisNotMet("the sign map is defined on kS3")
        return sign_morphism(H.field)
    raise KeyError(f"unknown morphism {name!r}; choose eps, id or sign")


def coideal_report(pi: HopfMorphism) -> Report:
    from .yd import check_braided_coaction, check_coaction_yd

    H, K = pi.source, pi.target
    r = Report(f"coideals of {H.name} → {K.name}")
    I_r, I_l = coideal_subalgebras(pi)
    r.flag("dim I_r = dim I_l", I_r.space.dim == I_l.space.dim, f"{I_r.space.dim} vs {I_l.space.dim}")
    inclusions = [
        ("Δ(I_r) ⊆ H⊗I_r", I_r, H.comult, 1),
        ("Ad_r(I_r) ⊆ I_r⊗Ĥ", I_r, ad_r(H).coaction, 0),
        ("Δ(I_l) ⊆ I_l⊗H", I_l, H.comult, 0),
        ("Ad_l(I_l) ⊆ Ĥ⊗I_l", I_l, ad_l(H).coaction, 1),
    ]
    for name, I, f, pos in inclusions:
        try:
            for v in I.vectors:
                I.restrict(apply(f, v), pos)
            r.flag(name, True)
        except NotContained as exc:
            r.flag(name, False, str(exc))
    if not r.ok:
        return r
    right, left = coideal_yd(pi)
    for tag, c in (("I_r lr", right), ("I_l rl", left)):
        r.extend(check_coaction_yd(c, structures=True), f"{tag}")
        r.extend(check_braided_coaction(c), f"{tag} bc")
    return r


# ---------------------------------------------------------------------------
# the Heisenberg algebra ℋ(Ĥ) = Ĥ # H over the Drinfeld double 𝒟_R(H)


@dataclass(eq=False)
class HeisenbergOverDouble:
    """All the pieces for X = ℋ(Ĥ), with 𝒟 = Ĥ^co⋈H and 𝒯 = H^op⊗Ĥ."""

    hopf: HopfAlgebraData
    X: Algebra
    D: HopfAlgebraData
    T: HopfAlgebraData
    UU: Tensor  # 𝕌 = (ι̂2⊗id)U in X⊗Ĥ
    VV: Tensor  # 𝕍 = (ι̂1⊗id)Σ(°U) in X⊗H^op
    alpha: ComoduleAlgebraData
    beta: ComoduleAlgebraData
    gamma: LinearMap  # Γ: X → X⊗𝒯
    gamma_prime: LinearMap  # Γ': X → 𝒟⊗X
    gamma_action: LinearMap  # ▷_Γ: 𝒟⊗X → X

    def rr_instance(self):
        from .yd import CoactionYd

        return CoactionYd("rr", canonical(self.hopf), self.X, self.alpha.coaction, self.beta.coaction)

    def lr_instance(self):
        """(X, Γ', Γ) over the pair (𝒟, 𝒯)."""
        from .yd import CoactionYd, double_pairing

        return CoactionYd("lr", canonical_element(double_pairing(self.hopf, "radford")), self.X, self.gamma_prime, self.gamma)

    def ll_instance(self):
        """(X, ▷_Γ, Γ') over 𝒟."""
        from .yd import StandardYd

        return StandardYd("ll", self.D, self.X, self.gamma_action, self.gamma_prime)


def heisenberg_over_double(H: HopfAlgebraData) -> HeisenbergOverDouble:
    if "heis_over_double" in H.cache:
        return H.cache["heis_over_double"]
    from .yd import double_pairing

    F = H.field
    Hd, Hop = dual(H), opposite(H)
    X = heisenberg_double(Hd)
    _, _, j1, j2 = heisenberg_inclusions(H)
    D, T = drinfeld_double(H, "radford"), drinfeld_codouble(H, "radford")
    Q = Flat(X.space, Hd.space, H.space)
    PT = Flat(T.space, Hop.space, Hd.space)
    C = canonical(H)
    UU = apply_at(j2, C.U, 0)
    VV = apply_at(j1, reorder(circ_u(C), (1, 0)), 0).with_legs((X.space, Hop.space))
    alpha = coaction_from_invertible(VV, Hop, X, RIGHT)
    beta = coaction_from_invertible(UU, Hd, X, RIGHT)
    gamma = as_map((X.space,), (X.space, T.space), lambda t: fuse_legs(pipe(t, at(beta.coaction, 0), at(alpha.coaction, 0)), 1, T.space), F)
    A, B = D.cache["factors"]
    PD = Flat(D.space, A.space, B.space)
    # θ#h ↦ θ2⋈h1 ⊗ θ1#h2
    gp = lift(lambda t: pipe(t, at(Hd.comult, 0), at(H.comult, 2), perm(1, 2, 0, 3)), (Q,), (PD, Q), F)
    form = double_pairing(H, "radford").form
    g_act = as_map((D.space, X.space), (X.space,), lambda t: pipe(t, at(gamma, 1), perm(1, 0, 2), at(form, 1)), F)
    out = HeisenbergOverDouble(H, X, D, T, UU, VV, alpha, beta, gamma, gp, g_act)
    H.cache["heis_over_double"] = out
    return out


def heisenberg_over_double_report(H: HopfAlgebraData, braided: bool = True) -> Report:
    from .yd import check_braided_standard, check_coaction_yd, check_standard_yd, codouble_coaction

    F = H.field
    hd = heisenberg_over_double(H)
    X, D, T = hd.X, hd.D, hd.T
    Hd, Hop = dual(H), opposite(H)
    Q = Flat(X.space, Hd.space, H.space)
    A, B = D.cache["factors"]
    PD = Flat(D.space, A.space, B.space)
    C = canonical(H)
    r = Report(f"ℋ({Hd.name}) over 𝒟_R({H.name})")

    # lemma: 𝕍12𝕌13 = θ_i#h_j ⊗ h_i ⊗ θ_j
    legs3 = (X.space, Hop.space, Hd.space)
    B3 = X @ Hop.algebra @ Hd.algebra
    VU = multiply(
        B3,
        embed_legs(hd.VV, (0, 1), legs3, {2: Hd.unit}),
        embed_legs(hd.UU, (0, 2), legs3, {1: Hop.unit}),
    )
    W = reorder(tensor_product(C.U, C.U), (1, 2, 0, 3))
    W = fuse_legs(W.with_legs((Hd.space, H.space, Hop.space, Hd.space)), 0, X.space)
    r.flag("𝕍12𝕌13 = U2#U1 ⊗ U1^op ⊗ U2", VU == W, f"lhs={VU.pretty()} rhs={W.pretty()}")
    Wd = split_leg(double_canonical_element(H), 1, Hop.space, Hd.space).with_legs(legs3)
    r.flag("𝕍12𝕌13 = (L̄2⊗id)(U_𝒟)", VU == Wd)

    r.extend(verify_comodule_algebra(hd.alpha), "α")
    r.extend(verify_comodule_algebra(hd.beta), "β")

    # (alpha): ω▷_α(θ#h) = (ω2#1)(θ#h)(Ŝ⁻¹ω1#1) = ω3θŜ⁻¹(ω2) # (h◀Ŝ⁻¹(ω1))
    p = C.pairing.form
    p_op = p.with_spaces((Hop.space, Hd.space))
    sl_a = as_map((Hd.space, X.space), (X.space,), lambda t: pipe(t, at(hd.alpha.coaction, 1), perm(1, 2, 0), at(p_op, 1)), F)
    j1 = lambda t: fuse_legs(tensor_product(t, H.unit), 0, X.space)
    Si = Hd.antipode_inv
    conj_a = as_map(
        (Hd.space, X.space),
        (X.space,),
        lambda t: pipe(t, at(Hd.comult, 0), at(Si, 0), lambda u: _conj(X, u, j1, j1, (1, 2, 0))),
        F,
    )
    h_hit = regular_action(H, "dual-on-H-right").action  # h◀ω
    closed_a = lift(
        lambda t: pipe(
            t, at(Hd.comult, 0), at(Hd.comult, 1), perm(2, 3, 1, 4, 0), at(Si, 2), at(Hd.mult, 0), at(Hd.mult, 0), at(Si, 2), at(h_hit, 1)
        ),
        (Hd.space, Q),
        (Q,),
        F,
    )
    r.flag("ω▷_α(θ#h) = (ω2#1)(θ#h)(Ŝ⁻¹(ω1)#1)", sl_a == conj_a, anchor="(id⊗p(·,ω))α")
    r.flag("ω▷_α(θ#h) = ω3θŜ⁻¹(ω2) # (h◀Ŝ⁻¹(ω1))", sl_a == closed_a)

    # (beta): g▷_β(θ#h) = (1#g1)(θ#h)(1#S g2) = (g1▶θ) # g2hS(g3)
    sl_b = as_map((H.space, X.space), (X.space,), lambda t: pipe(t, at(hd.beta.coaction, 1), perm(0, 2, 1), at(p, 0)), F)
    j2 = lambda t: fuse_legs(tensor_product(Hd.unit, t), 0, X.space)
    conj_b = as_map(
        (H.space, X.space),
        (X.space,),
        lambda t: pipe(t, at(H.comult, 0), at(H.antipode, 1), lambda u: _conj(X, u, j2, j2, (0, 2, 1))),
        F,
    )
    hit = regular_action(H, "H-on-dual-left").action  # g▶θ
    closed_b = lift(
        lambda t: pipe(
            t, at(H.comult, 0), at(H.comult, 1), perm(0, 3, 1, 4, 2), at(hit, 0), at(H.antipode, 3), at(H.mult, 1), at(H.mult, 1)
        ),
        (H.space, Q),
        (Q,),
        F,
    )
    r.flag("g▷_β(θ#h) = (1#g1)(θ#h)(1#S(g2))", sl_b == conj_b, anchor="(id⊗p(g,·))β")
    r.flag("g▷_β(θ#h) = (g1▶θ) # g2hS(g3)", sl_b == closed_b)

    rr = hd.rr_instance()
    r.extend(check_coaction_yd(rr, structures=False), "rr YD")

    # Γ = (α⊗id)β = Ad(𝕍12𝕌13)(x⊗1) is a 𝒯-coaction
    r.extend(verify_comodule_algebra(ComoduleAlgebraData(T, X, RIGHT, hd.gamma)), "Γ")
    r.flag("Γ = the codouble coaction of the rr instance", hd.gamma == codouble_coaction(rr).coaction)
    XT = X @ T.algebra
    VUf = fuse_legs(VU, 1, T.space)
    VUi = invert_element(XT, VUf)
    ad_g = as_map((X.space,), (X.space, T.space), lambda t: multiply(XT, multiply(XT, VUf, tensor_product(t, T.unit)), VUi), F)
    r.flag("Γ(x) = Ad(𝕍12𝕌13)(x⊗1)", ad_g == hd.gamma)

    # Γ' = (id⊗L̄2)Δ_𝒟 L̄2⁻¹ with L̄2 the identity on Ĥ⊗H
    r.flag("Γ' = (id⊗L̄2)Δ_𝒟L̄2⁻¹", hd.gamma_prime == D.comult.with_spaces((X.space,), (D.space, X.space)))
    r.extend(verify_comodule_algebra(ComoduleAlgebraData(D, X, LEFT, hd.gamma_prime)), "Γ'")

    # corollary: (ω⋈h)▷_Γ(θ#g) = ω▷_α(h▷_β(θ#g)) = ω3(h1▶θ)Ŝ⁻¹(ω2) # (h2gS(h3)◀Ŝ⁻¹(ω1))
    composite = lift(lambda t: pipe(t, at(sl_b, 1), at(sl_a, 0)), (PD, X.space), (X.space,), F)
    r.flag("(ω⋈h)▷_Γx = ω▷_α(h▷_βx)", hd.gamma_action == composite)
    closed_g = lift(lambda t: pipe(t, at(closed_b, 1), at(closed_a, 0)), (PD, X.space), (X.space,), F)
    r.flag("(ω⋈h)▷_Γ(θ#g) = ω3(h1▶θ)Ŝ⁻¹(ω2) # (h2gS(h3)◀Ŝ⁻¹(ω1))", hd.gamma_action == closed_g)
    unit_ok = all(apply(hd.gamma_action, tensor_product(D.unit, X.element((i,)))) == X.element((i,)) for i in range(X.dim))
    r.flag("(ε⋈1)▷_Γx = x", unit_ok)

    r.extend(check_coaction_yd(hd.lr_instance(), structures=False), "(ℋ(Ĥ),Γ',Γ) lr over (𝒟,𝒯)")
    ll = hd.ll_instance()
    r.extend(check_standard_yd(ll, structures=True), "(ℋ(Ĥ),▷_Γ,Γ') ll over 𝒟")
    if braided:
        r.extend(check_braided_standard(ll), "braided")
    return r


def _conj(X: Algebra, u: Tensor, left, right, order) -> Tensor:
    """Σ left(a)·x·right(b) for u = Σ a⊗b⊗x, legs of u taken in ``order`` as (a, x, b)."""
    u = reorder(u, order)
    out = Tensor.zero((X.space,), X.field)
    for (i, k, j), c in u.coeffs.items():
        a = left(Tensor.basis(u.legs[:1], (i,), X.field))
        b = right(Tensor.basis(u.legs[2:], (j,), X.field))
        out = out + c * X.mul(X.mul(a, X.element((k,))), b)
    return out


# ---------------------------------------------------------------------------
# named YD fixtures

VARIANT_NAMES = ("ll", "lr", "rr", "rl")


def yd_fixture(name: str, field: Field = QQ) -> list:
    """Instances behind a fixture name, as (label, instance) pairs.

    adjoint:<hopf>:<variant>   the standard instance and its only-coaction partner
    coideal:<hopf>:<eps|id|sign>   (I_r, lr) and (I_l, rl)
    trivial:<hopf>[:<variant>]   ε-action and 1-coaction on the algebra H itself
    """
    from .yd import to_coaction

    kind, _, rest = name.partition(":")
    if kind == "adjoint":
        hname, _, v = rest.rpartition(":")
        if v not in VARIANT_NAMES:
            raise KeyError(f"variant must be one of {VARIANT_NAMES}, got {v!r}")
        s, c = adjoint_yd(hopf_fixture(hname, field), v)
        return [(f"{name} standard {s.variant}", s), (f"{name} coaction {c.variant}", c)]
    if kind == "coideal":
        hname, _, m = rest.rpartition(":")
        right, left = coideal_yd(morphism_fixture(hopf_fixture(hname, field), m))
        return [(f"{name} I_r lr", right), (f"{name} I_l rl", left)]
    if kind == "trivial":
        parts = rest.split(":")
        v = "ll"
        if parts[-1] in VARIANT_NAMES:
            v = parts.pop()
        H = hopf_fixture(":".join(parts), field)
        s = trivial_yd(H.algebra, H, v)
        c = to_coaction(s)
        return [(f"{name} standard {v}", s), (f"{name} coaction {c.variant}", c)]
    raise KeyError(f"unknown YD fixture {name!r}")


def yd_catalog(hopfs=("sweedler4", "group:S3")) -> list[str]:
    """Fixture names used by the acceptance matrix."""
    names = []
    for h in hopfs:
        names += [f"trivial:{h}:{v}" for v in VARIANT_NAMES]
        names += [f"adjoint:{h}:{v}" for v in VARIANT_NAMES]
        names += [f"coideal:{h}:eps", f"coideal:{h}:id"]
        if h == "group:S3":
            names.append(f"coideal:{h}:sign")
    return names


def fixture_names() -> list[str]:
    out = list(HOPF_FIXTURES)
    out += yd_catalog(HOPF_FIXTURES)
    out += [f"heisdouble:{h}" for h in HOPF_FIXTURES]
    return out
