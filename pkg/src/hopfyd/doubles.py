"""Heisenberg doubles, Drinfeld doubles and codoubles, 2-cocycle twists."""

from __future__ import annotations

from dataclasses import dataclass, replace

from .actions import ModuleAlgebraData, regular_action, smash_product, verify_algebra, LEFT
from .hopf import (
    HopfAlgebraData,
    NotAHopfMorphism,
    coopposite,
    dual,
    is_hopf_morphism,
    morphism_report,
    opposite,
)
from .linalg import (
    Algebra,
    LinearMap,
    NotInvertible,
    NO_SOLUTION,
    Space,
    Tensor,
    ad_map,
    apply,
    apply_at,
    at,
    fuse_legs,
    invert_map,
    multiply,
    perm,
    pipe,
    product_space,
    reorder,
    solve_rows,
    split_leg,
    tensor_product,
)
from .pairing import canonical, canonical_element, canonical_pairing, p2
from .reports import Check, Report, compare


class AntipodeNotFound(ArithmeticError):
    pass


class CrossCheckMismatch(AssertionError):
    pass


class NotACocycle(ValueError):
    pass


KINDS = ("radford", "majid", "taipe")


# ---------------------------------------------------------------------------
# flattened two-factor spaces


@dataclass(frozen=True)
class Flat:
    """A space P = A⊗B stored as one leg, index i*dim(B)+j."""

    P: Space
    A: Space
    B: Space


def flat(name: str, A: Space, B: Space, sep: str) -> Flat:
    return Flat(product_space(name, A, B, sep), A, B)


def lift(fn, dom, cod, field) -> LinearMap:
    """Tabulate ``fn`` acting on the unflattened legs of ``dom`` into ``cod``."""
    dom_spaces = tuple(d.P if isinstance(d, Flat) else d for d in dom)
    cod_spaces = tuple(c.P if isinstance(c, Flat) else c for c in cod)

    def img(idx):
        t = Tensor.basis(dom_spaces, idx, field)
        for k in reversed(range(len(dom))):
            if isinstance(dom[k], Flat):
                t = split_leg(t, k, dom[k].A, dom[k].B)
        t = fn(t)
        pos = 0
        for c in cod:
            if isinstance(c, Flat):
                t = fuse_legs(t, pos, c.P)
            pos += 1
        return t

    return LinearMap.from_function(dom_spaces, cod_spaces, img, field)


def flatten(t: Tensor, spec) -> Tensor:
    pos = 0
    for c in spec:
        if isinstance(c, Flat):
            t = fuse_legs(t, pos, c.P)
        pos += 1
    return t


# ---------------------------------------------------------------------------
# Heisenberg doubles


def heisenberg_double(H: HopfAlgebraData) -> Algebra:
    """ℋ(H) = H # Ĥ along ω▶h = h(1)p(h(2), ω)."""
    if "heisenberg" in H.cache:
        return H.cache["heisenberg"]
    A = smash_product(regular_action(H, "dual-on-H-left"))
    H.cache["heisenberg"] = A
    return A


def heisenberg_report(H: HopfAlgebraData) -> Report:
    """Associativity, unit, and the alternative form hh'(1) # (θ◀h'(2))θ'."""
    Hd = dual(H)
    A = heisenberg_double(H)
    F = H.field
    r = verify_algebra(A, f"ℋ({H.name})")
    P = Flat(A.space, H.space, Hd.space)
    rgt = regular_action(H, "H-on-dual-right").action  # (Ĥ, H) → Ĥ

    # (h, θ, h', θ') → h h'(1) # (θ◀h'(2)) θ'
    def alt(t):
        return pipe(t, at(H.comult, 2), perm(0, 2, 1, 3, 4), at(H.mult, 0), at(rgt, 1), at(Hd.mult, 1))

    alt_map = lift(alt, (P, P), (P,), F)
    r.flag("(h#θ)(h'#θ') = hh'(1) # (θ◀h'(2))θ'", alt_map == A.mult)
    return r


def heisenberg_inclusions(H: HopfAlgebraData):
    """ι1: H→ℋ(H), ι2: Ĥ→ℋ(H), ι̂1: Ĥ→ℋ(Ĥ), ι̂2: H→ℋ(Ĥ) as linear maps."""
    Hd = dual(H)
    F = H.field
    HH, HHd = heisenberg_double(H), heisenberg_double(Hd)
    PH = Flat(HH.space, H.space, Hd.space)
    PHd = Flat(HHd.space, Hd.space, H.space)
    i1 = lift(lambda t: tensor_product(t, Hd.unit), (H.space,), (PH,), F)
    i2 = lift(lambda t: tensor_product(H.unit, t), (Hd.space,), (PH,), F)
    j1 = lift(lambda t: tensor_product(t, H.unit), (Hd.space,), (PHd,), F)
    j2 = lift(lambda t: tensor_product(Hd.unit, t), (H.space,), (PHd,), F)
    return i1, i2, j1, j2


def heisenberg_anti_isos(H: HopfAlgebraData):
    """L1(θ#a) = S⁻¹(a)#Ŝ(θ) and L2(θ#a) = S(a)#Ŝ⁻¹(θ), both ℋ(Ĥ) → ℋ(H)."""
    Hd = dual(H)
    F = H.field
    HH, HHd = heisenberg_double(H), heisenberg_double(Hd)
    PH = Flat(HH.space, H.space, Hd.space)
    PHd = Flat(HHd.space, Hd.space, H.space)
    L1 = lift(lambda t: pipe(t, perm(1, 0), at(H.antipode_inv, 0), at(Hd.antipode, 1)), (PHd,), (PH,), F)
    L2 = lift(lambda t: pipe(t, perm(1, 0), at(H.antipode, 0), at(Hd.antipode_inv, 1)), (PHd,), (PH,), F)
    return L1, L2


def heisenberg_anti_iso_report(H: HopfAlgebraData) -> Report:
    Hd = dual(H)
    F = H.field
    HH, HHd = heisenberg_double(H), heisenberg_double(Hd)
    L1, L2 = heisenberg_anti_isos(H)
    i1, i2, j1, j2 = heisenberg_inclusions(H)
    X = HHd.space
    r = Report(f"Heisenberg anti-isomorphisms {H.name}")
    for name, L in (("L1", L1), ("L2", L2)):
        def lhs(t, L=L):
            return apply(L, apply(HHd.mult, t))

        def rhs(t, L=L):
            return pipe(t, at(L, 0), at(L, 1), perm(1, 0), at(HH.mult, 0))

        r.add(compare(f"{name}(xy) = {name}(y){name}(x)", (X, X), F, lhs, rhs))
        r.flag(f"{name}(1) = 1", apply(L, HHd.unit) == HH.unit)
        try:
            invert_map(L)
            r.flag(f"{name} bijective", True)
        except NotInvertible:
            r.flag(f"{name} bijective", False, "singular")
    S, Si, Sd, Sdi = H.antipode, H.antipode_inv, Hd.antipode, Hd.antipode_inv
    r.flag("L1ι̂1 = ι2Ŝ", L1.compose(j1) == i2.compose(Sd))
    r.flag("L1ι̂2 = ι1S⁻¹", L1.compose(j2) == i1.compose(Si))
    r.flag("L2ι̂1 = ι2Ŝ⁻¹", L2.compose(j1) == i2.compose(Sdi))
    r.flag("L2ι̂2 = ι1S", L2.compose(j2) == i1.compose(S))
    try:
        Mi = invert_map(L2)
        auto = L1.compose(Mi)
        r.add(
            compare(
                "L1 L2⁻¹ is an algebra automorphism",
                (HH.space, HH.space),
                F,
                lambda t: apply(auto, apply(HH.mult, t)),
                lambda t: pipe(t, at(auto, 0), at(auto, 1), at(HH.mult, 0)),
            )
        )
    except NotInvertible:
        r.flag("L1 L2⁻¹ is an algebra automorphism", False, "L2 singular")
    return r


# ---------------------------------------------------------------------------
# antipodes by solving the convolution equation


def solve_antipode(mult: LinearMap, unit: Tensor, comult: LinearMap, counit: LinearMap) -> LinearMap:
    """The S with m(S⊗id)Δ = 1ε, found by exact sparse elimination.

    Unknown (a, j) is the coefficient of e_j in S(e_a); the equation for
    (k, c) collects the e_c coefficient of Σ Δ_k^{ab} S(e_a) e_b.
    """
    V = mult.codomain[0]
    F = mult.field
    n = V.dim
    rows: dict[tuple[int, int], dict[int, object]] = {}
    for (k,), img in comult.table.items():
        for (a, b), c in img.items():
            for j in range(n):
                prod = mult.table.get((j, b))
                if not prod:
                    continue
                col = a * n + j
                for (out,), v in prod.items():
                    row = rows.setdefault((k, out), {})
                    nv = row.get(col, 0) + c * v
                    if nv:
                        row[col] = nv
                    else:
                        row.pop(col, None)
    keys = sorted(set(rows) | {(k, out) for k in range(n) for (out,) in unit.coeffs})
    eps = {k: img[()] for (k,), img in counit.table.items()}
    rhs = [eps.get(k, F.zero) * unit.coefficient((out,)) for k, out in keys]
    sol = solve_rows([rows.get(k, {}) for k in keys], rhs, n * n, F)
    if sol is NO_SOLUTION:
        raise AntipodeNotFound("id has no convolution inverse")
    table: dict = {}
    for col, v in sol.items():
        a, j = divmod(col, n)
        table.setdefault((a,), {})[(j,)] = v
    return LinearMap((V,), (V,), table, F)


# ---------------------------------------------------------------------------
# codoubles


_CODOUBLE_LABEL = {"radford": "T_R", "majid": "T_M", "taipe": "T_T"}
_DOUBLE_LABEL = {"radford": "D_R", "majid": "D_M", "taipe": "D_T"}


def _codouble_factors(H: HopfAlgebraData, kind: str):
    C = canonical(H)
    Hd = dual(H)
    if kind == "radford":  # H^op ⊗ Ĥ twisted by Ad(°U)
        return opposite(H), Hd, C.U, C.U_inv
    if kind == "majid":  # H^co ⊗ Ĥ twisted by Ad(U⁻¹)
        return coopposite(H), Hd, C.U_inv, C.U
    if kind == "taipe":  # H ⊗ Ĥ^co twisted by Ad(U)
        return H, coopposite(Hd), C.U, C.U_inv
    raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")


def drinfeld_codouble(H: HopfAlgebraData, kind: str = "radford") -> HopfAlgebraData:
    """𝒯(H) = A⊗B with the tensor-product algebra and Δ = (id⊗ΣAd(W)⊗id)(Δ_A⊗Δ_B)."""
    key = f"codouble:{kind}"
    if key in H.cache:
        return H.cache[key]
    A, B, W, W_inv = _codouble_factors(H, kind)
    F = H.field
    AB = A.algebra @ B.algebra
    W = W.with_legs((A.space, B.space))
    # (S⊗id)U inverts U in H⊗Ĥ but not in H^op⊗Ĥ, so solve there
    W_inv = None if kind == "radford" else W_inv.with_legs((A.space, B.space))
    ad = ad_map(AB, W, W_inv)
    name = f"{_CODOUBLE_LABEL[kind]}({H.name})"
    P = flat(name, A.space, B.space, "⊗")

    mult = lift(lambda t: pipe(t, perm(0, 2, 1, 3), at(A.mult, 0), at(B.mult, 1)), (P, P), (P,), F)
    comult = lift(
        lambda t: pipe(t, at(A.comult, 0), at(B.comult, 2), at(ad, 1), perm(0, 2, 1, 3)),
        (P,),
        (P, P),
        F,
    )
    unit = fuse_legs(tensor_product(A.unit, B.unit), 0, P.P)
    counit = lift(lambda t: pipe(t, at(A.counit, 0), at(B.counit, 0)), (P,), (), F)
    S = solve_antipode(mult, unit, comult, counit)
    T = HopfAlgebraData(name, P.P, mult, unit, comult, counit, S)
    T.cache["factors"] = (A, B)
    H.cache[key] = T
    return T


# ---------------------------------------------------------------------------
# doubles


def _double_factors(H: HopfAlgebraData, kind: str):
    Hd = dual(H)
    if kind == "radford":
        return coopposite(Hd), H
    if kind == "majid":
        return opposite(Hd), H
    if kind == "taipe":
        return Hd, opposite(H)
    raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")


def exchange_map(H: HopfAlgebraData, kind: str) -> LinearMap:
    """𝔗: B⊗A → A⊗B for the double-crossproduct 𝒟 = A⋈B."""
    A, B = _double_factors(H, kind)
    F = H.field
    lft = regular_action(H, "H-on-dual-left").action  # h▶ω
    rgt = regular_action(H, "H-on-dual-right").action  # ω◀h
    d = H.comult
    if kind == "radford":  # (a1▶ω◀S⁻¹(a3)) ⊗ a2
        steps = (at(d, 0), at(d, 1), at(H.antipode_inv, 2), perm(0, 3, 2, 1), at(rgt, 1), at(lft, 0))
    elif kind == "majid":  # (h3▶ω◀S(h1))^op ⊗ h2
        steps = (at(d, 0), at(d, 1), at(H.antipode, 0), perm(2, 3, 0, 1), at(rgt, 1), at(lft, 0))
    else:  # (S(a3)▶ω◀a1) ⊗ a2^op
        steps = (at(d, 0), at(d, 1), at(H.antipode, 2), perm(2, 3, 0, 1), at(rgt, 1), at(lft, 0))
    return LinearMap.from_function(
        (B.space, A.space),
        (A.space, B.space),
        lambda idx: pipe(Tensor.basis((B.space, A.space), idx, F), *steps),
        F,
    )


def double_crossproduct(H: HopfAlgebraData, kind: str = "radford") -> HopfAlgebraData:
    """𝒟 = A⋈B built directly from 𝔗, with S(a⋈b) = (1⋈S b)(S a⋈1)."""
    key = f"crossproduct:{kind}"
    if key in H.cache:
        return H.cache[key]
    A, B = _double_factors(H, kind)
    F = H.field
    Tx = exchange_map(H, kind)
    name = f"{_DOUBLE_LABEL[kind]}({H.name})"
    P = flat(name, A.space, B.space, "⋈")
    mult = lift(lambda t: pipe(t, at(Tx, 1), at(A.mult, 0), at(B.mult, 1)), (P, P), (P,), F)
    # radford uses Δ̂^co on the first factor, which is A's own coproduct
    comult = lift(lambda t: pipe(t, at(A.comult, 0), at(B.comult, 2), perm(0, 2, 1, 3)), (P,), (P, P), F)
    unit = fuse_legs(tensor_product(A.unit, B.unit), 0, P.P)
    counit = lift(lambda t: pipe(t, at(A.counit, 0), at(B.counit, 0)), (P,), (), F)
    mflat = mult

    def antipode(idx):
        i, j = divmod(idx[0], B.dim)
        left = fuse_legs(tensor_product(A.unit, apply(B.antipode, B.e(j))), 0, P.P)
        right = fuse_legs(tensor_product(apply(A.antipode, A.e(i)), B.unit), 0, P.P)
        return apply(mflat, tensor_product(left, right))

    S = LinearMap.from_function((P.P,), (P.P,), antipode, F)
    D = HopfAlgebraData(name, P.P, mult, unit, comult, counit, S)
    D.cache["factors"] = (A, B)
    H.cache[key] = D
    return D


def _first_table_diff(f: LinearMap, g: LinearMap, labels) -> str | None:
    keys = sorted(set(f.table) | set(g.table))
    for k in keys:
        if f.table.get(k, {}) != g.table.get(k, {}):
            return f"at {'⊗'.join(labels[i] for i in k) or '1'}"
    return None


def drinfeld_double(H: HopfAlgebraData, kind: str = "radford") -> HopfAlgebraData:
    """dual(𝒯(H)) cross-checked against the direct 𝔗-crossproduct."""
    D = double_crossproduct(H, kind)
    Dd = dual(drinfeld_codouble(H, kind))
    labels = D.labels
    for what, f, g in (
        ("mult", D.mult, Dd.mult),
        ("comult", D.comult, Dd.comult),
        ("counit", D.counit, Dd.counit),
        ("antipode", D.antipode, Dd.antipode),
    ):
        w = _first_table_diff(f, g, labels)
        if w is not None:
            raise CrossCheckMismatch(f"{kind} double: {what} differs {w}")
    if D.unit.coeffs != Dd.unit.coeffs:
        raise CrossCheckMismatch(f"{kind} double: units differ")
    return D


def double_comparisons(H: HopfAlgebraData) -> Report:
    """𝒟_T(H) = 𝒟_R(H^op), ♮: 𝒟_M(H) → 𝒟_R(H), and 𝒟_M(H^op) ≅ 𝒟_T(H)."""
    r = Report(f"double comparisons {H.name}")
    DT = drinfeld_double(H, "taipe")
    DRop = drinfeld_double(opposite(H), "radford")
    r.flag("𝒟_T(H) = 𝒟_R(H^op)", DT.structure_equal(DRop))
    DM, DR = drinfeld_double(H, "majid"), drinfeld_double(H, "radford")
    nat = natural_iso(H)
    rep = morphism_report(nat, DM, DR)
    r.flag("♮: 𝒟_M(H) → 𝒟_R(H) is a Hopf morphism", rep.ok, str(rep.first_failure() and rep.first_failure().witness))
    r.flag("♮ bijective", _bijective(nat))
    nat_op = natural_iso(opposite(H))
    DMop = drinfeld_double(opposite(H), "majid")
    rep = morphism_report(nat_op, DMop, DT)
    r.flag("♮: 𝒟_M(H^op) → 𝒟_T(H) is a Hopf isomorphism", rep.ok and _bijective(nat_op))
    return r


def _bijective(f: LinearMap) -> bool:
    try:
        invert_map(f)
        return True
    except NotInvertible:
        return False


def natural_iso(H: HopfAlgebraData) -> LinearMap:
    """♮(ω^op ⋈ h) = Ŝ(ω) ⋈ h."""
    DM, DR = double_crossproduct(H, "majid"), double_crossproduct(H, "radford")
    Am, Bm = DM.cache["factors"]
    Ar, Br = DR.cache["factors"]
    Hd = dual(H)
    return lift(
        lambda t: apply_at(Hd.antipode, t, 0),
        (Flat(DM.space, Am.space, Bm.space),),
        (Flat(DR.space, Ar.space, Br.space),),
        H.field,
    )


def double_canonical_element(H: HopfAlgebraData) -> Tensor:
    """U_𝒟 = U2⋈U1 ⊗ U1^op⊗U2 in 𝒟_R(H)⊗𝒯_R(H)."""
    D, T = drinfeld_double(H, "radford"), drinfeld_codouble(H, "radford")
    U = canonical(H).U
    A, B = D.cache["factors"]
    Aop, Bt = T.cache["factors"]
    t = reorder(tensor_product(U, U), (1, 2, 0, 3))  # θ_i ⋈ h_j ⊗ h_i ⊗ θ_j
    return flatten(t.with_legs((A.space, B.space, Aop.space, Bt.space)), (Flat(D.space, A.space, B.space), Flat(T.space, Aop.space, Bt.space)))


def double_canonical_report(H: HopfAlgebraData) -> Report:
    D = drinfeld_double(H, "radford")
    Cd = canonical(D)
    Ud = double_canonical_element(H).with_legs(Cd.legs)
    r = Report(f"canonical element of 𝒟_R({H.name})")
    r.flag("U_𝒟 = U2⋈U1 ⊗ U1^op⊗U2", Cd.U == Ud)
    K = Cd.K
    w = None
    for a in range(K.dim):
        for b in range(D.dim):
            if p2(Cd, Ud, tensor_product(K.e(a), D.e(b))) != Cd.pairing(D.e(b), K.e(a)):
                w = f"{K.labels[a]}, {D.labels[b]}"
                break
        if w:
            break
    r.flag("p²(U2⋈U1 ⊗ U1^op⊗U2, ω⊗x) = p(x, ω)", w is None, w)
    return r


def codouble_coproduct_is_plain(H: HopfAlgebraData, kind: str = "radford") -> bool:
    """Whether Δ_𝒯 is the untwisted tensor coproduct (expected for commutative,
    cocommutative H, and to be tested directly otherwise)."""
    T = drinfeld_codouble(H, kind)
    A, B = T.cache["factors"]
    P = Flat(T.space, A.space, B.space)
    plain = lift(lambda t: pipe(t, at(A.comult, 0), at(B.comult, 2), perm(0, 2, 1, 3)), (P,), (P, P), H.field)
    return plain == T.comult


# ---------------------------------------------------------------------------
# cocycles


@dataclass(eq=False)
class CocycleData:
    hopf: HopfAlgebraData
    form: LinearMap
    chirality: str
    normal: bool


def _sig(form: LinearMap):
    tab = {k: img[()] for k, img in form.table.items()}
    return tab


def cocycle_condition(H: HopfAlgebraData, form: LinearMap, chirality: str) -> Check:
    """Left: σ(h1,h'1)σ(h2h'2,h'') = σ(h'1,h''1)σ(h,h'2h''2).
    Right: σ(h1h'1,h'')σ(h2,h'2) = σ(h,h'1h''1)σ(h'2,h''2).

    Both sides factor through the matching twisted product m_σ, as
    σ(m_σ(h,h'),h'') = σ(h,m_σ(h',h'')), which is how they are evaluated.
    """
    if chirality not in ("left", "right"):
        raise ValueError("chirality is 'left' or 'right'")
    V = H.space
    s = form.with_spaces((V, V), ())
    m = twisted_product(H, s, chirality)
    name = f"{chirality} cocycle condition"
    w = _form_assoc_witness(V, H.field, m, s)
    return Check(name, w is None, w)


def _form_assoc_witness(V: Space, F, m: LinearMap, s: LinearMap) -> str | None:
    """First (h, h', h'') in lexicographic order with s(m(h,h'),h'') ≠ s(h,m(h',h''))."""
    n = V.dim
    rows: dict = {}  # rows[a][b] = s(a, b)
    cols: dict = {}  # cols[b][a] = s(a, b)
    for (a, b), img in s.table.items():
        rows.setdefault(a, {})[b] = img[()]
        cols.setdefault(b, {})[a] = img[()]

    def combine(img, table):
        out: dict = {}
        for (k,), c in img.items():
            for x, v in table.get(k, {}).items():
                out[x] = out.get(x, F.zero) + c * v
        return out

    L = {ij: combine(img, rows) for ij, img in m.table.items()}  # L[(i,j)][l]
    R = {jl: combine(img, cols) for jl, img in m.table.items()}  # R[(j,l)][i]
    zero = F.zero
    for i in range(n):
        for j in range(n):
            Lij = L.get((i, j), {})
            for l in range(n):
                a, b = Lij.get(l, zero), R.get((j, l), {}).get(i, zero)
                if a != b:
                    return f"{V.labels[i]}⊗{V.labels[j]}⊗{V.labels[l]}: lhs={F.format(a)} rhs={F.format(b)}"
    return None


def is_normal(H: HopfAlgebraData, form: LinearMap) -> bool:
    s = form.with_spaces((H.space, H.space), ())
    for i in range(H.dim):
        e = H.e(i)
        eps = apply(H.counit, e)
        if apply(s, tensor_product(H.unit, e)) != eps or apply(s, tensor_product(e, H.unit)) != eps:
            return False
    return True


def cocycle_check(H: HopfAlgebraData, form: LinearMap, chirality: str) -> CocycleData:
    c = cocycle_condition(H, form, chirality)
    if not c.passed:
        raise NotACocycle(f"{c.name} fails at {c.witness}")
    return CocycleData(H, form.with_spaces((H.space, H.space), ()), chirality, is_normal(H, form))


def twisted_product(H: HopfAlgebraData, form: LinearMap, which: str) -> LinearMap:
    """``which='left'``: h σ·h' = σ(h1,h'1)h2h'2; ``which='right'``: h·σ h' = h1h'1σ(h2,h'2).

    The left twist is the one whose associativity is the left cocycle
    condition above (and likewise on the right).
    """
    V, F = H.space, H.field
    s = form.with_spaces((V, V), ())
    d, m = H.comult, H.mult
    if which == "left":
        fn = lambda t: pipe(t, at(d, 0), at(d, 2), perm(0, 2, 1, 3), at(s, 0), at(m, 0))
    elif which == "right":
        fn = lambda t: pipe(t, at(d, 0), at(d, 2), perm(0, 2, 1, 3), at(m, 0), at(s, 1))
    else:
        raise ValueError("which is 'left' or 'right'")
    return LinearMap.from_function((V, V), (V,), lambda i: fn(Tensor.basis((V, V), i, F)), F)


def cocycle_twist(H: HopfAlgebraData, sigma: CocycleData) -> Algebra:
    """_σH for a left cocycle, H_σ for a right one; associativity is re-verified."""
    A = Algebra.single(twisted_product(H, sigma.form, sigma.chirality), H.unit)
    rep = verify_algebra(A, f"twist of {H.name}")
    if not rep.ok:
        c = rep.first_failure()
        raise NotACocycle(f"twisted product fails {c.name} at {c.witness}")
    return A


def trivial_cocycle(H: HopfAlgebraData) -> LinearMap:
    """σ_tr(h, h') = ε(h)ε(h')."""
    V, F = H.space, H.field
    return LinearMap.from_function(
        (V, V), (), lambda i: {(): H.eps(H.e(i[0])) * H.eps(H.e(i[1]))}, F
    )


def twist_forms(H: HopfAlgebraData) -> dict[str, LinearMap]:
    """σ, σ⁻¹ on 𝒯_R(H) and η, η⁻¹ on 𝒟_R(H)."""
    T, D = drinfeld_codouble(H, "radford"), drinfeld_double(H, "radford")
    Hd = dual(H)
    F = H.field
    n = H.dim
    one_h, one_d = H.unit, Hd.unit

    def ev(theta: Tensor, h: Tensor):
        return sum((theta.coefficient((i,)) * h.coefficient((i,)) for i in range(n)), F.zero)

    def form(space, fn):
        return LinearMap.from_function((space, space), (), lambda idx: {(): fn(*divmod(idx[0], n), *divmod(idx[1], n))}, F)

    e, ed = H.e, Hd.e
    eps = lambda i: H.eps(e(i))
    epsd = lambda i: Hd.eps(ed(i))
    return {
        # σ(h⊗θ⊗h'⊗θ') = ε(h) θ(h') ε̂(θ')
        "sigma": form(T.space, lambda h, th, h2, th2: eps(h) * ev(ed(th), e(h2)) * epsd(th2)),
        # σ⁻¹ = ε(h) Ŝ(θ)(h') ε̂(θ')
        "sigma_inv": form(T.space, lambda h, th, h2, th2: eps(h) * ev(Hd.S(ed(th)), e(h2)) * epsd(th2)),
        # η(θ⊗h⊗θ'⊗h') = ε̂(θ) θ'(h) ε(h')
        "eta": form(D.space, lambda th, h, th2, h2: epsd(th) * ev(ed(th2), e(h)) * eps(h2)),
        # η⁻¹ = ε̂(θ) p(h, Ŝθ') ε(h')
        "eta_inv": form(D.space, lambda th, h, th2, h2: epsd(th) * ev(Hd.S(ed(th2)), e(h)) * eps(h2)),
    }


def convolution_inverse_form(K: HopfAlgebraData, form: LinearMap) -> LinearMap:
    """The bilinear form s' with s(x1,y1)s'(x2,y2) = ε(x)ε(y)."""
    V, F, n = K.space, K.field, K.dim
    s = form.with_spaces((V, V), ())
    rows, rhs = [], []
    for x in range(n):
        for y in range(n):
            t = pipe(Tensor.basis((V, V), (x, y), F), at(K.comult, 0), at(K.comult, 2), perm(0, 2, 1, 3), at(s, 0))
            rows.append({a * n + b: c for (a, b), c in t.coeffs.items()})
            rhs.append(K.eps(K.e(x)) * K.eps(K.e(y)))
    sol = solve_rows(rows, rhs, n * n, F)
    if sol is NO_SOLUTION:
        raise NotInvertible("form has no convolution inverse")
    return LinearMap((V, V), (), {divmod(c, n): {(): v} for c, v in sol.items()}, F)


def verify_twist_theorems(H: HopfAlgebraData) -> Report:
    """The four Heisenberg-as-twist identities, compared as product tensors."""
    T, D = drinfeld_codouble(H, "radford"), drinfeld_double(H, "radford")
    HH, HHd = heisenberg_double(H), heisenberg_double(dual(H))
    forms = twist_forms(H)
    r = Report(f"twist theorems {H.name}")
    for fname, K, side, target, label in (
        ("σ", T, "left", HH, "ℋ(H) = _σ𝒯_R(H)"),
        ("η", D, "right", HHd, "ℋ(Ĥ) = 𝒟_R(H)_η"),
        ("σ⁻¹", T, "right", HH, "ℋ(H) = 𝒯_R(H)_σ⁻¹"),
        ("η⁻¹", D, "left", HHd, "ℋ(Ĥ) = _η⁻¹𝒟_R(H)"),
    ):
        f = forms[_FORM_KEYS[fname]]
        c = cocycle_condition(K, f, side)
        r.add(replace(c, name=f"{fname}: {c.name}"))
        r.flag(f"{fname} normal", is_normal(K, f))
        tw = twisted_product(K, f, side)
        w = _first_table_diff(tw, target.mult.with_spaces((K.space, K.space), (K.space,)), K.labels)
        r.flag(label, w is None, w)
    for base, inv, K in (("sigma", "sigma_inv", T), ("eta", "eta_inv", D)):
        true_inv = convolution_inverse_form(K, forms[base])
        w = _first_table_diff(true_inv, forms[inv].with_spaces((K.space, K.space), ()), K.labels)
        r.flag(f"{inv} is the convolution inverse of {base}", w is None, w)
    return r


_FORM_KEYS = {"σ": "sigma", "η": "eta", "σ⁻¹": "sigma_inv", "η⁻¹": "eta_inv"}
