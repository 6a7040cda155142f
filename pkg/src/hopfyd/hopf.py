"""Hopf algebras given by structure constants, and the constructions on them."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

from .linalg import (
    Algebra,
    Field,
    LinearMap,
    NotInvertible,
    Space,
    Tensor,
    apply,
    apply_at,
    invert_map,
    reorder,
    tensor_product,
)
from .reports import Check, Report, compare


class InvalidStructure(ValueError):
    pass


class NotAHopfMorphism(ValueError):
    pass


_SUFFIX = re.compile(r"\^(op,co|op|co)$")


def _split_name(name: str) -> tuple[str, bool, bool]:
    m = _SUFFIX.search(name)
    if not m:
        return name, False, False
    tag = m.group(1)
    return name[: m.start()], "op" in tag, "co" in tag


def _join_name(base: str, op: bool, co: bool) -> str:
    return base + {(False, False): "", (True, False): "^op", (False, True): "^co", (True, True): "^op,co"}[(op, co)]


def _toggle_dual(name: str) -> str:
    base, op, co = _split_name(name)
    base = base[:-1] if base.endswith("*") else base + "*"
    # the dual of H^op is (H*)^co and vice versa
    return _join_name(base, co, op)


def _toggle_label(label: str) -> str:
    return label[1:] if label.startswith("δ") else "δ" + label


class HopfAlgebraData:
    """(H, m, 1, Δ, ε, S) on a fixed basis; S⁻¹ is computed on construction."""

    def __init__(
        self,
        name: str,
        space: Space,
        mult: LinearMap,
        unit: Tensor,
        comult: LinearMap,
        counit: LinearMap,
        antipode: LinearMap,
        antipode_inv: LinearMap | None = None,
    ):
        V = space
        self.name = name
        self.space = V
        self.field: Field = mult.field
        self.mult = mult.with_spaces((V, V), (V,))
        self.unit = unit.with_legs((V,))
        self.comult = comult.with_spaces((V,), (V, V))
        self.counit = counit.with_spaces((V,), ())
        self.antipode = antipode.with_spaces((V,), (V,))
        if antipode_inv is None:
            try:
                antipode_inv = invert_map(self.antipode)
            except NotInvertible as exc:
                raise InvalidStructure(f"antipode of {name} is singular") from exc
        self.antipode_inv = antipode_inv.with_spaces((V,), (V,))
        self.algebra = Algebra.single(self.mult, self.unit)
        self.cache: dict = {}

    # construction from plain tables -------------------------------------

    @classmethod
    def from_tables(
        cls,
        name: str,
        labels: Iterable[str],
        field: Field,
        mult: Mapping[tuple[int, int], Mapping[int, object]],
        unit: Mapping[int, object],
        comult: Mapping[int, Mapping[tuple[int, int], object]],
        counit: Mapping[int, object],
        antipode: Mapping[int, Mapping[int, object]],
    ) -> "HopfAlgebraData":
        labels = tuple(labels)
        V = Space(name, len(labels), labels)
        F = field
        m = LinearMap((V, V), (V,), {k: {(j,): F(c) for j, c in img.items()} for k, img in mult.items()}, F)
        u = Tensor((V,), {(i,): F(c) for i, c in unit.items()}, F)
        d = LinearMap((V,), (V, V), {(i,): {k: F(c) for k, c in img.items()} for i, img in comult.items()}, F)
        e = LinearMap((V,), (), {(i,): {(): F(c)} for i, c in counit.items()}, F)
        s = LinearMap((V,), (V,), {(i,): {(j,): F(c) for j, c in img.items()} for i, img in antipode.items()}, F)
        return cls(name, V, m, u, d, e, s)

    # conveniences -------------------------------------------------------

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def labels(self) -> tuple[str, ...]:
        return self.space.labels

    @property
    def one(self) -> Tensor:
        return self.unit

    def e(self, i: int | str, c=1) -> Tensor:
        if isinstance(i, str):
            i = self.space.index(i)
        return Tensor.basis((self.space,), (i,), self.field, c)

    def vec(self, coeffs: Mapping) -> Tensor:
        """Element from ``{label or index: coefficient}``."""
        out = {}
        for k, c in coeffs.items():
            i = self.space.index(k) if isinstance(k, str) else k
            out[(i,)] = self.field(c)
        return Tensor((self.space,), out, self.field)

    def mul(self, x: Tensor, y: Tensor) -> Tensor:
        return self.algebra.mul(x, y)

    def cop(self, x: Tensor) -> Tensor:
        return apply(self.comult, x)

    def S(self, x: Tensor) -> Tensor:
        return apply(self.antipode, x)

    def Sinv(self, x: Tensor) -> Tensor:
        return apply(self.antipode_inv, x)

    def eps(self, x: Tensor):
        return apply(self.counit, x).coefficient(())

    def identity(self) -> LinearMap:
        return LinearMap.identity((self.space,), self.field)

    def is_commutative(self) -> bool:
        return self.algebra.is_commutative()

    def is_cocommutative(self) -> bool:
        for i in range(self.dim):
            d = self.cop(self.e(i))
            if d != reorder(d, (1, 0)):
                return False
        return True

    def unit_map(self) -> LinearMap:
        return LinearMap((), (self.space,), {(): self.unit.coeffs}, self.field)

    def with_space(self, space: Space, name: str | None = None) -> "HopfAlgebraData":
        return HopfAlgebraData(
            name or space.name, space, self.mult, self.unit, self.comult, self.counit, self.antipode, self.antipode_inv
        )

    def structure_equal(self, other: "HopfAlgebraData") -> bool:
        """Same structure constants on the same-sized basis (names ignored)."""
        return (
            self.dim == other.dim
            and self.field == other.field
            and self.mult == other.mult
            and self.unit.coeffs == other.unit.coeffs
            and self.comult == other.comult
            and self.counit == other.counit
            and self.antipode == other.antipode
        )

    def __repr__(self):
        return f"HopfAlgebraData({self.name}, dim={self.dim}, {self.field})"


# ---------------------------------------------------------------------------
# axioms


def verify_hopf_axioms(H: HopfAlgebraData) -> Report:
    F, V = H.field, H.space
    m, d, S = H.mult, H.comult, H.antipode
    one = H.unit
    r = Report(f"hopf axioms: {H.name}")

    def mul3_left(t):
        return apply(m, apply_at(m, t, 0))

    def mul3_right(t):
        return apply(m, apply_at(m, t, 1))

    r.add(compare("associativity", (V, V, V), F, mul3_left, mul3_right, "m(m⊗id) = m(id⊗m)"))
    r.add(compare("left unit", (V,), F, lambda t: apply(m, tensor_product(one, t)), lambda t: t, "m(1⊗h) = h"))
    r.add(compare("right unit", (V,), F, lambda t: apply(m, tensor_product(t, one)), lambda t: t, "m(h⊗1) = h"))
    r.add(
        compare(
            "coassociativity",
            (V,),
            F,
            lambda t: apply_at(d, apply(d, t), 0),
            lambda t: apply_at(d, apply(d, t), 1),
            "(Δ⊗id)Δ = (id⊗Δ)Δ",
        )
    )
    r.add(compare("left counit", (V,), F, lambda t: apply_at(H.counit, apply(d, t), 0), lambda t: t, "(ε⊗id)Δ = id"))
    r.add(compare("right counit", (V,), F, lambda t: apply_at(H.counit, apply(d, t), 1), lambda t: t, "(id⊗ε)Δ = id"))

    A2 = H.algebra @ H.algebra

    def delta_of_product(t):
        return apply(d, apply(m, t))

    def product_of_deltas(t):
        (i, j), c = next(iter(t.coeffs.items()))
        return A2.mul(H.cop(H.e(i)), H.cop(H.e(j))).scale(c)

    r.add(compare("comult multiplicative", (V, V), F, delta_of_product, product_of_deltas, "Δ(hk) = Δ(h)Δ(k)"))
    r.flag(
        "comult unital",
        H.cop(one) == tensor_product(one, one),
        f"Δ(1) = {H.cop(one).pretty()}",
        "Δ(1) = 1⊗1",
    )

    def eps_of_product(t):
        return apply(H.counit, apply(m, t))

    def product_of_eps(t):
        (i, j), c = next(iter(t.coeffs.items()))
        return Tensor.scalar(H.eps(H.e(i)) * H.eps(H.e(j)) * c, F)

    r.add(compare("counit multiplicative", (V, V), F, eps_of_product, product_of_eps, "ε(hk) = ε(h)ε(k)"))
    r.flag("counit unital", H.eps(one) == F.one, f"ε(1) = {H.eps(one)}", "ε(1) = 1")

    def eta_eps(t):
        return one.scale(H.eps(t))

    r.add(
        compare(
            "antipode left",
            (V,),
            F,
            lambda t: apply(m, apply_at(S, apply(d, t), 0)),
            eta_eps,
            "m(S⊗id)Δ = 1ε",
        )
    )
    r.add(
        compare(
            "antipode right",
            (V,),
            F,
            lambda t: apply(m, apply_at(S, apply(d, t), 1)),
            eta_eps,
            "m(id⊗S)Δ = 1ε",
        )
    )
    r.add(
        compare(
            "antipode inverse",
            (V,),
            F,
            lambda t: apply(H.antipode_inv, apply(S, t)),
            lambda t: t,
            "S⁻¹S = id",
        )
    )
    return r


# ---------------------------------------------------------------------------
# constructions


def dual(H: HopfAlgebraData) -> HopfAlgebraData:
    """Ĥ on the dual basis: every structure map is a transpose."""
    if "dual" in H.cache:
        return H.cache["dual"]
    F = H.field
    name = _toggle_dual(H.name)
    Vd = Space(name, H.dim, tuple(_toggle_label(l) for l in H.labels))
    mult = H.comult.transpose().with_spaces((Vd, Vd), (Vd,))
    comult = H.mult.transpose().with_spaces((Vd,), (Vd, Vd))
    unit = Tensor((Vd,), {(i,): H.eps(H.e(i)) for i in range(H.dim)}, F)
    counit = LinearMap((Vd,), (), {k: {(): c} for k, c in H.unit.coeffs.items()}, F)
    S = H.antipode.transpose()
    Sinv = H.antipode_inv.transpose()
    D = HopfAlgebraData(name, Vd, mult, unit, comult, counit, S, Sinv)
    D.cache["dual"] = H
    H.cache["dual"] = D
    return D


def _flip2(f: LinearMap, on_domain: bool) -> dict:
    if on_domain:
        return {(k[1], k[0]): img for k, img in f.table.items()}
    return {k: {(j[1], j[0]): c for j, c in img.items()} for k, img in f.table.items()}


def _twisted(H: HopfAlgebraData, op: bool, co: bool, key: str) -> HopfAlgebraData:
    if key in H.cache:
        return H.cache[key]
    base, h_op, h_co = _split_name(H.name)
    name = _join_name(base, h_op ^ op, h_co ^ co)
    V = H.space.renamed(name)
    mult = LinearMap((V, V), (V,), _flip2(H.mult, True), H.field) if op else H.mult
    comult = LinearMap((V,), (V, V), _flip2(H.comult, False), H.field) if co else H.comult
    if op ^ co:
        S, Sinv = H.antipode_inv, H.antipode
    else:
        S, Sinv = H.antipode, H.antipode_inv
    T = HopfAlgebraData(name, V, mult, H.unit, comult, H.counit, S, Sinv)
    H.cache[key] = T
    T.cache[key] = H
    return T


def opposite(H: HopfAlgebraData) -> HopfAlgebraData:
    """H^op: flipped product, antipode S⁻¹."""
    return _twisted(H, True, False, "op")


def coopposite(H: HopfAlgebraData) -> HopfAlgebraData:
    """H^co: flipped coproduct, antipode S⁻¹."""
    return _twisted(H, False, True, "co")


def op_cop(H: HopfAlgebraData) -> HopfAlgebraData:
    """H^{op,co}: both flipped, antipode S."""
    return _twisted(H, True, True, "opco")


def antipode_inverse(H: HopfAlgebraData) -> LinearMap:
    return H.antipode_inv


# ---------------------------------------------------------------------------
# morphisms


def morphism_report(f: LinearMap, H: HopfAlgebraData, K: HopfAlgebraData) -> Report:
    F = H.field
    V, W = H.space, K.space
    f = f.with_spaces((V,), (W,))
    ff = f.kron(f)
    r = Report(f"morphism {H.name} -> {K.name}")
    r.add(compare("f m = m'(f⊗f)", (V, V), F, lambda t: apply(f, apply(H.mult, t)), lambda t: apply(K.mult, apply(ff, t))))
    r.flag("f(1) = 1'", apply(f, H.unit) == K.unit.with_legs((W,)), f"f(1) = {apply(f, H.unit).pretty()}")
    r.add(
        compare("(f⊗f)Δ = Δ'f", (V,), F, lambda t: apply(ff, apply(H.comult, t)), lambda t: apply(K.comult, apply(f, t)))
    )
    r.add(compare("ε'f = ε", (V,), F, lambda t: apply(K.counit, apply(f, t)), lambda t: apply(H.counit, t)))
    r.add(
        compare("f S = S'f", (V,), F, lambda t: apply(f, apply(H.antipode, t)), lambda t: apply(K.antipode, apply(f, t)))
    )
    return r


def is_hopf_morphism(f: LinearMap, H: HopfAlgebraData, K: HopfAlgebraData) -> bool:
    if f.domain_dims != (H.dim,) or f.codomain_dims != (K.dim,):
        return False
    return morphism_report(f, H, K).ok


@dataclass(eq=False)
class HopfMorphism:
    source: HopfAlgebraData
    target: HopfAlgebraData
    map: LinearMap

    def __post_init__(self):
        self.map = self.map.with_spaces((self.source.space,), (self.target.space,))
        rep = morphism_report(self.map, self.source, self.target)
        if not rep.ok:
            c = rep.first_failure()
            raise NotAHopfMorphism(f"{c.name}: {c.witness}")

    def __call__(self, x: Tensor) -> Tensor:
        return apply(self.map, x)

    def compose(self, other: "HopfMorphism") -> "HopfMorphism":
        """``self ∘ other``."""
        return HopfMorphism(other.source, self.target, self.map.compose(other.map))


def transpose_morphism(T: HopfMorphism) -> HopfMorphism:
    """T̂: Ĥ' → Ĥ with p'(T h, ω') = p(h, T̂ ω')."""
    H, K = T.source, T.target
    invert_map(T.map)  # raises NotInvertible for a singular T
    Hd, Kd = dual(H), dual(K)
    That = T.map.transpose().with_spaces((Kd.space,), (Hd.space,))
    F = H.field
    for i in range(H.dim):
        Th = apply(T.map, H.e(i))
        for j in range(K.dim):
            lhs = Th.coefficient((j,))
            rhs = apply(That, Kd.e(j)).coefficient((i,))
            if lhs != rhs:
                raise InvalidStructure(f"transpose pairing identity fails at ({H.labels[i]}, {Kd.labels[j]})")
    return HopfMorphism(Kd, Hd, That)


def identity_morphism(H: HopfAlgebraData) -> HopfMorphism:
    return HopfMorphism(H, H, H.identity())
