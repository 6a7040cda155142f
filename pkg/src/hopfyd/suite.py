"""The acceptance matrix: one report per headline claim, over the built-in catalog."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .doubles import (
    KINDS,
    cocycle_condition,
    double_canonical_report,
    double_comparisons,
    drinfeld_codouble,
    drinfeld_double,
    verify_twist_theorems,
)
from .examples import (
    HOPF_FIXTURES,
    heisenberg_over_double_report,
    hopf_fixture,
    sweedler_h4,
    yd_catalog,
    yd_fixture,
)
from .hopf import HopfAlgebraData, coopposite, dual, opposite, verify_hopf_axioms
from .linalg import QQ, Field, LinearMap
from .pairing import canonical, circ_u_report, slice_identities, verify_canonical_identities
from .reports import Check, Report
from .yd import (
    FUNCTORS,
    StandardYd,
    check_braided_coaction,
    check_braided_standard,
    check_coaction_yd,
    check_standard_yd,
    conversion_report,
    double_equivalence,
    equivalence_square,
    functor_report,
    functor_source,
    lambda_braided_check,
    lambda_verdict,
    to_coaction,
    to_standard,
)

KERNEL_FIXTURES = ("group:C2", "group:C3", "group:C4", "group:V4", "group:S3", "fn:S3", "sweedler4")


@dataclass
class SuiteConfig:
    field: Field = QQ
    fixtures: tuple[str, ...] = ()  # empty means the default list of each criterion
    extra_fields: tuple[Field, ...] = (Field(7),)

    def hopfs(self, default=KERNEL_FIXTURES) -> tuple[str, ...]:
        chosen = self.fixtures or default
        return tuple(f for f in chosen if f in HOPF_FIXTURES)


def _summary(r: Report, name: str, sub: Report, anchor: str = "") -> Check:
    f = sub.first_failure()
    return r.flag(name, sub.ok, f and f"{f.name}: {f.witness}", anchor)


# ---------------------------------------------------------------------------


def hopf_kernel(cfg: SuiteConfig) -> Report:
    r = Report("Hopf kernel")
    fields = (cfg.field,) + tuple(f for f in cfg.extra_fields if f != cfg.field)
    for F in fields:
        for name in cfg.hopfs():
            H = hopf_fixture(name, F)
            tag = f"{name} over {F}"
            _summary(r, f"{tag}: axioms", verify_hopf_axioms(H), "m(S⊗id)Δ = 1ε = m(id⊗S)Δ")
            for op, K in (("dual", dual(H)), ("op", opposite(H)), ("co", coopposite(H))):
                _summary(r, f"{tag}: {op} axioms", verify_hopf_axioms(K))
            r.flag(f"{tag}: dual∘dual = id", dual(dual(H)).structure_equal(H))
    return r


def canonical_element_suite(cfg: SuiteConfig) -> Report:
    r = Report("canonical element")
    for name in cfg.hopfs():
        C = canonical(hopf_fixture(name, cfg.field))
        _summary(r, f"{name}: identities of U", verify_canonical_identities(C), "(Δ⊗id)U = U13U23, (id⊗Δ̂)U = U12U13")
        _summary(r, f"{name}: °U and T_U", circ_u_report(C), "T_U⁻¹ = T_(U⁻¹)")
        _summary(r, f"{name}: slice identities", slice_identities(C), "(id⊗p)(U(g⊗ω)U⁻¹) = (ω▶h1)gS(h2)")
    return r


def doubles_suite(cfg: SuiteConfig) -> Report:
    r = Report("doubles")
    for name in cfg.hopfs():
        H = hopf_fixture(name, cfg.field)
        n = H.dim
        for kind in KINDS:
            try:
                D = drinfeld_double(H, kind)  # raises on a cross-check mismatch
                T = drinfeld_codouble(H, kind)
                r.flag(f"{name}: 𝒟_{kind} = dual(𝒯_{kind}), dim (dim H)²", D.dim == T.dim == n * n, f"dims {D.dim}, {T.dim}")
                _summary(r, f"{name}: 𝒯_{kind} axioms", verify_hopf_axioms(T))
            except Exception as exc:  # CrossCheckMismatch, AntipodeNotFound
                r.flag(f"{name}: 𝒟_{kind} = dual(𝒯_{kind}), dim (dim H)²", False, f"{type(exc).__name__}: {exc}")
        _summary(r, f"{name}: double comparisons", double_comparisons(H), "𝒟_T(H) = 𝒟_R(H^op)")
        tw = verify_twist_theorems(H)
        for c in tw.checks:
            r.add(Check(f"{name}: {c.name}", c.passed, c.witness, c.anchor))
    return r


def _instances(cfg: SuiteConfig):
    hopfs = cfg.hopfs(("sweedler4", "group:S3"))
    for fname in yd_catalog(hopfs):
        for label, inst in yd_fixture(fname, cfg.field):
            yield fname, label, inst


def yd_equivalences(cfg: SuiteConfig) -> Report:
    r = Report("YD equivalences")
    for fname, label, inst in _instances(cfg):
        if isinstance(inst, StandardYd):
            s, c = inst, to_coaction(inst)
        else:
            s, c = to_standard(inst), inst
        ys = check_standard_yd(s)
        _summary(r, f"{label}: standard YD", ys)
        r.flag(f"{label}: the two YD forms agree", ys.get("the two forms agree").passed)
        _summary(r, f"{label}: only-coaction YD", check_coaction_yd(c))
        _summary(r, f"{label}: conversion", conversion_report(c))
        verdicts = (
            check_braided_standard(s).get("m∘τ = m").passed,
            check_braided_coaction(c).get("Heisenberg form").passed,
            lambda_verdict(lambda_braided_check(s)),
        )
        expected = not fname.startswith("trivial:") or s.carrier.is_commutative()
        r.flag(
            f"{label}: braided verdicts agree (τ/ρ, Heisenberg, λ_U)",
            len(set(verdicts)) == 1 and verdicts[0] == expected,
            f"verdicts {verdicts}, expected {expected}",
        )
    return r


def dualities(cfg: SuiteConfig) -> Report:
    r = Report("double dualities")
    for fname, label, inst in _instances(cfg):
        if isinstance(inst, StandardYd):
            _summary(r, f"{label}: double module algebra and codouble comodule algebra", double_equivalence(inst))
    for name in cfg.hopfs(("group:C2", "sweedler4", "group:S3")):
        _summary(r, f"{name}: U_𝒟 slice test", double_canonical_report(hopf_fixture(name, cfg.field)), "U_𝒟 = U2⋈U1 ⊗ U1^op⊗U2")
    return r


def functors_suite(cfg: SuiteConfig) -> Report:
    r = Report("equivalence functors")
    for name in cfg.hopfs(("sweedler4",)):
        for variant in ("ll", "lr", "rr", "rl"):
            for label, inst in yd_fixture(f"adjoint:{name}:{variant}", cfg.field):
                for fn in FUNCTORS:
                    kind, src = functor_source(fn)
                    if (kind == "standard") == isinstance(inst, StandardYd) and inst.variant == src:
                        _summary(r, f"{label}: {fn}", functor_report(inst, fn))
                if not isinstance(inst, StandardYd) and inst.variant == "rl":
                    _summary(r, f"{label}: four-corner square", equivalence_square(inst))
    missing = [fn for fn in FUNCTORS if not any(f": {fn}" == c.name[-len(fn) - 2 :] for c in r.checks)]
    r.flag("every functor exercised", not missing, f"missing {missing}")
    return r


def heisenberg_double_suite(cfg: SuiteConfig) -> Report:
    r = Report("Heisenberg algebra over the double")
    for name in cfg.hopfs(("group:C2", "sweedler4")):
        sub = heisenberg_over_double_report(hopf_fixture(name, cfg.field))
        for c in sub.checks:
            r.add(Check(f"{name}: {c.name}", c.passed, c.witness, c.anchor))
    return r


def broken_antipode(F: Field = QQ) -> HopfAlgebraData:
    """H4 with S(x) = +gx."""
    H = sweedler_h4(F)
    S = LinearMap((H.space,), (H.space,), dict(H.antipode.table), F)
    S.table[(2,)] = {(3,): F.one}
    return HopfAlgebraData("H4-broken", H.space, H.mult, H.unit, H.comult, H.counit, S)


def non_cocycle(H: HopfAlgebraData) -> LinearMap:
    """σ(h, h') = 1 for every pair of basis vectors: normal fails and so does the cocycle law."""
    V = H.space
    return LinearMap((V, V), (), {(i, j): {(): H.field.one} for i in range(H.dim) for j in range(H.dim)}, H.field)


NEGATIVE_WITNESSES = {
    "bad antipode": ("antipode left", "x: lhs=2*gx rhs=0"),
    "non-cocycle twist": ("left cocycle condition", "1⊗1⊗x: lhs=1 rhs=2"),
    "noncommutative trivial YD, braided": ("m∘τ = m", "g⊗x: lhs=-1*gx rhs=gx"),
}


def negative_controls(cfg: SuiteConfig) -> Report:
    r = Report("negative controls")
    F = cfg.field
    runs = []
    for _ in range(2):
        got = {}
        rep = verify_hopf_axioms(broken_antipode(F))
        got["bad antipode"] = rep.first_failure()
        H = sweedler_h4(F)
        c = cocycle_condition(H, non_cocycle(H), "left")
        got["non-cocycle twist"] = None if c.passed else c
        s = yd_fixture("trivial:sweedler4:ll", F)[0][1]
        got["noncommutative trivial YD, braided"] = check_braided_standard(s).first_failure()
        runs.append({k: (c.name, c.witness) if c else None for k, c in got.items()})
    for key, (check_name, witness) in NEGATIVE_WITNESSES.items():
        first = runs[0][key]
        r.flag(f"{key}: fails", first is not None, "no failure found")
        r.flag(f"{key}: deterministic", runs[0][key] == runs[1][key])
        r.flag(
            f"{key}: first failing check and minimal witness",
            first == (check_name, witness) if F == QQ else first is not None and first[0] == check_name,
            f"got {first}",
        )
    return r


@dataclass(frozen=True)
class Criterion:
    key: str
    title: str
    run: Callable[[SuiteConfig], Report]
    budget_s: float


CRITERIA = (
    Criterion("hopf", "Hopf kernel", hopf_kernel, 1.0),
    Criterion("canonical", "Canonical element", canonical_element_suite, 2.0),
    Criterion("doubles", "Doubles", doubles_suite, 60.0),
    Criterion("yd", "YD equivalences", yd_equivalences, 30.0),
    Criterion("dualities", "Double dualities", dualities, 30.0),
    Criterion("functors", "Equivalence functors", functors_suite, 10.0),
    Criterion("heisdouble", "Heisenberg algebra over the double", heisenberg_double_suite, 60.0),
    Criterion("negative", "Negative controls", negative_controls, 10.0),
)


def criterion(key: str) -> Criterion:
    for c in CRITERIA:
        if c.key == key:
            return c
    raise KeyError(key)


def run_criterion(key: str, cfg: SuiteConfig | None = None) -> Report:
    return criterion(key).run(cfg or SuiteConfig())
