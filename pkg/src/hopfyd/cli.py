"""Text formats and the ``hopfyd`` command line.

Files are line oriented.  The first line is ``format_version 1``, the second
``kind hopf|algebra|yd``.  Blank lines and lines starting with ``#`` are
ignored.  Scalars are always written as ``a`` or ``a/b``.  Emission sorts every
entry list, so emitting a parsed file reproduces it byte for byte.

A Hopf algebra file::

    format_version 1
    kind hopf
    name H4
    field Q
    dim 4
    basis 1 g x gx
    unit 1 0 0 0
    counit 1 1 0 0
    mult i j k c        # e_i e_j has coefficient c on e_k
    comult i j k c      # Δ(e_i) has coefficient c on e_j ⊗ e_k
    antipode c0 .. c3   # one row per basis vector: S(e_i)

An algebra file has the same header with only ``unit`` and ``mult``.  A YD
file names its characterization and variant, refers to a Hopf algebra either
by fixture name, by path, or inline between ``begin hopf`` and ``end hopf``,
gives the carrier inline between ``begin carrier`` and ``end carrier``, and
lists the two structure maps as ``action``/``coaction`` (standard) or
``alpha``/``beta`` (only-coaction) entries ``i j k c`` in the leg order fixed
by the variant.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import doubles, linalg
from .actions import LEFT, verify_algebra
from .examples import HOPF_FIXTURES, fixture_names, heisenberg_over_double_report, hopf_fixture, yd_fixture
from .hopf import HopfAlgebraData, InvalidStructure, coopposite, dual, op_cop, opposite, verify_hopf_axioms
from .linalg import QQ, Algebra, Field, LinearMap, Space, Tensor, field_from_tag
from .pairing import canonical, canonical_pairing, circ_u_report, slice_identities, verify_canonical_identities, verify_pairing
from .reports import Check, Report
from .yd import FUNCTORS, SUITES, CoactionYd, StandardYd, full_report, functor_report

FORMAT_VERSION = 1
SCALAR = re.compile(r"-?\d+(/\d+)?$")


class ParseError(ValueError):
    def __init__(self, line: int, col: int, msg: str, source: str = "<input>"):
        self.line, self.col, self.msg, self.source = line, col, msg, source
        super().__init__(f"{source}:{line}:{col}: {msg}")


@dataclass
class Line:
    no: int
    tokens: list[tuple[int, str]]  # (column, token), columns 1-based

    @property
    def key(self) -> str:
        return self.tokens[0][1]

    @property
    def args(self) -> list[tuple[int, str]]:
        return self.tokens[1:]

    def col(self, k: int = 0) -> int:
        return self.tokens[k][0] if k < len(self.tokens) else self.tokens[-1][0] + len(self.tokens[-1][1])

    def rest(self) -> str:
        return " ".join(t for _, t in self.args)


def tokenize(text: str) -> list[Line]:
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        toks = [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", raw)]
        out.append(Line(no, toks))
    return out


class _Body:
    """Key lookup over a block of lines with precise error positions."""

    def __init__(self, lines: list[Line], src: str, end_line: int):
        self.lines, self.src, self.end_line = lines, src, end_line

    def err(self, line: Line | None, col: int, msg: str):
        if line is None:
            return ParseError(self.end_line, 1, msg, self.src)
        return ParseError(line.no, col, msg, self.src)

    def single(self, key: str, required=True) -> Line | None:
        found = [l for l in self.lines if l.key == key]
        if len(found) > 1:
            raise self.err(found[1], 1, f"duplicate {key!r}")
        if not found:
            if required:
                raise self.err(None, 1, f"missing {key!r}")
            return None
        if not found[0].args:
            raise self.err(found[0], found[0].col(1), f"{key!r} needs a value")
        return found[0]

    def many(self, key: str) -> list[Line]:
        return [l for l in self.lines if l.key == key]

    def check_keys(self, allowed):
        for l in self.lines:
            if l.key not in allowed:
                raise self.err(l, 1, f"unexpected key {l.key!r}")

    def scalar(self, line: Line, k: int, F: Field):
        col, tok = line.tokens[k]
        if not SCALAR.match(tok):
            raise self.err(line, col, f"bad scalar {tok!r}")
        try:
            return F.parse(tok)
        except ZeroDivisionError:
            raise self.err(line, col, f"scalar {tok!r} has a zero denominator in {F}") from None

    def index(self, line: Line, k: int, bound: int):
        col, tok = line.tokens[k]
        if not tok.isdigit():
            raise self.err(line, col, f"bad index {tok!r}")
        i = int(tok)
        if i >= bound:
            raise self.err(line, col, f"index {i} out of range 0..{bound - 1}")
        return i

    def integer(self, line: Line, k: int) -> int:
        col, tok = line.tokens[k]
        if not tok.isdigit():
            raise self.err(line, col, f"bad integer {tok!r}")
        return int(tok)

    def arity(self, line: Line, n: int):
        if len(line.args) != n:
            raise self.err(line, line.col(min(len(line.tokens), n + 1)), f"{line.key!r} takes {n} values, got {len(line.args)}")

    def vector(self, key: str, n: int, F: Field) -> dict:
        line = self.single(key)
        self.arity(line, n)
        return {i: c for i in range(n) if (c := self.scalar(line, i + 1, F))}

    def entries(self, key: str, bounds: tuple[int, ...], F: Field) -> dict:
        """``key i j k c`` lines into {(i, j, k): c}, rejecting repeats."""
        out = {}
        for line in self.many(key):
            self.arity(line, len(bounds) + 1)
            idx = tuple(self.index(line, k + 1, b) for k, b in enumerate(bounds))
            if idx in out:
                raise self.err(line, line.col(1), f"repeated {key} entry {idx}")
            out[idx] = self.scalar(line, len(bounds) + 1, F)
        return out


def _header(lines: list[Line], kind: str, src: str) -> list[Line]:
    end = lines[-1].no if lines else 1
    if not lines or lines[0].key != "format_version":
        raise ParseError(lines[0].no if lines else 1, 1, "file must start with 'format_version'", src)
    v = lines[0]
    if len(v.args) != 1 or v.args[0][1] != str(FORMAT_VERSION):
        raise ParseError(v.no, v.col(1), f"unsupported format version (expected {FORMAT_VERSION})", src)
    if len(lines) < 2 or lines[1].key != "kind" or not lines[1].args:
        raise ParseError(lines[1].no if len(lines) > 1 else end, 1, "second line must be 'kind ...'", src)
    if lines[1].args[0][1] != kind:
        raise ParseError(lines[1].no, lines[1].col(1), f"expected kind {kind!r}, got {lines[1].args[0][1]!r}", src)
    return lines[2:]


def _field(b: _Body, override: Field | None) -> Field:
    line = b.single("field")
    try:
        F = field_from_tag(line.rest())
    except ValueError as exc:
        raise b.err(line, line.col(1), str(exc)) from None
    return override or F


def _basis(b: _Body) -> tuple[str, int, tuple[str, ...]]:
    name = b.single("name").rest()
    dl = b.single("dim")
    b.arity(dl, 1)
    n = b.integer(dl, 1)
    if n < 1:
        raise b.err(dl, dl.col(1), "dimension must be positive")
    if n > linalg.MAX_DIM:
        raise b.err(dl, dl.col(1), f"dim {n} exceeds the guard {linalg.MAX_DIM}; raise it with --max-dim")
    bl = b.single("basis")
    b.arity(bl, n)
    labels = tuple(t for _, t in bl.args)
    if len(set(labels)) != n:
        raise b.err(bl, bl.col(1), "duplicate basis labels")
    return name, n, labels


def _algebra_parts(b: _Body, F: Field):
    name, n, labels = _basis(b)
    V = Space(name, n, labels)
    unit = b.vector("unit", n, F)
    mult = b.entries("mult", (n, n, n), F)
    m = LinearMap((V, V), (V,), _group(mult), F)
    return V, m, Tensor((V,), {(i,): c for i, c in unit.items()}, F)


def _group(entries: dict, split: int = 2) -> dict:
    table: dict = {}
    for idx, c in entries.items():
        table.setdefault(idx[:split], {})[idx[split:]] = c
    return table


HOPF_KEYS = {"name", "field", "dim", "basis", "unit", "counit", "mult", "comult", "antipode"}
ALGEBRA_KEYS = {"name", "field", "dim", "basis", "unit", "mult"}


def _hopf_body(lines: list[Line], src: str, end: int, override: Field | None = None) -> HopfAlgebraData:
    b = _Body(lines, src, end)
    b.check_keys(HOPF_KEYS)
    F = _field(b, override)
    V, m, u = _algebra_parts(b, F)
    n = V.dim
    counit = b.vector("counit", n, F)
    comult = b.entries("comult", (n, n, n), F)
    rows = b.many("antipode")
    if len(rows) != n:
        raise b.err(rows[n] if len(rows) > n else None, 1, f"expected {n} antipode rows, got {len(rows)}")
    S = {}
    for i, row in enumerate(rows):
        b.arity(row, n)
        S[(i,)] = {(j,): self_c for j in range(n) if (self_c := b.scalar(row, j + 1, F))}
    try:
        return HopfAlgebraData(
            V.name,
            V,
            m,
            u,
            LinearMap((V,), (V, V), _group(comult, 1), F),
            LinearMap((V,), (), {(i,): {(): c} for i, c in counit.items()}, F),
            LinearMap((V,), (V,), S, F),
        )
    except InvalidStructure as exc:
        raise b.err(rows[0], 1, str(exc)) from None


def parse_hopf(text: str, src: str = "<input>", field: Field | None = None) -> HopfAlgebraData:
    lines = tokenize(text)
    return _hopf_body(_header(lines, "hopf", src), src, lines[-1].no if lines else 1, field)


def parse_algebra(text: str, src: str = "<input>", field: Field | None = None) -> Algebra:
    lines = tokenize(text)
    b = _Body(_header(lines, "algebra", src), src, lines[-1].no if lines else 1)
    b.check_keys(ALGEBRA_KEYS)
    F = _field(b, field)
    V, m, u = _algebra_parts(b, F)
    return Algebra.single(m, u)


def _blocks(lines: list[Line], b_err) -> tuple[list[Line], dict[str, tuple[list[Line], int]]]:
    """Split out ``begin NAME`` … ``end NAME`` blocks."""
    top, blocks, cur, start = [], {}, None, None
    for l in lines:
        if l.key == "begin":
            if cur is not None:
                raise b_err(l, 1, "nested block")
            if len(l.args) != 1:
                raise b_err(l, l.col(1), "'begin' takes a block name")
            cur, start = l.args[0][1], l
            if cur in blocks:
                raise b_err(l, l.col(1), f"duplicate block {cur!r}")
            blocks[cur] = ([], l.no)
        elif l.key == "end":
            if cur is None or len(l.args) != 1 or l.args[0][1] != cur:
                raise b_err(l, 1, f"unmatched 'end'")
            blocks[cur] = (blocks[cur][0], l.no)
            cur = None
        elif cur is not None:
            blocks[cur][0].append(l)
        else:
            top.append(l)
    if cur is not None:
        raise b_err(start, 1, f"block {cur!r} is never closed")
    return top, blocks


YD_KEYS = {"characterization", "variant", "hopf", "action", "coaction", "alpha", "beta"}


def parse_yd(text: str, src: str = "<input>", field: Field | None = None, base: Path | None = None):
    lines = tokenize(text)
    end = lines[-1].no if lines else 1
    body = _header(lines, "yd", src)
    b = _Body(body, src, end)
    top, blocks = _blocks(body, b.err)
    b = _Body(top, src, end)
    b.check_keys(YD_KEYS)
    unknown = set(blocks) - {"hopf", "carrier"}
    if unknown:
        raise b.err(None, 1, f"unknown block {sorted(unknown)[0]!r}")
    ch = b.single("characterization")
    char = ch.rest()
    if char not in ("standard", "coaction"):
        raise b.err(ch, ch.col(1), "characterization must be 'standard' or 'coaction'")
    vl = b.single("variant")
    v = vl.rest()
    if v not in ("ll", "lr", "rr", "rl"):
        raise b.err(vl, vl.col(1), "variant must be one of ll, lr, rr, rl")
    ref = b.single("hopf", required=False)
    if (ref is None) == ("hopf" not in blocks):
        raise b.err(ref, 1, "give the Hopf algebra either as 'hopf <fixture|path>' or as one 'begin hopf' block")
    if ref is not None:
        H = _resolve_hopf(ref.rest(), field, base, lambda msg: b.err(ref, ref.col(1), msg))
    else:
        hl, hend = blocks["hopf"]
        H = _hopf_body(hl, src, hend, field)
    F = H.field
    if "carrier" not in blocks:
        raise b.err(None, 1, "missing 'begin carrier' block")
    cl, cend = blocks["carrier"]
    cb = _Body(cl, src, cend)
    cb.check_keys(ALGEBRA_KEYS - {"field"})
    X, m, u = _algebra_parts(cb, F)
    carrier = Algebra.single(m, u)

    def binary(key, dom, cod):
        bounds = tuple(s.dim for s in dom + cod)
        table = _group(b.entries(key, bounds, F), len(dom))
        return LinearMap(dom, cod, table, F)

    if char == "standard":
        for k in ("alpha", "beta"):
            if b.many(k):
                raise b.err(b.many(k)[0], 1, f"{k!r} belongs to the coaction characterization")
        proto = StandardYd.__new__(StandardYd)
        proto.variant, proto.hopf = v, H
        V, T = H.space, proto.coaction_hopf.space
        act = binary("action", [V, X] if proto.action_side == LEFT else [X, V], [X])
        co = binary("coaction", [X], [T, X] if proto.coaction_side == LEFT else [X, T])
        return StandardYd(v, H, carrier, act, co)
    for k in ("action", "coaction"):
        if b.many(k):
            raise b.err(b.many(k)[0], 1, f"{k!r} belongs to the standard characterization")
    C = canonical(H)
    proto = CoactionYd.__new__(CoactionYd)
    proto.variant, proto.C = v, C
    A, K = proto.alpha_hopf.space, C.K.space
    al = binary("alpha", [X], [A, X] if proto.alpha_side == LEFT else [X, A])
    be = binary("beta", [X], [K, X] if proto.beta_side == LEFT else [X, K])
    return CoactionYd(v, C, carrier, al, be)


def _resolve_hopf(ref: str, field: Field | None, base: Path | None, err) -> HopfAlgebraData:
    if ref in HOPF_FIXTURES:
        return hopf_fixture(ref, field or QQ)
    p = Path(ref)
    if base is not None and not p.is_absolute():
        p = base / p
    try:
        return parse_hopf(p.read_text(encoding="utf-8"), str(p), field)
    except OSError as exc:
        raise err(f"cannot read Hopf file {ref!r}: {exc.strerror}") from None


# ---------------------------------------------------------------------------
# emission


def _check_label(lab: str):
    if not lab or any(ch.isspace() for ch in lab) or lab.startswith("#"):
        raise ValueError(f"basis label {lab!r} cannot be written (whitespace or leading '#')")


def _vector_line(key: str, t: Tensor, n: int, F: Field) -> str:
    return key + " " + " ".join(F.format(t.coeffs.get((i,), F.zero)) for i in range(n))


def _entry_lines(key: str, f: LinearMap) -> list[str]:
    F = f.field
    rows = []
    for k in sorted(f.table):
        for j in sorted(f.table[k]):
            rows.append(f"{key} {' '.join(map(str, k + j))} {F.format(f.table[k][j])}")
    return rows


def _space_lines(V: Space, name: str, field: Field | None = None) -> list[str]:
    for lab in V.labels:
        _check_label(lab)
    head = [f"name {name}"] + ([f"field {field.tag}"] if field else [])
    return head + [f"dim {V.dim}", "basis " + " ".join(V.labels)]


def _algebra_lines(A: Algebra, name: str, field: Field | None = None) -> list[str]:
    V = A.space
    return _space_lines(V, name, field) + [_vector_line("unit", A.unit, V.dim, A.field)] + _entry_lines("mult", A.mult)


def _hopf_lines(H: HopfAlgebraData) -> list[str]:
    F, n = H.field, H.dim
    out = _space_lines(H.space, H.name, F)
    out.append(_vector_line("unit", H.unit, n, F))
    e = Tensor((H.space,), {(i,): img[()] for (i,), img in H.counit.table.items()}, F)
    out.append(_vector_line("counit", e, n, F))
    out += _entry_lines("mult", H.mult) + _entry_lines("comult", H.comult)
    for row in H.antipode.matrix():
        out.append("antipode " + " ".join(F.format(c) for c in row))
    return out


def emit_hopf(H: HopfAlgebraData) -> str:
    return "\n".join([f"format_version {FORMAT_VERSION}", "kind hopf"] + _hopf_lines(H)) + "\n"


def emit_algebra(A: Algebra, name: str | None = None) -> str:
    head = [f"format_version {FORMAT_VERSION}", "kind algebra"]
    return "\n".join(head + _algebra_lines(A, name or A.space.name, A.field)) + "\n"


def emit_yd(inst, hopf_ref: str | None = None) -> str:
    """``hopf_ref`` writes a fixture reference instead of an inline block."""
    std = isinstance(inst, StandardYd)
    if not std and not inst.C.K.structure_equal(dual(inst.C.H)):
        raise ValueError("only instances over the canonical pairing of H and its dual can be written")
    H = inst.hopf
    out = [f"format_version {FORMAT_VERSION}", "kind yd", f"characterization {'standard' if std else 'coaction'}", f"variant {inst.variant}"]
    if hopf_ref is not None:
        out.append(f"hopf {hopf_ref}")
    else:
        out += ["begin hopf"] + _hopf_lines(H) + ["end hopf"]
    out += ["begin carrier"] + _algebra_lines(inst.carrier, inst.carrier.space.name) + ["end carrier"]
    if std:
        out += _entry_lines("action", inst.action) + _entry_lines("coaction", inst.coaction)
    else:
        out += _entry_lines("alpha", inst.alpha) + _entry_lines("beta", inst.beta)
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# commands


class UsageError(Exception):
    """Bad target name or unreadable file: exit status 2."""


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None


def load_hopf(target: str, field: Field | None) -> HopfAlgebraData:
    if target in HOPF_FIXTURES:
        return hopf_fixture(target, field or QQ)
    if not os.path.exists(target):
        raise UsageError(f"{target}: neither a Hopf fixture nor a file (fixtures: {', '.join(HOPF_FIXTURES)})")
    return parse_hopf(_read(target), target, field)


def _guarded(r: Report, name: str, fn):
    """Run a sub-suite; an exception becomes a failing row instead of a crash."""
    try:
        r.extend(fn(), name)
    except (ArithmeticError, ValueError, KeyError) as exc:
        r.flag(name, False, f"{type(exc).__name__}: {exc}")


def cmd_verify(H: HopfAlgebraData) -> Report:
    r = Report(f"verify {H.name}")
    r.extend(verify_hopf_axioms(H), "axioms")
    _guarded(r, "pairing", lambda: verify_pairing(canonical_pairing(H)))
    _guarded(r, "canonical element", lambda: verify_canonical_identities(canonical(H)))
    _guarded(r, "°U", lambda: circ_u_report(canonical(H)))
    _guarded(r, "slices", lambda: slice_identities(canonical(H)))
    return r


TRANSFORMS = ("dual", "op", "cop", "opcop", "heisenberg") + tuple(
    f"{w}:{k}" for w in ("double", "codouble") for k in doubles.KINDS
)


def transform(H: HopfAlgebraData, op: str):
    """Returns (text, verification report)."""
    if op == "heisenberg":
        A = doubles.heisenberg_double(H)
        return emit_algebra(A, f"Heis({H.name})"), verify_algebra(A, f"Heis({H.name})")
    simple = {"dual": dual, "op": opposite, "cop": coopposite, "opcop": op_cop}
    if op in simple:
        K = simple[op](H)
    else:
        what, _, kind = op.partition(":")
        K = (doubles.drinfeld_double if what == "double" else doubles.drinfeld_codouble)(H, kind)
    return emit_hopf(K), verify_hopf_axioms(K)


STD_SUITE_FLAGS = {"braided": "braided", "convert": "convert", "double_equiv": "double", "appendix_c": "appendix-c"}


def load_yd(target: str, field: Field | None) -> list:
    if target.split(":")[0] in ("adjoint", "coideal", "trivial"):
        try:
            return yd_fixture(target, field or QQ)
        except KeyError as exc:
            raise UsageError(f"unknown YD fixture {target!r}: {exc}") from None
    if not os.path.exists(target):
        raise UsageError(f"{target}: neither a YD fixture nor a file")
    inst = parse_yd(_read(target), target, field, Path(target).parent)
    return [(target, inst)]


def cmd_yd_check(target: str, args, field: Field | None) -> Report:
    if target.startswith("heisdouble:"):
        h = target.partition(":")[2]
        if h not in HOPF_FIXTURES:
            raise UsageError(f"unknown Hopf fixture {h!r}")
        return heisenberg_over_double_report(hopf_fixture(h, field or QQ))
    suites = set(SUITES) if args.all else {"yd"} | {s for flag, s in STD_SUITE_FLAGS.items() if getattr(args, flag)}
    r = Report(f"yd-check {target}")
    for label, inst in load_yd(target, field):
        sub = full_report(inst, sorted(suites))
        if args.functor:
            from .yd import functor_source

            kind, src = functor_source(args.functor)
            if (kind == "standard") == isinstance(inst, StandardYd) and inst.variant == src:
                sub.extend(functor_report(inst, args.functor), f"functor {args.functor}")
        r.extend(sub, label)
    if args.functor and not any("functor " in c.name for c in r.checks):
        r.flag(f"functor {args.functor} applies", False, "no instance of this target is in the functor's source category")
    return r


def _run_criterion(key: str, field_tag: str, fixtures: tuple[str, ...]):
    from .suite import SuiteConfig, run_criterion

    t = time.perf_counter()
    rep = run_criterion(key, SuiteConfig(field_from_tag(field_tag), fixtures))
    return rep, time.perf_counter() - t


def cmd_paper_suite(field: Field, fixtures: tuple[str, ...], jobs: int):
    from .suite import CRITERIA

    keys = [c.key for c in CRITERIA]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            futs = {k: ex.submit(_run_criterion, k, field.tag, fixtures) for k in keys}
            results = {k: f.result() for k, f in futs.items()}
    else:
        results = {k: _run_criterion(k, field.tag, fixtures) for k in keys}
    return [(c, *results[c.key]) for c in CRITERIA]


def traceability_table(rows) -> str:
    lines = []
    for crit, rep, dt in rows:
        for c in rep.checks:
            status = "PASS" if c.passed else "FAIL"
            anchor = c.anchor or "-"
            lines.append((crit.title, c.name, anchor, status, c.witness if not c.passed else ""))
    w0 = max([len(l[0]) for l in lines] + [9])
    w1 = max([len(l[1]) for l in lines] + [5])
    out = [f"{'criterion'.ljust(w0)}  {'check'.ljust(w1)}  status  anchor"]
    for t, n, a, s, wit in lines:
        out.append(f"{t.ljust(w0)}  {n.ljust(w1)}  {s}    {a}".rstrip())
        if wit:
            out.append(f"{''.ljust(w0)}  witness: {wit}")
    out.append("")
    for crit, rep, dt in rows:
        n_ok = sum(c.passed for c in rep.checks)
        out.append(f"{'PASS' if rep.ok else 'FAIL'}  {crit.title}: {n_ok}/{len(rep.checks)} checks")
    return "\n".join(out)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopfyd", description="Exact verification of Hopf algebra and Yetter-Drinfeld constructions.")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers for paper-suite")
    p.add_argument("--field", default=None, help="Q or Fp:<prime>; reinterprets fixtures and file scalars")
    p.add_argument("--max-dim", type=int, default=None, help=f"override the dimension guard ({linalg.MAX_DIM})")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="Hopf axioms, canonical pairing and canonical element")
    v.add_argument("target", help="a .hopf file or a Hopf fixture name")

    t = sub.add_parser("transform", help="build a new Hopf algebra (or Heisenberg algebra) file")
    t.add_argument("target")
    t.add_argument("--op", required=True, choices=TRANSFORMS)
    t.add_argument("--out", default=None, help="output path (default stdout)")

    y = sub.add_parser("yd-check", help="check a YD instance from a file or fixture")
    y.add_argument("target")
    y.add_argument("--braided", action="store_true")
    y.add_argument("--convert", action="store_true")
    y.add_argument("--functor", choices=FUNCTORS, default=None)
    y.add_argument("--double-equiv", action="store_true")
    y.add_argument("--appendix-c", action="store_true")
    y.add_argument("--all", action="store_true")

    s = sub.add_parser("paper-suite", help="run the whole acceptance matrix")
    s.add_argument("--fixture", action="append", default=[], help="restrict to a Hopf fixture (repeatable)")

    e = sub.add_parser("example", help="list fixtures or print one as a file")
    e.add_argument("name", nargs="?")
    e.add_argument("--list", action="store_true")
    return p


def _emit_example(name: str, field: Field | None) -> str:
    if name in HOPF_FIXTURES:
        return emit_hopf(hopf_fixture(name, field or QQ))
    if name.startswith("heisdouble:"):
        raise UsageError("heisdouble fixtures bundle several structures and have no file form")
    insts = load_yd(name, field)
    parts = name.split(":")
    ref = ":".join(parts[1:-1]) if parts[-1] in ("ll", "lr", "rr", "rl", "eps", "id", "sign") else ":".join(parts[1:])
    return emit_yd(insts[0][1], ref if ref in HOPF_FIXTURES else None)


def _finish(report: Report, as_json: bool, out) -> int:
    print(report.to_json() if as_json else report.render(), file=out)
    return 0 if report.ok else 1


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        field = field_from_tag(args.field) if args.field else None
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.max_dim:
        linalg.set_max_dim(args.max_dim)
    try:
        if args.command == "verify":
            return _finish(cmd_verify(load_hopf(args.target, field)), args.json, out)
        if args.command == "transform":
            H = load_hopf(args.target, field)
            text, rep = transform(H, args.op)
            if not rep.ok:
                print(rep.render(), file=sys.stderr)
                return 1
            if args.out:
                Path(args.out).write_text(text, encoding="utf-8")
            else:
                out.write(text)
            return 0
        if args.command == "yd-check":
            return _finish(cmd_yd_check(args.target, args, field), args.json, out)
        if args.command == "paper-suite":
            rows = cmd_paper_suite(field or QQ, tuple(args.fixture), max(args.jobs, 1))
            if args.json:
                import json

                doc = {
                    "field": (field or QQ).tag,
                    "ok": all(r.ok for _, r, _ in rows),
                    "criteria": [{"criterion": c.title, **r.to_dict()} for c, r, _ in rows],
                }
                print(json.dumps(doc, ensure_ascii=False, indent=2), file=out)
            else:
                print(traceability_table(rows), file=out)
            return 0 if all(r.ok for _, r, _ in rows) else 1
        if args.command == "example":
            if args.list or not args.name:
                print("\n".join(fixture_names()), file=out)
                return 0
            out.write(_emit_example(args.name, field))
            return 0
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, OSError, linalg.DimensionLimitExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
