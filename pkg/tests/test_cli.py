import io
import json
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopfyd.cli import ParseError, emit_algebra, emit_hopf, emit_yd, main, parse_algebra, parse_hopf, parse_yd
from hopfyd.doubles import heisenberg_double
from hopfyd.examples import HOPF_FIXTURES, hopf_fixture, yd_fixture
from hopfyd.linalg import QQ, Algebra, Field, LinearMap, Space, Tensor


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.mark.parametrize("field", [QQ, Field(7)], ids=str)
@pytest.mark.parametrize("name", HOPF_FIXTURES)
def test_hopf_round_trip(name, field):
    H = hopf_fixture(name, field)
    text = emit_hopf(H)
    back = parse_hopf(text)
    assert back.structure_equal(H) and back.labels == H.labels
    assert emit_hopf(back) == text


@given(st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)), st.fractions(-9, 9, max_denominator=5), max_size=12))
def test_algebra_text_round_trip_on_random_tables(entries):
    # any table (associative or not) must survive emit∘parse exactly
    V = Space("A", 3, ("a", "b", "c"))
    table = {}
    for (i, j, k), c in entries.items():
        table.setdefault((i, j), {})[(k,)] = QQ(c)
    A = Algebra.single(LinearMap((V, V), (V,), table, QQ), Tensor((V,), {(0,): 1}, QQ))
    text = emit_algebra(A)
    back = parse_algebra(text)
    assert back.mult == A.mult
    assert emit_algebra(back) == text


def test_heisenberg_algebra_round_trip():
    A = heisenberg_double(hopf_fixture("group:C2"))
    assert parse_algebra(emit_algebra(A)).mult == A.mult


@pytest.mark.parametrize(
    "name", ["adjoint:sweedler4:ll", "adjoint:group:S3:rl", "coideal:group:S3:sign", "trivial:sweedler4:lr"]
)
def test_yd_round_trip(name):
    for _, inst in yd_fixture(name):
        text = emit_yd(inst)
        back = parse_yd(text)
        assert back.same_as(inst)
        assert emit_yd(back) == text


H4_TEXT = emit_hopf(hopf_fixture("sweedler4"))


def mutate(old, new):
    assert old in H4_TEXT
    return H4_TEXT.replace(old, new, 1)


@pytest.mark.parametrize(
    "text,pos,msg",
    [
        ("", (1, 1), "format_version"),
        ("format_version 2\nkind hopf\n", (1, 16), "unsupported format version"),
        ("format_version 1\nkind algebra\n", (2, 6), "expected kind 'hopf'"),
        (H4_TEXT[:200], (17, 5), "'mult' takes 4 values"),
        ("__mult 0 1 1 1", (10, 8), "index 4 out of range"),
        ("__mult 1 0 1 1", (13, 12), "bad scalar '1.5'"),
        ("__dim 4", (5, 5), "bad integer 'four'"),
        ("__comult 2 1 2 1\ncomult 2 2 0 1", (24, 8), "repeated comult entry"),
        ("__basis 1 g x gx", (6, 12), "'basis' takes 4 values, got 3"),
        ("__antipode 0 0 1 0", (29, 1), "expected 4 antipode rows"),
        ("__unit 1 0 0 0", (7, 1), "unexpected key 'units'"),
    ],
)
def test_parse_errors_have_positions(text, pos, msg):
    if text.startswith("__"):
        old = text[2:]
        new = {
            "mult 0 1 1 1": "mult 0 4 1 1",
            "mult 1 0 1 1": "mult 1 0 1 1.5",
            "dim 4": "dim four",
            "comult 2 1 2 1\ncomult 2 2 0 1": "comult 2 1 2 1\ncomult 2 1 2 1",
            "basis 1 g x gx": "basis 1 g x",
            "antipode 0 0 1 0": "",
            "unit 1 0 0 0": "units 1 0 0 0",
        }[old]
        text = mutate(old, new)
    with pytest.raises(ParseError) as exc:
        parse_hopf(text, "h.hopf")
    assert (exc.value.line, exc.value.col) == pos, str(exc.value)
    assert msg in exc.value.msg
    assert str(exc.value).startswith(f"h.hopf:{pos[0]}:{pos[1]}:")


def test_zero_denominator_mod_p():
    text = mutate("mult 0 0 0 1", "mult 0 0 0 1/7")
    assert parse_hopf(text).mult.table[(0, 0)] == {(0,): QQ.parse("1/7")}
    with pytest.raises(ParseError, match="zero denominator"):
        parse_hopf(text, field=Field(7))


def test_yd_parse_errors():
    text = emit_yd(yd_fixture("adjoint:group:C2:ll")[0][1], "group:C2")
    with pytest.raises(ParseError, match="characterization"):
        parse_yd(text.replace("characterization standard", "characterization weird"))
    with pytest.raises(ParseError, match="never closed"):
        parse_yd(text.replace("end carrier\n", ""))
    with pytest.raises(ParseError, match="coaction characterization"):
        parse_yd(text + "alpha 0 0 0 1\n")
    with pytest.raises(ParseError, match="either as"):
        parse_yd(text.replace("hopf group:C2\n", ""))


def test_verify_commands(tmp_path):
    p = tmp_path / "h4.hopf"
    p.write_text(H4_TEXT, encoding="utf-8")
    code, out = run("verify", str(p))
    assert code == 0 and out.rstrip().endswith("passed")
    bad = tmp_path / "bad.hopf"
    bad.write_text(mutate("antipode 0 0 0 -1", "antipode 0 0 0 1"), encoding="utf-8")
    code, out = run("verify", str(bad))
    assert code == 1
    assert "FAIL  axioms/antipode left" in out and "witness: x: lhs=2*gx rhs=0" in out
    trunc = tmp_path / "trunc.hopf"
    trunc.write_text(H4_TEXT[:200], encoding="utf-8")
    assert run("verify", str(trunc))[0] == 2
    assert run("verify", str(tmp_path / "missing.hopf"))[0] == 2


def test_transform_dual_twice_is_byte_identical(tmp_path):
    a, b = tmp_path / "d.hopf", tmp_path / "dd.hopf"
    src = tmp_path / "h.hopf"
    src.write_text(H4_TEXT, encoding="utf-8")
    assert run("transform", str(src), "--op", "dual", "--out", str(a))[0] == 0
    assert run("transform", str(a), "--op", "dual", "--out", str(b))[0] == 0
    assert b.read_text(encoding="utf-8") == H4_TEXT


def test_transform_double_and_taipe_equals_radford_of_op(tmp_path):
    code, out = run("transform", "group:C2", "--op", "double:radford")
    assert code == 0 and "\ndim 4\n" in out
    assert parse_hopf(out).dim == 4
    _, taipe = run("transform", "sweedler4", "--op", "double:taipe")
    op = tmp_path / "op.hopf"
    run("transform", "sweedler4", "--op", "op", "--out", str(op))
    _, radford = run("transform", str(op), "--op", "double:radford")
    body = lambda t: [l for l in t.splitlines() if not l.startswith("name ")]
    assert body(taipe) == body(radford)


def test_transform_heisenberg_writes_algebra():
    code, out = run("transform", "group:C2", "--op", "heisenberg")
    assert code == 0 and out.startswith("format_version 1\nkind algebra\n")


def test_yd_check_commands():
    assert run("yd-check", "adjoint:sweedler4:ll", "--all")[0] == 0
    code, out = run("yd-check", "trivial:sweedler4", "--braided")
    assert code == 1 and "witness: g⊗x" in out
    code, out = run("yd-check", "heisdouble:group:C2")
    assert code == 0
    code, out = run("yd-check", "adjoint:sweedler4:lr", "--functor", "F")
    assert code == 0 and "functor F/F'∘F = Id" in out
    assert run("yd-check", "adjoint:sweedler4:ll", "--functor", "F")[0] == 1  # wrong source category
    assert run("yd-check", "nonsense:thing")[0] == 2


def test_yd_check_file(tmp_path):
    p = tmp_path / "x.yd"
    inst = yd_fixture("coideal:group:S3:sign")[1][1]
    p.write_text(emit_yd(inst), encoding="utf-8")
    code, out = run("yd-check", str(p), "--convert", "--braided", "--appendix-c")
    assert code == 0, out


def test_json_and_determinism():
    code, out = run("--json", "verify", "group:S3")
    doc = json.loads(out)
    assert code == 0 and doc["ok"] and all(c["status"] == "pass" for c in doc["checks"])
    assert run("--json", "verify", "group:S3")[1] == out


def test_field_flag_and_example_listing():
    code, out = run("--field", "Fp:7", "example", "sweedler4")
    assert code == 0 and "field Fp:7" in out and "antipode 0 0 0 6" in out
    code, out = run("example", "--list")
    assert code == 0 and "heisdouble:sweedler4" in out.split()
    assert run("--field", "Fp:8", "verify", "sweedler4")[0] == 2
    assert run("example", "heisdouble:sweedler4")[0] == 2


def test_max_dim_guard():
    from hopfyd import linalg

    old = linalg.MAX_DIM
    try:
        assert run("--max-dim", "8", "transform", "sweedler4", "--op", "double:radford")[0] == 2
    finally:
        linalg.set_max_dim(old)


def test_module_entry_point(tmp_path):
    r = subprocess.run([sys.executable, "-m", "hopfyd", "verify", "group:C2"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stderr == ""
    assert "== verify kC2 ==" in r.stdout
