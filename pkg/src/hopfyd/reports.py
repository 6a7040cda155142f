"""Pass/fail records with witnesses, shared by every verifier."""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .linalg import Field, Space, Tensor


@dataclass
class Check:
    name: str
    passed: bool
    witness: str | None = None
    anchor: str = ""

    def to_dict(self):
        d = {"check": self.name, "anchor": self.anchor, "status": "pass" if self.passed else "fail"}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass
class Report:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.ok

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def flag(self, name: str, passed: bool, witness: str | None = None, anchor: str = "") -> Check:
        return self.add(Check(name, bool(passed), None if passed else witness, anchor))

    def extend(self, other: "Report", prefix: str | None = None):
        pre = other.suite if prefix is None else prefix
        for c in other.checks:
            self.checks.append(Check(f"{pre}/{c.name}" if pre else c.name, c.passed, c.witness, c.anchor))
        return self

    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)

    def get(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def render(self, color: bool | None = None) -> str:
        if color is None:
            color = os.environ.get("HOPFYD_COLOR", "0") == "1"
        ok_s, bad_s = ("\x1b[32mPASS\x1b[0m", "\x1b[31mFAIL\x1b[0m") if color else ("PASS", "FAIL")
        width = max([len(c.name) for c in self.checks] + [10])
        lines = [f"== {self.suite} =="]
        for c in self.checks:
            line = f"{ok_s if c.passed else bad_s}  {c.name.ljust(width)}"
            if c.anchor:
                line += f"  [{c.anchor}]"
            lines.append(line.rstrip())
            if c.witness and not c.passed:
                lines.append(f"      witness: {c.witness}")
        n_ok = sum(c.passed for c in self.checks)
        lines.append(f"-- {n_ok}/{len(self.checks)} passed")
        return "\n".join(lines)

    def to_dict(self):
        return {"suite": self.suite, "ok": self.ok, "checks": [c.to_dict() for c in self.checks]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)


def basis_label(legs: Sequence[Space], idx: tuple) -> str:
    return "⊗".join(legs[k].labels[i] for k, i in enumerate(idx)) or "1"


def first_mismatch(
    legs: Sequence[Space],
    field: Field,
    lhs: Callable[[Tensor], Tensor],
    rhs: Callable[[Tensor], Tensor],
) -> str | None:
    """Witness text for the lexicographically first basis tuple where lhs ≠ rhs."""
    legs = tuple(legs)
    for idx in itertools.product(*(range(s.dim) for s in legs)):
        t = Tensor.basis(legs, idx, field)
        a, b = lhs(t), rhs(t)
        if a != b:
            return f"{basis_label(legs, idx)}: lhs={a.pretty()} rhs={b.pretty()}"
    return None


def compare(
    name: str,
    legs: Sequence[Space],
    field: Field,
    lhs: Callable[[Tensor], Tensor],
    rhs: Callable[[Tensor], Tensor],
    anchor: str = "",
) -> Check:
    w = first_mismatch(legs, field, lhs, rhs)
    return Check(name, w is None, w, anchor)
