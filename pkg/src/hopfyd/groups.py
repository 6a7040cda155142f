"""Finite groups as Cayley tables, and the built-in ones used as fixtures."""

from __future__ import annotations

import itertools
from dataclasses import dataclass


class InvalidGroupTable(ValueError):
    pass


@dataclass(frozen=True)
class GroupPresentation:
    order: int
    cayley: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]
    identity: int
    labels: tuple[str, ...]
    name: str = "G"

    def __post_init__(self):
        n = self.order
        if len(self.cayley) != n or any(len(r) != n for r in self.cayley):
            raise InvalidGroupTable("table is not order x order")
        if len(self.labels) != n or len(set(self.labels)) != n:
            raise InvalidGroupTable("need one distinct label per element")
        if any(not 0 <= v < n for r in self.cayley for v in r):
            raise InvalidGroupTable("entry out of range")
        e = self.identity
        for a in range(n):
            if self.cayley[e][a] != a or self.cayley[a][e] != a:
                raise InvalidGroupTable(f"{self.labels[e]} is not an identity")
            if self.cayley[a][self.inverse[a]] != e or self.cayley[self.inverse[a]][a] != e:
                raise InvalidGroupTable(f"bad inverse for {self.labels[a]}")
        for a, b, c in itertools.product(range(n), repeat=3):
            if self.cayley[self.cayley[a][b]][c] != self.cayley[a][self.cayley[b][c]]:
                raise InvalidGroupTable(f"not associative at {self.labels[a]},{self.labels[b]},{self.labels[c]}")

    def mul(self, a: int, b: int) -> int:
        return self.cayley[a][b]

    def is_abelian(self) -> bool:
        return all(self.cayley[a][b] == self.cayley[b][a] for a in range(self.order) for b in range(self.order))


def from_multiplication(name: str, elements: list, op, labels: list[str]) -> GroupPresentation:
    idx = {g: i for i, g in enumerate(elements)}
    table = tuple(tuple(idx[op(a, b)] for b in elements) for a in elements)
    n = len(elements)
    e = next(i for i in range(n) if all(table[i][j] == j for j in range(n)))
    inv = tuple(next(j for j in range(n) if table[i][j] == e) for i in range(n))
    return GroupPresentation(n, table, inv, e, tuple(labels), name)


def cyclic(n: int) -> GroupPresentation:
    labels = ["1", "g"] + [f"g{k}" for k in range(2, n)]
    return from_multiplication(f"C{n}", list(range(n)), lambda a, b: (a + b) % n, labels[:n])


def klein_four() -> GroupPresentation:
    els = [(0, 0), (1, 0), (0, 1), (1, 1)]
    return from_multiplication("V4", els, lambda a, b: ((a[0] + b[0]) % 2, (a[1] + b[1]) % 2), ["1", "a", "b", "ab"])


def _cycle_label(p: tuple[int, ...]) -> str:
    seen, parts = set(), []
    for s in range(len(p)):
        if s in seen or p[s] == s:
            continue
        cyc, k = [], s
        while k not in seen:
            seen.add(k)
            cyc.append(str(k + 1))
            k = p[k]
        parts.append("(" + "".join(cyc) + ")")
    return "".join(parts) or "e"


def symmetric3() -> GroupPresentation:
    els = list(itertools.permutations(range(3)))
    # (p*q)(i) = p(q(i))
    return from_multiplication("S3", els, lambda p, q: tuple(p[q[i]] for i in range(3)), [_cycle_label(p) for p in els])


BUILTIN = {
    "C2": lambda: cyclic(2),
    "C3": lambda: cyclic(3),
    "C4": lambda: cyclic(4),
    "V4": klein_four,
    "S3": symmetric3,
}


def builtin_group(name: str) -> GroupPresentation:
    try:
        return BUILTIN[name]()
    except KeyError:
        raise KeyError(f"unknown group {name!r}; choose from {', '.join(BUILTIN)}") from None
