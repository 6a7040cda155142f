"""Exact scalars and sparse multi-leg tensor calculus.

Every Sweedler-style formula elsewhere in the package is compiled into the
primitives here: tensors are sparse maps from multi-indices to exact scalars,
linear maps are sparse tables of basis images, and algebras multiply leg-wise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

MAX_DIM = 128


class DimensionLimitExceeded(ValueError):
    pass


class FieldMismatch(ValueError):
    pass


class LegMismatch(ValueError):
    pass


class NotInvertible(ArithmeticError):
    pass


class NoSolution:
    """Sentinel returned by :func:`linear_solve` when the system is inconsistent."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NoSolution"

    def __bool__(self):
        return False


NO_SOLUTION = NoSolution()


def set_max_dim(n: int) -> int:
    """Change the per-space dimension guard; returns the previous value."""
    global MAX_DIM
    old, MAX_DIM = MAX_DIM, int(n)
    return old


# --------------------------------------------------------------------------
# scalars


class Residue:
    """An element of the prime field F_p."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Residue):
            if other.p != self.p:
                raise FieldMismatch(f"F_{self.p} vs F_{other.p}")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.v, self.p)

    def __pos__(self):
        return self

    def inverse(self):
        if self.v == 0:
            raise ZeroDivisionError("zero residue")
        return Residue(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * Residue(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(o, self.p) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return (self.v - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"{self.v}"


@dataclass(frozen=True)
class Field:
    """The ground field: ``Field()`` is Q, ``Field(7)`` is F_7."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if self.p < 2 or any(self.p % d == 0 for d in range(2, int(self.p**0.5) + 1)):
                raise ValueError(f"{self.p} is not prime")

    @property
    def tag(self) -> str:
        return "Q" if self.p is None else f"Fp:{self.p}"

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def __call__(self, x):
        if self.p is None:
            if isinstance(x, Residue):
                raise FieldMismatch("residue used over Q")
            # integers stay plain ints: far cheaper than Fraction arithmetic
            if isinstance(x, int):
                return x
            x = Fraction(x)
            return x.numerator if x.denominator == 1 else x
        if isinstance(x, Residue):
            if x.p != self.p:
                raise FieldMismatch(f"F_{x.p} vs F_{self.p}")
            return x
        x = Fraction(x)
        if x.denominator % self.p == 0:
            raise ZeroDivisionError(f"denominator divisible by {self.p}")
        return Residue(x.numerator * pow(x.denominator, -1, self.p), self.p)

    def inv(self, x):
        if self.p is not None:
            return self(x).inverse()
        q = Fraction(1) / x
        return q.numerator if q.denominator == 1 else q

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def parse(self, s: str):
        s = s.strip()
        if "/" in s:
            a, b = s.split("/")
            return self(Fraction(int(a), int(b)))
        return self(int(s))

    def format(self, c) -> str:
        if isinstance(c, Residue):
            return str(c.v)
        c = Fraction(c)
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"

    def __str__(self):
        return "Q" if self.p is None else f"F{self.p}"


QQ = Field()


def field_from_tag(tag: str) -> Field:
    tag = tag.strip()
    if tag == "Q":
        return QQ
    for prefix in ("Fp:", "Fp(", "F"):
        if tag.startswith(prefix):
            return Field(int(tag[len(prefix):].rstrip(")")))
    raise ValueError(f"unknown field tag {tag!r}")


# --------------------------------------------------------------------------
# spaces and tensors


@dataclass(frozen=True)
class Space:
    name: str
    dim: int
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        if self.dim > MAX_DIM:
            raise DimensionLimitExceeded(
                f"space {self.name} has dim {self.dim} > guard {MAX_DIM}; raise it with --max-dim"
            )
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"e{i}" for i in range(self.dim)))
        if len(self.labels) != self.dim:
            raise ValueError("label count does not match dimension")
        if len(set(self.labels)) != self.dim:
            raise ValueError(f"duplicate labels in {self.name}")

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def renamed(self, name: str, relabel: Callable[[str], str] | None = None) -> "Space":
        labels = self.labels if relabel is None else tuple(relabel(l) for l in self.labels)
        return Space(name, self.dim, labels)


def product_space(name: str, a: Space, b: Space, sep: str = "⊗") -> Space:
    """Flattened a⊗b with index i*dim(b)+j."""
    labels = tuple(f"{x}{sep}{y}" for x in a.labels for y in b.labels)
    return Space(name, a.dim * b.dim, labels)


def _clean(coeffs: Mapping) -> dict:
    return {k: v for k, v in coeffs.items() if v}


class Tensor:
    """Element of a tensor product of spaces, stored sparsely without zeros."""

    __slots__ = ("legs", "coeffs", "field")

    def __init__(self, legs: Sequence[Space], coeffs: Mapping[tuple, object], field: Field):
        self.legs = tuple(legs)
        self.field = field
        self.coeffs = _clean(coeffs)

    @classmethod
    def zero(cls, legs, field):
        return cls(legs, {}, field)

    @classmethod
    def basis(cls, legs, index, field, coeff=1):
        return cls(legs, {tuple(index): field(coeff)}, field)

    @classmethod
    def scalar(cls, c, field):
        return cls((), {(): field(c)}, field)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.legs)

    def items(self):
        return sorted(self.coeffs.items())

    def _check(self, other: "Tensor"):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if self.dims != other.dims:
            raise LegMismatch(f"{self.dims} vs {other.dims}")

    def __add__(self, other: "Tensor") -> "Tensor":
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return Tensor(self.legs, out, self.field)

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self + (-other)

    def __neg__(self) -> "Tensor":
        return Tensor(self.legs, {k: -v for k, v in self.coeffs.items()}, self.field)

    def scale(self, c) -> "Tensor":
        c = self.field(c) if not isinstance(c, (Fraction, Residue)) else c
        return Tensor(self.legs, {k: c * v for k, v in self.coeffs.items()}, self.field)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.field == other.field and self.dims == other.dims and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.dims, tuple(self.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def with_legs(self, legs: Sequence[Space]) -> "Tensor":
        legs = tuple(legs)
        if tuple(s.dim for s in legs) != self.dims:
            raise LegMismatch("relabelling must keep dimensions")
        return Tensor(legs, self.coeffs, self.field)

    def coefficient(self, index) -> object:
        return self.coeffs.get(tuple(index), self.field.zero)

    def pretty(self) -> str:
        if not self.coeffs:
            return "0"
        if not self.legs:
            return self.field.format(self.coeffs[()])
        parts = []
        for k, v in self.items():
            lab = "⊗".join(self.legs[i].labels[j] for i, j in enumerate(k)) or "1"
            c = self.field.format(v)
            parts.append(lab if c == "1" else f"{c}*{lab}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Tensor({self.pretty()})"


def tensor_product(a: Tensor, b: Tensor) -> Tensor:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    out = {}
    for i, x in a.coeffs.items():
        for j, y in b.coeffs.items():
            out[i + j] = x * y
    return Tensor(a.legs + b.legs, out, a.field)


def permute_legs(a: Tensor, perm: Sequence[int]) -> Tensor:
    """Move leg ``k`` to position ``perm[k]``."""
    perm = tuple(perm)
    n = len(a.legs)
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise LegMismatch(f"bad permutation {perm} for {n} legs")
    legs = [None] * n
    for k, p in enumerate(perm):
        legs[p] = a.legs[k]
    out = {}
    for idx, v in a.coeffs.items():
        new = [0] * n
        for k, p in enumerate(perm):
            new[p] = idx[k]
        out[tuple(new)] = v
    return Tensor(legs, out, a.field)


def reorder(a: Tensor, order: Sequence[int]) -> Tensor:
    """New leg ``k`` is old leg ``order[k]``."""
    perm = [0] * len(order)
    for k, o in enumerate(order):
        perm[o] = k
    return permute_legs(a, perm)


def embed_legs(
    a: Tensor, positions: Sequence[int], ambient: Sequence[Space], units: Mapping[int, Tensor]
) -> Tensor:
    """Place ``a`` on ``positions`` of ``ambient`` with units on the other legs."""
    positions = tuple(positions)
    if len(positions) != len(a.legs):
        raise LegMismatch("one position per leg required")
    for p, s in zip(positions, a.legs):
        if ambient[p].dim != s.dim:
            raise LegMismatch(f"leg dim {s.dim} does not fit ambient position {p}")
    others = [i for i in range(len(ambient)) if i not in positions]
    for i in others:
        if i not in units:
            raise LegMismatch(f"ambient leg {i} needs a unit element")
    t = a
    for i in others:
        t = tensor_product(t, units[i])
    order_src = list(positions) + others
    perm = order_src  # leg k of t goes to ambient position order_src[k]
    return permute_legs(t, perm).with_legs(ambient)


# --------------------------------------------------------------------------
# linear maps


class LinearMap:
    """A linear map between tensor products, as sparse images of basis tuples."""

    __slots__ = ("domain", "codomain", "table", "field")

    def __init__(self, domain, codomain, table: Mapping[tuple, Mapping[tuple, object]], field: Field):
        self.domain = tuple(domain)
        self.codomain = tuple(codomain)
        self.field = field
        clean = {}
        for k, img in table.items():
            img = _clean(img)
            if img:
                clean[tuple(k)] = img
        self.table = clean

    @classmethod
    def from_function(cls, domain, codomain, fn: Callable[[tuple], Tensor | Mapping], field: Field):
        domain = tuple(domain)
        table = {}
        for idx in itertools.product(*(range(s.dim) for s in domain)):
            img = fn(idx)
            if isinstance(img, Tensor):
                img = img.coeffs
            table[idx] = img
        return cls(domain, codomain, table, field)

    @classmethod
    def identity(cls, spaces, field):
        spaces = tuple(spaces)
        return cls.from_function(spaces, spaces, lambda i: {i: field.one}, field)

    @classmethod
    def from_matrix(cls, domain: Space, codomain: Space, rows, field):
        """``rows[i][j]`` is the coefficient of basis j in the image of basis i."""
        table = {(i,): {(j,): field(c) for j, c in enumerate(r)} for i, r in enumerate(rows)}
        return cls((domain,), (codomain,), table, field)

    @property
    def domain_dims(self):
        return tuple(s.dim for s in self.domain)

    @property
    def codomain_dims(self):
        return tuple(s.dim for s in self.codomain)

    def image(self, idx) -> Tensor:
        return Tensor(self.codomain, self.table.get(tuple(idx), {}), self.field)

    def __call__(self, a: Tensor) -> Tensor:
        return apply(self, a)

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return (
            self.field == other.field
            and self.domain_dims == other.domain_dims
            and self.codomain_dims == other.codomain_dims
            and self.table == other.table
        )

    def __hash__(self):
        return hash((self.domain_dims, self.codomain_dims, len(self.table)))

    def compose(self, g: "LinearMap") -> "LinearMap":
        """``self ∘ g``."""
        if g.codomain_dims != self.domain_dims:
            raise LegMismatch(f"cannot compose {self.domain_dims} after {g.codomain_dims}")
        table = {}
        for k, img in g.table.items():
            table[k] = apply(self, Tensor(g.codomain, img, g.field)).coeffs
        return LinearMap(g.domain, self.codomain, table, self.field)

    def kron(self, other: "LinearMap") -> "LinearMap":
        table = {}
        for i, a in self.table.items():
            for j, b in other.table.items():
                table[i + j] = {x + y: u * v for x, u in a.items() for y, v in b.items()}
        return LinearMap(self.domain + other.domain, self.codomain + other.codomain, table, self.field)

    def with_spaces(self, domain=None, codomain=None) -> "LinearMap":
        return LinearMap(domain or self.domain, codomain or self.codomain, self.table, self.field)

    def matrix(self) -> list[list]:
        """Dense matrix for single-leg maps, rows indexed by domain basis."""
        if len(self.domain) != 1 or len(self.codomain) != 1:
            raise LegMismatch("matrix() needs single-leg domain and codomain")
        n, m = self.domain[0].dim, self.codomain[0].dim
        z = self.field.zero
        rows = [[z] * m for _ in range(n)]
        for (i,), img in self.table.items():
            for (j,), c in img.items():
                rows[i][j] = c
        return rows

    def transpose(self) -> "LinearMap":
        """Transpose with respect to the stored bases (dual-basis convention)."""
        table: dict = {}
        for k, img in self.table.items():
            for j, c in img.items():
                table.setdefault(j, {})[k] = c
        return LinearMap(self.codomain, self.domain, table, self.field)

    def __add__(self, other: "LinearMap") -> "LinearMap":
        table = {k: dict(v) for k, v in self.table.items()}
        for k, img in other.table.items():
            row = table.setdefault(k, {})
            for j, c in img.items():
                row[j] = row.get(j, 0) + c
        return LinearMap(self.domain, self.codomain, table, self.field)

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return self + other.scale(-1)

    def scale(self, c) -> "LinearMap":
        c = self.field(c)
        return LinearMap(
            self.domain, self.codomain, {k: {j: c * v for j, v in img.items()} for k, img in self.table.items()}, self.field
        )

    def __repr__(self):
        return f"LinearMap({self.domain_dims} -> {self.codomain_dims}, {len(self.table)} rows)"


def apply(f: LinearMap, a: Tensor) -> Tensor:
    if a.dims != f.domain_dims:
        raise LegMismatch(f"map expects {f.domain_dims}, got {a.dims}")
    if a.field != f.field:
        raise FieldMismatch(f"{a.field} vs {f.field}")
    out: dict = {}
    table = f.table
    for idx, c in a.coeffs.items():
        img = table.get(idx)
        if not img:
            continue
        for j, v in img.items():
            out[j] = out.get(j, 0) + c * v
    return Tensor(f.codomain, out, f.field)


def apply_at(f: LinearMap, a: Tensor, pos: int) -> Tensor:
    """Apply ``f`` to the consecutive legs starting at ``pos``."""
    n = len(f.domain)
    if tuple(s.dim for s in a.legs[pos : pos + n]) != f.domain_dims:
        raise LegMismatch(f"map expects {f.domain_dims} at leg {pos}, got {a.dims}")
    legs = a.legs[:pos] + f.codomain + a.legs[pos + n :]
    out: dict = {}
    table = f.table
    for idx, c in a.coeffs.items():
        img = table.get(idx[pos : pos + n])
        if not img:
            continue
        pre, post = idx[:pos], idx[pos + n :]
        for j, v in img.items():
            key = pre + j + post
            out[key] = out.get(key, 0) + c * v
    return Tensor(legs, out, a.field)


def contract(a: Tensor, pos_a: int, b: Tensor, pos_b: int, form: LinearMap) -> Tensor:
    """Pair leg ``pos_a`` of ``a`` with leg ``pos_b`` of ``b`` through a bilinear form."""
    t = tensor_product(a, b)
    j = len(a.legs) + pos_b
    order = [i for i in range(len(t.legs)) if i not in (pos_a, j)] + [pos_a, j]
    t = reorder(t, order)
    return apply_at(form, t, len(t.legs) - 2)


# --------------------------------------------------------------------------
# algebras


class Algebra:
    """A unital algebra on a single space, or leg-wise on a tensor product of them."""

    def __init__(self, factors: Sequence["_Factor"], field: Field):
        self.factors = tuple(factors)
        self.field = field
        self.legs = tuple(f.space for f in self.factors)
        self._tabs = [f.tab for f in self.factors]

    @classmethod
    def single(cls, mult: LinearMap, unit: Tensor) -> "Algebra":
        return cls([_Factor(mult, unit)], mult.field)

    @property
    def space(self) -> Space:
        if len(self.legs) != 1:
            raise LegMismatch("multi-leg algebra has no single space")
        return self.legs[0]

    @property
    def mult(self) -> LinearMap:
        if len(self.factors) != 1:
            raise LegMismatch("mult map is only stored for single-leg algebras")
        return self.factors[0].mult

    @property
    def unit(self) -> Tensor:
        t = Tensor.scalar(1, self.field)
        for f in self.factors:
            t = tensor_product(t, f.unit)
        return t

    one = unit

    @property
    def dim(self) -> int:
        d = 1
        for s in self.legs:
            d *= s.dim
        return d

    def basis(self):
        for idx in itertools.product(*(range(s.dim) for s in self.legs)):
            yield idx

    def element(self, idx, c=1) -> Tensor:
        return Tensor.basis(self.legs, idx, self.field, c)

    def mul(self, x: Tensor, y: Tensor) -> Tensor:
        return multiply(self, x, y)

    def opposite(self, suffix="^op") -> "Algebra":
        return Algebra([f.opposite(suffix) for f in self.factors], self.field)

    def __matmul__(self, other: "Algebra") -> "Algebra":
        return Algebra(self.factors + other.factors, self.field)

    def is_commutative(self) -> bool:
        for i in self.basis():
            for j in self.basis():
                if i < j and self.mul(self.element(i), self.element(j)) != self.mul(self.element(j), self.element(i)):
                    return False
        return True

    def left_mult_map(self, w: Tensor) -> LinearMap:
        return LinearMap.from_function(self.legs, self.legs, lambda i: self.mul(w, self.element(i)), self.field)

    def right_mult_map(self, w: Tensor) -> LinearMap:
        return LinearMap.from_function(self.legs, self.legs, lambda i: self.mul(self.element(i), w), self.field)


class _Factor:
    __slots__ = ("mult", "unit", "space", "tab")

    def __init__(self, mult: LinearMap, unit: Tensor):
        if len(mult.domain) != 2 or len(mult.codomain) != 1:
            raise LegMismatch("multiplication must be a map X⊗X → X")
        self.mult = mult
        self.unit = unit
        self.space = mult.codomain[0]
        self.tab = {(k[0], k[1]): [(j[0], c) for j, c in img.items()] for k, img in mult.table.items()}

    def opposite(self, suffix):
        sp = self.space.renamed(self.space.name + suffix)
        table = {(j, i): img for (i, j), img in self.mult.table.items()}
        return _Factor(LinearMap((sp, sp), (sp,), table, self.mult.field), self.unit.with_legs((sp,)))


def tensor_algebra(*algs: Algebra) -> Algebra:
    factors = []
    for a in algs:
        factors.extend(a.factors)
    return Algebra(factors, algs[0].field)


def multiply(A: Algebra, x: Tensor, y: Tensor) -> Tensor:
    dims = tuple(s.dim for s in A.legs)
    if x.dims != dims or y.dims != dims:
        raise LegMismatch(f"algebra legs {dims}, got {x.dims} and {y.dims}")
    tabs = A._tabs
    n = len(tabs)
    out: dict = {}
    if n == 1:
        tab = tabs[0]
        for (i,), a in x.coeffs.items():
            for (j,), b in y.coeffs.items():
                terms = tab.get((i, j))
                if terms:
                    ab = a * b
                    for k, c in terms:
                        out[(k,)] = out.get((k,), 0) + ab * c
        return Tensor(A.legs, out, A.field)
    for ix, a in x.coeffs.items():
        for iy, b in y.coeffs.items():
            lists = []
            for l in range(n):
                terms = tabs[l].get((ix[l], iy[l]))
                if not terms:
                    break
                lists.append(terms)
            else:
                ab = a * b
                for combo in itertools.product(*lists):
                    key = tuple(k for k, _ in combo)
                    c = ab
                    for _, v in combo:
                        c = c * v
                    out[key] = out.get(key, 0) + c
    return Tensor(A.legs, out, A.field)


def invert_element(A: Algebra, w: Tensor) -> Tensor:
    """Two-sided inverse of ``w`` found by solving ``w·z = 1`` and checking ``z·w = 1``."""
    one = A.unit
    z = linear_solve(A.left_mult_map(w), one)
    if z is NO_SOLUTION:
        raise NotInvertible(f"no right inverse for {w.pretty()}")
    if multiply(A, z, w) != one:
        raise NotInvertible(f"right inverse of {w.pretty()} is not a left inverse")
    return z


def ad_conjugate(A: Algebra, w: Tensor, x: Tensor, w_inv: Tensor | None = None) -> Tensor:
    if w_inv is None:
        w_inv = invert_element(A, w)
    return multiply(A, multiply(A, w, x), w_inv)


def ad_map(A: Algebra, w: Tensor, w_inv: Tensor | None = None) -> LinearMap:
    """Ad(w) as a linear map on the algebra's legs."""
    if w_inv is None:
        w_inv = invert_element(A, w)
    return LinearMap.from_function(A.legs, A.legs, lambda i: ad_conjugate(A, w, A.element(i), w_inv), A.field)


# --------------------------------------------------------------------------
# exact elimination


def _eliminate(rows: list[dict], field: Field, rhs: list | None = None):
    """Reduced row echelon form of sparse rows (dict col → value), in place.

    Returns the pivot list ``[(row, col)]``; when ``rhs`` is given it is
    reduced alongside, and ``None`` is returned if the system is inconsistent.
    """
    pivots = []
    pivot_row_of_col: dict[int, int] = {}
    done = []
    for r in range(len(rows)):
        row = rows[r]
        b = rhs[r] if rhs is not None else None
        # pivot rows are kept fully reduced, so a single pass suffices
        for col in [c for c in row if c in pivot_row_of_col]:
            c = row.get(col)
            if not c:
                continue
            pr = pivot_row_of_col[col]
            for k, v in rows[pr].items():
                nv = row.get(k, 0) - c * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
            if rhs is not None:
                b = b - c * rhs[pr]
        if not row:
            if rhs is not None and b:
                return None
            continue
        col = min(row)
        inv = field.inv(row[col])
        for k in row:
            row[k] = row[k] * inv
        if rhs is not None:
            rhs[r] = b * inv
        # back-substitute into previous pivot rows
        for pr in done:
            prow = rows[pr]
            c = prow.get(col)
            if c:
                for k, v in row.items():
                    nv = prow.get(k, 0) - c * v
                    if nv:
                        prow[k] = nv
                    else:
                        prow.pop(k, None)
                if rhs is not None:
                    rhs[pr] = rhs[pr] - c * rhs[r]
        pivot_row_of_col[col] = r
        pivots.append((r, col))
        done.append(r)
    return pivots


def solve_rows(rows: list[dict], rhs: list, ncols: int, field: Field):
    """Solve sparse ``rows · z = rhs``; returns a dict solution or NO_SOLUTION."""
    rows = [dict(r) for r in rows]
    rhs = list(rhs)
    pivots = _eliminate(rows, field, rhs)
    if pivots is None:
        return NO_SOLUTION
    sol = {}
    for r, col in pivots:
        if rhs[r]:
            sol[col] = rhs[r]
    return sol


def kernel_rows(rows: list[dict], ncols: int, field: Field) -> list[dict]:
    """Basis of the null space of sparse ``rows``, one dict per vector."""
    rows = [dict(r) for r in rows]
    pivots = _eliminate(rows, field)
    pivot_cols = {col: r for r, col in pivots}
    basis = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        vec = {free: field.one}
        for col, r in pivot_cols.items():
            c = rows[r].get(free)
            if c:
                vec[col] = -c
        basis.append(vec)
    return basis


def _map_rows(M: LinearMap):
    dom = list(itertools.product(*(range(s.dim) for s in M.domain)))
    col_of = {d: i for i, d in enumerate(dom)}
    rows: dict = {}
    for d, img in M.table.items():
        c = col_of[d]
        for j, v in img.items():
            rows.setdefault(j, {})[c] = v
    return dom, rows


def linear_solve(M: LinearMap, b: Tensor):
    """A solution ``z`` of ``M(z) = b`` or :data:`NO_SOLUTION`."""
    if b.dims != M.codomain_dims:
        raise LegMismatch(f"rhs legs {b.dims} vs codomain {M.codomain_dims}")
    dom, rows = _map_rows(M)
    keys = sorted(set(rows) | set(b.coeffs))
    sol = solve_rows([rows.get(k, {}) for k in keys], [b.coefficient(k) for k in keys], len(dom), M.field)
    if sol is NO_SOLUTION:
        return NO_SOLUTION
    return Tensor(M.domain, {dom[c]: v for c, v in sol.items()}, M.field)


def kernel_basis(M: LinearMap) -> list[Tensor]:
    dom, rows = _map_rows(M)
    vecs = kernel_rows([rows[k] for k in sorted(rows)], len(dom), M.field)
    return [Tensor(M.domain, {dom[c]: v for c, v in vec.items()}, M.field) for vec in vecs]


def rank(vectors: Iterable[Tensor], field: Field) -> int:
    rows = [{k: v for k, v in t.coeffs.items()} for t in vectors]
    keyset = sorted({k for r in rows for k in r})
    col_of = {k: i for i, k in enumerate(keyset)}
    rows = [{col_of[k]: v for k, v in r.items()} for r in rows]
    return len(_eliminate(rows, field) or [])


def invert_map(f: LinearMap) -> LinearMap:
    """Inverse of a bijective linear map, column by column."""
    if f.domain_dims != f.codomain_dims:
        raise NotInvertible("non-square map")
    dom, rows = _map_rows(f)
    cod = list(itertools.product(*(range(s.dim) for s in f.codomain)))
    keys = cod
    table = {}
    base_rows = [rows.get(k, {}) for k in keys]
    if rank([Tensor(f.domain, {dom[c]: v for c, v in rows.get(k, {}).items()}, f.field) for k in keys], f.field) != len(dom):
        raise NotInvertible("singular map")
    for j in cod:
        rhs = [f.field.one if k == j else f.field.zero for k in keys]
        sol = solve_rows(base_rows, rhs, len(dom), f.field)
        if sol is NO_SOLUTION:
            raise NotInvertible("singular map")
        table[j] = {dom[c]: v for c, v in sol.items()}
    return LinearMap(f.codomain, f.domain, table, f.field)


def swap_map(a: Space, b: Space, field: Field) -> LinearMap:
    return LinearMap.from_function((a, b), (b, a), lambda i: {(i[1], i[0]): field.one}, field)


def fuse_legs(a: Tensor, pos: int, P: Space) -> Tensor:
    """Merge legs ``pos, pos+1`` into the flattened product space ``P``."""
    d2 = a.legs[pos + 1].dim
    if a.legs[pos].dim * d2 != P.dim:
        raise LegMismatch(f"cannot fuse {a.dims[pos:pos + 2]} into dim {P.dim}")
    legs = a.legs[:pos] + (P,) + a.legs[pos + 2 :]
    out = {}
    for idx, v in a.coeffs.items():
        out[idx[:pos] + (idx[pos] * d2 + idx[pos + 1],) + idx[pos + 2 :]] = v
    return Tensor(legs, out, a.field)


def split_leg(a: Tensor, pos: int, A: Space, B: Space) -> Tensor:
    """Inverse of :func:`fuse_legs`."""
    if A.dim * B.dim != a.legs[pos].dim:
        raise LegMismatch(f"cannot split dim {a.legs[pos].dim} into {A.dim}x{B.dim}")
    legs = a.legs[:pos] + (A, B) + a.legs[pos + 1 :]
    out = {}
    for idx, v in a.coeffs.items():
        i, j = divmod(idx[pos], B.dim)
        out[idx[:pos] + (i, j) + idx[pos + 1 :]] = v
    return Tensor(legs, out, a.field)


# small combinators for writing Sweedler formulas as pipelines on tensors


def at(f: LinearMap, pos: int = 0):
    return lambda t: apply_at(f, t, pos)


def perm(*order: int):
    """Pipeline step: new leg k is old leg ``order[k]``."""
    return lambda t: reorder(t, order)


def lmul(A: Algebra, w: Tensor):
    return lambda t: multiply(A, w, t)


def rmul(A: Algebra, w: Tensor):
    return lambda t: multiply(A, t, w)


def pipe(t: Tensor, *steps) -> Tensor:
    for s in steps:
        t = s(t)
    return t


def as_map(domain, codomain, fn: Callable[[Tensor], Tensor], field: Field) -> LinearMap:
    """Tabulate a linear function given on tensors."""
    domain = tuple(domain)
    return LinearMap.from_function(domain, codomain, lambda i: fn(Tensor.basis(domain, i, field)), field)
