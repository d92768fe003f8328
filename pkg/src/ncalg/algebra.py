"""Finite-dimensional algebras given by structure constants, and their elements.

The multiplication table is stored as ``constants[k][l][p]``, the coefficient
of ``e_p`` in the product ``e_k e_l``.  Coordinates are either exact
:class:`fractions.Fraction` values (the default backend) or Python floats.
"""
from __future__ import annotations

import functools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from numbers import Rational
from typing import Iterable, Sequence, Union

from .errors import (
    AlgebraMismatchError,
    AssociativityError,
    MissingUnitError,
    ParseError,
    ShapeError,
    UnitAxiomError,
)

Scalar = Union[Fraction, float]

FLOAT_TOL = 1e-12


def parse_scalar(value, backend: str = "rational") -> Scalar:
    """Convert an int, float, ``"p/q"`` string or Fraction to a backend scalar."""
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if backend == "float":
        if isinstance(value, str):
            return float(Fraction(value.strip()))
        return float(value)
    if backend != "rational":
        raise ValueError(f"unknown scalar backend {backend!r}")
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"non-finite scalar {value!r}")
        # floats in a rational document are read by their shortest repr, so 0.1 -> 1/10
        return Fraction(repr(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, Rational):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a scalar")


def is_scalar(value) -> bool:
    return isinstance(value, (int, Fraction, float)) and not isinstance(value, bool)


def exact_sqrt(value: Scalar) -> Scalar:
    """Square root that stays a Fraction when ``value`` is a rational square."""
    if value < 0:
        raise ValueError("square root of a negative scalar")
    if isinstance(value, Fraction) or isinstance(value, int):
        value = Fraction(value)
        num, den = value.numerator, value.denominator
        rn, rd = math.isqrt(num), math.isqrt(den)
        if rn * rn == num and rd * rd == den:
            return Fraction(rn, rd)
        return math.sqrt(value)
    return math.sqrt(value)


def _uses_floats(values: Iterable[Scalar]) -> bool:
    return any(isinstance(v, float) for v in values)


def _close(a: Scalar, b: Scalar, tol: float) -> bool:
    if tol == 0:
        return a == b
    return abs(a - b) <= tol


@dataclass(frozen=True, eq=False)
class AlgebraSpec:
    """An n-dimensional algebra over the scalars, given by its multiplication table."""

    dim: int
    basis: tuple[str, ...]
    constants: tuple
    unit: int | None = None
    associative: bool = False
    name: str = ""
    _table: dict = field(init=False, repr=False)

    def __post_init__(self):
        n = self.dim
        if not isinstance(n, int) or n <= 0:
            raise ShapeError(f"dim must be a positive integer, got {n!r}")
        if len(self.basis) != n:
            raise ShapeError(f"basis has {len(self.basis)} labels, expected {n}")
        if len(set(self.basis)) != n:
            raise ShapeError(f"basis labels are not distinct: {list(self.basis)}")
        consts = _freeze_constants(self.constants, n)
        object.__setattr__(self, "constants", consts)
        object.__setattr__(self, "basis", tuple(self.basis))
        if self.unit is not None and not (0 <= self.unit < n):
            raise ShapeError(f"unit index {self.unit} out of range for dim {n}")
        table = {}
        for k, l in product(range(n), repeat=2):
            terms = tuple((p, c) for p, c in enumerate(consts[k][l]) if c != 0)
            if terms:
                table[k, l] = terms
        object.__setattr__(self, "_table", table)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, AlgebraSpec):
            return NotImplemented
        return (self.dim, self.basis, self.unit, self.constants) == (
            other.dim, other.basis, other.unit, other.constants)

    def __hash__(self):
        return hash((self.dim, self.basis, self.unit, self.constants))

    @property
    def exact(self) -> bool:
        return not _uses_floats(self._flat_constants())

    def _flat_constants(self):
        return (c for plane in self.constants for row in plane for c in row)

    def constant(self, p: int, k: int, l: int) -> Scalar:
        """C^p_{kl}: coefficient of e_p in e_k e_l."""
        return self.constants[k][l][p]

    # element factories

    def element(self, coords: Sequence, backend: str | None = None) -> Element:
        if backend is None:
            coords = tuple(c if isinstance(c, (Fraction, float)) else parse_scalar(c) for c in coords)
        else:
            coords = tuple(parse_scalar(c, backend) for c in coords)
        return Element(self, coords)

    def zero(self) -> Element:
        return Element(self, (Fraction(0),) * self.dim)

    def basis_element(self, index: int) -> Element:
        coords = [Fraction(0)] * self.dim
        coords[index] = Fraction(1)
        return Element(self, tuple(coords))

    def one(self) -> Element:
        if self.unit is None:
            raise MissingUnitError(f"algebra {self.name or '<unnamed>'} has no declared unit")
        return self.basis_element(self.unit)

    def scalar(self, value) -> Element:
        if not isinstance(value, float):
            value = parse_scalar(value)
        return self.one() * value

    def label_index(self, label: str) -> int:
        return self.basis.index(label)

    # validation

    def check_unit(self) -> None:
        """Raise UnitAxiomError unless e_u e_k = e_k e_u = e_k for the declared unit u."""
        if self.unit is None:
            return
        tol = 0 if self.exact else FLOAT_TOL
        u = self.unit
        for k, p in product(range(self.dim), repeat=2):
            want = 1 if k == p else 0
            left = self.constants[u][k][p]
            if not _close(left, want, tol):
                raise UnitAxiomError(f"C^{p}_{{{u}{k}}} = {left}, unit axiom requires {want}")
            right = self.constants[k][u][p]
            if not _close(right, want, tol):
                raise UnitAxiomError(f"C^{p}_{{{k}{u}}} = {right}, unit axiom requires {want}")

    def associativity_violations(self, tol: float | None = None):
        """Yield (i, j, k, p) wherever (e_i e_j) e_k and e_i (e_j e_k) differ in coordinate p."""
        if tol is None:
            tol = 0 if self.exact else FLOAT_TOL
        n = self.dim
        C = self.constants
        for i, j, k in product(range(n), repeat=3):
            for p in range(n):
                lhs = sum(C[i][j][q] * C[q][k][p] for q in range(n))
                rhs = sum(C[j][k][q] * C[i][q][p] for q in range(n))
                if not _close(lhs, rhs, tol):
                    yield i, j, k, p

    def check_associative(self) -> None:
        for i, j, k, p in self.associativity_violations():
            raise AssociativityError(
                f"(e{i} e{j}) e{k} != e{i} (e{j} e{k}) in coordinate {p}")

    def with_constant(self, p: int, k: int, l: int, value) -> AlgebraSpec:
        """Copy of this spec with C^p_{kl} replaced; no axioms are re-checked."""
        consts = [[list(row) for row in plane] for plane in self.constants]
        consts[k][l][p] = value
        return AlgebraSpec(self.dim, self.basis, consts, self.unit, False, self.name)

    def to_document(self) -> dict:
        return {
            "name": self.name,
            "dim": self.dim,
            "basis": list(self.basis),
            "unit": self.unit,
            "associative": self.associative,
            "constants": [[[scalar_to_json(c) for c in row] for row in plane]
                          for plane in self.constants],
        }


def _freeze_constants(constants, n: int) -> tuple:
    if len(constants) != n:
        raise ShapeError(f"constants has {len(constants)} planes, expected {n}")
    planes = []
    for k, plane in enumerate(constants):
        if isinstance(plane, (str, bytes)) or not hasattr(plane, "__len__") or len(plane) != n:
            raise ShapeError(f"constants[{k}] must have {n} rows")
        rows = []
        for l, row in enumerate(plane):
            if isinstance(row, (str, bytes)) or not hasattr(row, "__len__") or len(row) != n:
                raise ShapeError(f"constants[{k}][{l}] must have {n} entries")
            rows.append(tuple(c if isinstance(c, (Fraction, float)) else parse_scalar(c) for c in row))
        planes.append(tuple(rows))
    return tuple(planes)


def scalar_to_json(value: Scalar):
    """Integers stay integers, other rationals become ``"p/q"``, floats pass through."""
    if isinstance(value, float):
        return value + 0.0  # no -0.0 in output
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Element:
    """An A-number: coordinates relative to the algebra's basis."""

    algebra: AlgebraSpec
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.algebra.dim:
            raise ShapeError(
                f"element has {len(self.coords)} coordinates, algebra dim is {self.algebra.dim}")

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.coords == other.coords and self.algebra == other.algebra

    def __hash__(self):
        return hash(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, index):
        return self.coords[index]

    def __iter__(self):
        return iter(self.coords)

    def __bool__(self):
        return any(c != 0 for c in self.coords)

    def __neg__(self):
        return Element(self.algebra, tuple(-c for c in self.coords))

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        _same_algebra(self, other)
        return Element(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        _same_algebra(self, other)
        return Element(self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __mul__(self, other):
        if isinstance(other, Element):
            return mul(self, other)
        if is_scalar(other):
            return Element(self.algebra, tuple(c * other for c in self.coords))
        return NotImplemented

    def __rmul__(self, other):
        if is_scalar(other):
            return Element(self.algebra, tuple(other * c for c in self.coords))
        return NotImplemented

    def __truediv__(self, other):
        if is_scalar(other):
            if isinstance(other, int):
                other = Fraction(other)
            return Element(self.algebra, tuple(c / other for c in self.coords))
        return NotImplemented

    def __repr__(self):
        return f"Element({format_element(self)})"

    @property
    def exact(self) -> bool:
        return not _uses_floats(self.coords)

    def to_float(self) -> Element:
        return Element(self.algebra, tuple(float(c) for c in self.coords))

    def isclose(self, other: Element, tol: float = 1e-10) -> bool:
        _same_algebra(self, other)
        return max(abs(a - b) for a, b in zip(self.coords, other.coords)) <= tol

    def norm(self) -> float:
        """Euclidean norm of the coordinate vector."""
        return math.sqrt(sum(float(c) ** 2 for c in self.coords))

    def to_json(self) -> list:
        return [scalar_to_json(c) for c in self.coords]


def format_element(x: Element) -> str:
    labels = x.algebra.basis
    parts = []
    for label, c in zip(labels, x.coords):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if x.algebra.unit is not None and label == labels[x.algebra.unit]:
            body = str(mag)
        elif mag == 1:
            body = label
        else:
            body = f"{mag}{label}" if label.isalpha() else f"{mag}*{label}"
        parts.append((sign, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _same_algebra(x: Element, y: Element) -> None:
    if x.algebra is not y.algebra and x.algebra != y.algebra:
        raise AlgebraMismatchError(
            f"elements belong to different algebras ({x.algebra.name!r} vs {y.algebra.name!r})")


def mul(x: Element, y: Element) -> Element:
    """(xy)^p = sum over k, l of C^p_{kl} x^k y^l."""
    _same_algebra(x, y)
    alg = x.algebra
    out = [0] * alg.dim
    xs, ys = x.coords, y.coords
    table = alg._table
    for k, xk in enumerate(xs):
        if xk == 0:
            continue
        for l, yl in enumerate(ys):
            if yl == 0:
                continue
            terms = table.get((k, l))
            if terms is None:
                continue
            w = xk * yl
            for p, c in terms:
                out[p] += c * w
    return Element(alg, tuple(v if isinstance(v, (Fraction, float)) else Fraction(v) for v in out))


def linear_combine(terms: Iterable[tuple[Scalar, Element]]) -> Element:
    terms = list(terms)
    if not terms:
        raise ValueError("linear_combine needs at least one term")
    result = None
    for coeff, x in terms:
        scaled = x * coeff
        result = scaled if result is None else result + scaled
    return result


def commutator(x: Element, y: Element) -> Element:
    return mul(x, y) - mul(y, x)


def associator(x: Element, y: Element, z: Element) -> Element:
    return mul(mul(x, y), z) - mul(x, mul(y, z))


@functools.cache
def builtin_quaternion() -> AlgebraSpec:
    n = 4
    C = [[[0] * n for _ in range(n)] for _ in range(n)]
    for k in range(n):
        C[0][k][k] = 1
        C[k][0][k] = 1
    for k in (1, 2, 3):
        C[k][k][0] = -1
    # i j = k, j k = i, k i = j and the anticommuted signs
    for a, b, c in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        C[a][b][c] = 1
        C[b][a][c] = -1
    return AlgebraSpec(4, ("1", "i", "j", "k"), C, unit=0, associative=True, name="quaternion")


@functools.cache
def builtin_complex() -> AlgebraSpec:
    C = [[[1, 0], [0, 1]], [[0, 1], [-1, 0]]]
    return AlgebraSpec(2, ("1", "i"), C, unit=0, associative=True, name="complex")


BUILTINS = {"quaternion": builtin_quaternion, "complex": builtin_complex}


def load_algebra(document: str | dict, check: bool = True) -> AlgebraSpec:
    """Build and validate an AlgebraSpec from its JSON document (text or parsed dict).

    With ``check`` the unit axioms are verified when a unit is declared, and
    associativity is verified exhaustively on basis triples when the document
    sets ``"associative": true``.
    """
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(document, dict):
        raise ShapeError("algebra document must be a JSON object")
    for key in ("dim", "constants"):
        if key not in document:
            raise ShapeError(f"algebra document lacks {key!r}")
    dim = document["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int):
        raise ShapeError(f"dim must be an integer, got {dim!r}")
    basis = document.get("basis") or [f"e{i}" for i in range(dim)]
    unit = document.get("unit")
    if unit is not None and (isinstance(unit, bool) or not isinstance(unit, int)):
        raise ShapeError(f"unit must be an integer or null, got {unit!r}")
    try:
        spec = AlgebraSpec(
            dim=dim,
            basis=tuple(str(b) for b in basis),
            constants=document["constants"],
            unit=unit,
            associative=bool(document.get("associative", False)),
            name=str(document.get("name", "")),
        )
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, ShapeError):
            raise
        raise ShapeError(f"bad constants entry: {exc}") from None
    if check:
        spec.check_unit()
        if spec.associative:
            spec.check_associative()
    return spec


def load_algebra_file(path) -> AlgebraSpec:
    with open(path, encoding="utf-8") as fh:
        return load_algebra(fh.read())
