"""Polynomials in one variable x over an algebra, with coefficients on both sides of x.

A monomial of degree k is the chain ``a0 x a1 x ... x ak``; coefficients can
not be moved past x.  Two polynomials are equal when, degree by degree,
their canonical tensors agree: the degree-k part is the sum over monomials
of the outer products ``a0 (x) a1 (x) ... (x) ak`` of coefficient coordinates.
Tensors are kept sparse (index tuple -> scalar), so equality does not depend
on how a polynomial happens to be written down.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .algebra import AlgebraSpec, Element, _same_algebra, format_element, is_scalar, mul, parse_scalar
from .errors import (
    AlgebraMismatchError,
    DegreeError,
    NotRepresentableError,
    SingularDivisorError,
    TensorTooLargeError,
)
from .linalg import rank, solve_affine

# dense export limit: degree 6 over the quaternions
MAX_DENSE_ENTRIES = 4 ** 7


@dataclass(frozen=True)
class Monomial:
    """The chain ``coeffs[0] x coeffs[1] x ... x coeffs[-1]``."""

    coeffs: tuple[Element, ...]

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if not coeffs:
            raise ValueError("a monomial needs at least one coefficient")
        for c in coeffs[1:]:
            _same_algebra(coeffs[0], c)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def algebra(self) -> AlgebraSpec:
        return self.coeffs[0].algebra

    def is_zero(self) -> bool:
        return not all(self.coeffs)

    def evaluate(self, x0: Element) -> Element:
        value = self.coeffs[0]
        for a in self.coeffs[1:]:
            value = mul(mul(value, x0), a)
        return value

    def __mul__(self, other: Monomial) -> Monomial:
        # the inner coefficients merge: (... a_m)(b_0 ...) = ... (a_m b_0) ...
        merged = mul(self.coeffs[-1], other.coeffs[0])
        return Monomial(self.coeffs[:-1] + (merged,) + other.coeffs[1:])

    def tensor(self) -> dict:
        entries = {(i,): v for i, v in enumerate(self.coeffs[0].coords) if v != 0}
        for a in self.coeffs[1:]:
            nz = [(i, v) for i, v in enumerate(a.coords) if v != 0]
            entries = {idx + (i,): w * v for idx, w in entries.items() for i, v in nz}
        return entries

    def to_json(self) -> list:
        return [a.to_json() for a in self.coeffs]


def _add_into(acc: dict, entries: dict) -> None:
    for idx, v in entries.items():
        acc[idx] = acc.get(idx, 0) + v


@dataclass(frozen=True, eq=False)
class NcPolynomial:
    algebra: AlgebraSpec
    monomials: tuple[Monomial, ...] = ()

    def __post_init__(self):
        kept = []
        for m in self.monomials:
            if not isinstance(m, Monomial):
                m = Monomial((m,)) if isinstance(m, Element) else Monomial(tuple(m))
            if m.algebra != self.algebra:
                raise AlgebraMismatchError("monomial belongs to a different algebra")
            if not m.is_zero():
                kept.append(m)
        object.__setattr__(self, "monomials", tuple(kept))

    @cached_property
    def tensors(self) -> dict[int, dict[tuple, object]]:
        """Sparse canonical tensors keyed by degree; zero entries and empty degrees dropped."""
        acc: dict[int, dict] = {}
        for m in self.monomials:
            _add_into(acc.setdefault(m.degree, {}), m.tensor())
        out = {}
        for k, entries in acc.items():
            entries = {idx: v for idx, v in entries.items() if v != 0}
            if entries:
                out[k] = entries
        return out

    @property
    def degree(self) -> int:
        """Highest degree with a nonzero canonical tensor; -1 for the zero polynomial."""
        return max(self.tensors, default=-1)

    def is_zero(self) -> bool:
        return not self.tensors

    def __eq__(self, other):
        if not isinstance(other, NcPolynomial):
            return NotImplemented
        if self.algebra != other.algebra:
            return False
        return self.tensors == other.tensors

    __hash__ = None

    def isclose(self, other: NcPolynomial, tol: float = 1e-10) -> bool:
        diff = (self - other).tensors
        return all(abs(v) <= tol for entries in diff.values() for v in entries.values())

    def __call__(self, x0: Element) -> Element:
        return evaluate(self, x0)

    def __neg__(self):
        return NcPolynomial(self.algebra, tuple(
            Monomial((-m.coeffs[0],) + m.coeffs[1:]) for m in self.monomials))

    def __add__(self, other):
        other = _coerce(other, self.algebra)
        if other is None:
            return NotImplemented
        return poly_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other, self.algebra)
        if other is None:
            return NotImplemented
        return poly_add(self, -other)

    def __rsub__(self, other):
        other = _coerce(other, self.algebra)
        if other is None:
            return NotImplemented
        return poly_add(other, -self)

    def __mul__(self, other):
        other = _coerce(other, self.algebra)
        if other is None:
            return NotImplemented
        return poly_mul(self, other)

    def __rmul__(self, other):
        other = _coerce(other, self.algebra)
        if other is None:
            return NotImplemented
        return poly_mul(other, self)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = constant(self.algebra.one())
        for _ in range(exponent):
            result = poly_mul(result, self)
        return result

    def __repr__(self):
        if not self.monomials:
            return "NcPolynomial(0)"
        return "NcPolynomial(" + " + ".join(_format_monomial(m) for m in self.monomials) + ")"

    def leading_tensor(self) -> dict:
        return self.tensors.get(self.degree, {})

    def canonical_monomials(self) -> list[Monomial]:
        """One monomial per nonzero tensor entry: T[i0..ik] e_i0 x e_i1 ... x e_ik."""
        alg = self.algebra
        basis = [alg.basis_element(i) for i in range(alg.dim)]
        out = []
        for k in sorted(self.tensors):
            for idx, v in sorted(self.tensors[k].items()):
                out.append(Monomial((basis[idx[0]] * v,) + tuple(basis[i] for i in idx[1:])))
        return out

    def to_float(self) -> NcPolynomial:
        return NcPolynomial(self.algebra, tuple(
            Monomial(tuple(a.to_float() for a in m.coeffs)) for m in self.monomials))

    def to_json(self) -> list:
        return [m.to_json() for m in self.monomials]

    @classmethod
    def from_json(cls, data, algebra: AlgebraSpec, backend: str = "rational") -> NcPolynomial:
        return cls(algebra, tuple(
            Monomial(tuple(algebra.element(c, backend) for c in mono)) for mono in data))


def _format_monomial(m: Monomial) -> str:
    return " x ".join(_short(a) for a in m.coeffs)


def _short(a: Element) -> str:
    text = format_element(a)
    return text if " " not in text else f"({text})"


def _coerce(value, algebra: AlgebraSpec) -> NcPolynomial | None:
    if isinstance(value, NcPolynomial):
        if value.algebra != algebra:
            raise AlgebraMismatchError("polynomials belong to different algebras")
        return value
    if isinstance(value, Element):
        if value.algebra != algebra:
            raise AlgebraMismatchError("element belongs to a different algebra")
        return constant(value)
    if is_scalar(value):
        return constant(algebra.scalar(value))
    return None


def variable(algebra: AlgebraSpec) -> NcPolynomial:
    """The polynomial ``1 x 1``."""
    one = algebra.one()
    return NcPolynomial(algebra, (Monomial((one, one)),))


def constant(value: Element) -> NcPolynomial:
    return NcPolynomial(value.algebra, (Monomial((value,)),))


def poly_from_monomials(monomials: Iterable, algebra: AlgebraSpec | None = None) -> NcPolynomial:
    """Build a polynomial from Monomials, bare Elements (degree 0) or coefficient sequences."""
    items = []
    for m in monomials:
        if isinstance(m, Element):
            m = Monomial((m,))
        elif not isinstance(m, Monomial):
            m = Monomial(tuple(m))
        items.append(m)
    if algebra is None:
        if not items:
            raise ValueError("cannot infer the algebra of an empty monomial list")
        algebra = items[0].algebra
    return NcPolynomial(algebra, tuple(items))


def canonical_tensor(p: NcPolynomial, k: int) -> np.ndarray:
    """Dense degree-k tensor of shape (n,) * (k + 1)."""
    n = p.algebra.dim
    size = n ** (k + 1)
    if size > MAX_DENSE_ENTRIES:
        raise TensorTooLargeError(f"degree {k} over dimension {n} needs {size} entries")
    entries = p.tensors.get(k, {})
    exact = all(not isinstance(v, float) for v in entries.values())
    if exact:
        out = np.empty((n,) * (k + 1), dtype=object)
        out.fill(Fraction(0))
    else:
        out = np.zeros((n,) * (k + 1), dtype=float)
    for idx, v in entries.items():
        out[idx] = v
    return out


def poly_add(p: NcPolynomial, q: NcPolynomial) -> NcPolynomial:
    if p.algebra != q.algebra:
        raise AlgebraMismatchError("polynomials belong to different algebras")
    return NcPolynomial(p.algebra, p.monomials + q.monomials)


def poly_mul(p: NcPolynomial, q: NcPolynomial) -> NcPolynomial:
    if p.algebra != q.algebra:
        raise AlgebraMismatchError("polynomials belong to different algebras")
    return NcPolynomial(p.algebra, tuple(a * b for a in p.monomials for b in q.monomials))


def evaluate(p: NcPolynomial, x0: Element) -> Element:
    """Substitute x0 for every occurrence of x and multiply out left to right."""
    if x0.algebra != p.algebra:
        raise AlgebraMismatchError("evaluation point belongs to a different algebra")
    total = p.algebra.zero()
    for m in p.monomials:
        total = total + m.evaluate(x0)
    return total


def lam_mul(p: NcPolynomial, q: NcPolynomial) -> NcPolynomial:
    """Product in the convention where x commutes with every coefficient.

    Both factors are first collected into left-coefficient form sum a_i x^i
    (a0 x a1 ... x ak contributes a0 a1 ... ak to degree k), then
    (sum a_i x^i)(sum b_j x^j) = sum a_i b_j x^(i+j).  Substitution is not a
    homomorphism for this product unless the point is central.
    """
    if p.algebra != q.algebra:
        raise AlgebraMismatchError("polynomials belong to different algebras")
    left_p, left_q = _left_coefficients(p), _left_coefficients(q)
    one = p.algebra.one()
    monos = []
    for i, a in left_p.items():
        for j, b in left_q.items():
            monos.append(Monomial((mul(a, b),) + (one,) * (i + j)))
    return NcPolynomial(p.algebra, tuple(monos))


def _left_coefficients(p: NcPolynomial) -> dict[int, Element]:
    out: dict[int, Element] = {}
    for m in p.monomials:
        c = m.coeffs[0]
        for a in m.coeffs[1:]:
            c = mul(c, a)
        out[m.degree] = out[m.degree] + c if m.degree in out else c
    return out


# expansions of (x + a)^2, (x + a)^3 and (x + a)(x + b), written out monomial by monomial

def expand_square(a: Element) -> NcPolynomial:
    one = a.algebra.one()
    return poly_from_monomials([
        (one, one, one),
        (a, one),
        (one, a),
        (mul(a, a),),
    ], a.algebra)


def expand_cube(a: Element) -> NcPolynomial:
    one = a.algebra.one()
    a2 = mul(a, a)
    return poly_from_monomials([
        (one, one, one, one),
        (one, one, a),
        (one, a, one),
        (a, one, one),
        (one, a2),
        (a, a),
        (a2, one),
        (mul(a2, a),),
    ], a.algebra)


def expand_prod(a: Element, b: Element) -> NcPolynomial:
    _same_algebra(a, b)
    one = a.algebra.one()
    return poly_from_monomials([
        (one, one, one),
        (one, b),
        (a, one),
        (mul(a, b),),
    ], a.algebra)


def identity_b2_minus_a2(a: Element, b: Element, mirrored: bool = False) -> tuple[Element, Element]:
    """Return (b^2 - a^2, (b - a) b + a (b - a)).

    With ``mirrored`` the right side is b (b - a) + (b - a) a instead.
    """
    _same_algebra(a, b)
    lhs = mul(b, b) - mul(a, a)
    d = b - a
    if mirrored:
        rhs = mul(b, d) + mul(d, a)
    else:
        rhs = mul(d, b) + mul(a, d)
    return lhs, rhs


def build_question_poly(a: Element, b: Element, c: Element) -> NcPolynomial:
    """(x - b)(x - a) + (x - a)(x - c); always vanishes at x = a."""
    _same_algebra(a, b)
    _same_algebra(a, c)
    x = variable(a.algebra)
    return (x - b) * (x - a) + (x - a) * (x - c)


VIETE_PLACEMENTS = ("left", "middle", "right")


def viete_expand(c: Element, x1: Element, x2: Element, placement: str = "left") -> NcPolynomial:
    """Monic quadratic with roots x1 and x2 built from the split c + d = 1.

    ``left``:   c (x - x1)(x - x2) + d (x - x2)(x - x1)
    ``middle``: (x - x1) c (x - x2) + (x - x2) d (x - x1)
    ``right``:  (x - x1)(x - x2) c + (x - x2)(x - x1) d
    """
    _same_algebra(c, x1)
    _same_algebra(c, x2)
    alg = c.algebra
    d = alg.one() - c
    x = variable(alg)
    f1, f2 = x - x1, x - x2
    if placement == "left":
        return c * (f1 * f2) + d * (f2 * f1)
    if placement == "middle":
        return f1 * c * f2 + f2 * d * f1
    if placement == "right":
        return (f1 * f2) * c + (f2 * f1) * d
    raise ValueError(f"placement must be one of {VIETE_PLACEMENTS}, got {placement!r}")


@dataclass(frozen=True)
class DivisionResult:
    """dividend = sum(prefix(x) * divisor(x) * right) + remainder."""

    quotient_terms: tuple[tuple[Monomial, Element], ...]
    remainder: Element
    divisor: NcPolynomial

    def recompose(self) -> NcPolynomial:
        alg = self.divisor.algebra
        total = constant(self.remainder)
        for prefix, right in self.quotient_terms:
            term = NcPolynomial(alg, (prefix,)) * self.divisor * constant(right)
            total = total + term
        return total

    def quotient_json(self) -> list:
        return [{"prefix": prefix.to_json(), "right": right.to_json()}
                for prefix, right in self.quotient_terms]


def _divide_monic(r: NcPolynomial, c: Element) -> tuple[list, Element]:
    terms = []
    remainder = r.algebra.zero()
    for m in r.monomials:
        coeffs = m.coeffs
        while len(coeffs) > 1:
            # a0 x ... a_{k-1} x a_k = [a0 x ... a_{k-1}] (x - c) a_k + a0 x ... (a_{k-1} c a_k)
            terms.append((Monomial(coeffs[:-1]), coeffs[-1]))
            coeffs = coeffs[:-2] + (mul(mul(coeffs[-2], c), coeffs[-1]),)
        remainder = remainder + coeffs[0]
    return terms, remainder


def divide_linear(r: NcPolynomial, c: Element | None = None, *,
                  p0: Element | None = None, p1=None) -> DivisionResult:
    """Divide ``r`` by ``x - c``, or by ``p1(x) + p0`` for a degree-1 tensor p1.

    ``p1`` is an (n, n) array: p1(x) = sum T[i, j] e_i x e_j.  It must be
    invertible as a linear map of the algebra, and its inverse must itself be
    a degree-1 tensor; the two failures raise different errors.
    """
    alg = r.algebra
    if c is not None:
        if p0 is not None or p1 is not None:
            raise ValueError("give either c or (p0, p1), not both")
        if c.algebra != alg:
            raise AlgebraMismatchError("divisor belongs to a different algebra")
        x = variable(alg)
        terms, remainder = _divide_monic(r, c)
        return DivisionResult(tuple(terms), remainder, x - c)

    if p1 is None:
        raise ValueError("divide_linear needs c or p1")
    if p0 is None:
        p0 = alg.zero()
    T = _tensor_matrix(p1, alg.dim)
    inverse = _tensor_inverse(T, alg)
    divisor = _degree_one_poly(T, alg) + constant(p0)
    basis = [alg.basis_element(i) for i in range(alg.dim)]
    # x - shift = inverse(divisor(x)) as tensors
    shift = -sum((mul(mul(basis[i] * s, p0), basis[j]) for (i, j), s in inverse.items()), alg.zero())
    monic_terms, remainder = _divide_monic(r, shift)
    terms = []
    for prefix, right in monic_terms:
        for (i, j), s in inverse.items():
            coeffs = prefix.coeffs[:-1] + (mul(prefix.coeffs[-1], basis[i] * s),)
            terms.append((Monomial(coeffs), mul(basis[j], right)))
    return DivisionResult(tuple(terms), remainder, divisor)


def divide_by(r: NcPolynomial, d: NcPolynomial) -> DivisionResult:
    """Divide by an arbitrary degree-1 polynomial, using the monic path when d = x - c."""
    if d.degree != 1:
        raise DegreeError(f"divisor must have degree 1, got {d.degree}")
    alg = d.algebra
    u = alg.unit
    lead = d.tensors[1]
    p0 = _constant_part(d)
    if alg.unit is not None and lead == {(u, u): 1}:
        return divide_linear(r, -p0)
    n = alg.dim
    T = [[lead.get((i, j), 0) for j in range(n)] for i in range(n)]
    return divide_linear(r, p0=p0, p1=T)


def _constant_part(d: NcPolynomial) -> Element:
    entries = d.tensors.get(0, {})
    coords = [Fraction(0)] * d.algebra.dim
    for (i,), v in entries.items():
        coords[i] = v
    return Element(d.algebra, tuple(coords))


def _tensor_matrix(p1, n: int) -> list[list]:
    rows = [list(row) for row in np.asarray(p1, dtype=object).tolist()]
    if len(rows) != n or any(len(row) != n for row in rows):
        raise ValueError(f"p1 must be an {n}x{n} tensor")
    return [[v if isinstance(v, (Fraction, float)) else parse_scalar(v) for v in row] for row in rows]


def _degree_one_poly(T, alg: AlgebraSpec) -> NcPolynomial:
    basis = [alg.basis_element(i) for i in range(alg.dim)]
    return NcPolynomial(alg, tuple(
        Monomial((basis[i] * T[i][j], basis[j]))
        for i in range(alg.dim) for j in range(alg.dim) if T[i][j] != 0))


def _tensor_inverse(T, alg: AlgebraSpec) -> dict[tuple[int, int], object]:
    """Degree-1 tensor S with S o T = 1 (x) 1 as tensors, keyed by (i, j)."""
    n = alg.dim
    basis = [alg.basis_element(i) for i in range(n)]
    exact = all(not isinstance(v, float) for row in T for v in row)
    tol = 0.0 if exact else 1e-12

    # operator matrix of y -> sum T[k][l] e_k y e_l
    op = [[0] * n for _ in range(n)]
    for m in range(n):
        image = alg.zero()
        for k in range(n):
            for l in range(n):
                if T[k][l] != 0:
                    image = image + mul(mul(basis[k], basis[m]), basis[l]) * T[k][l]
        for p in range(n):
            op[p][m] = image.coords[p]
    if rank(op, tol) < n:
        raise SingularDivisorError("the degree-1 part of the divisor is not an invertible map")

    # S o T = sum S_ij T_kl (e_i e_k) (x) (e_l e_j); match against unit (x) unit
    columns = []
    for i in range(n):
        for j in range(n):
            col = [0] * (n * n)
            for k in range(n):
                for l in range(n):
                    if T[k][l] == 0:
                        continue
                    left = mul(basis[i], basis[k]).coords
                    right = mul(basis[l], basis[j]).coords
                    for p, lp in enumerate(left):
                        if lp == 0:
                            continue
                        for q, rq in enumerate(right):
                            if rq != 0:
                                col[p * n + q] += T[k][l] * lp * rq
            columns.append(col)
    matrix = [[columns[c][r] for c in range(n * n)] for r in range(n * n)]
    u = alg.unit
    rhs = [Fraction(1) if r == u * n + u else Fraction(0) for r in range(n * n)]
    if not exact:
        matrix = [[float(v) for v in row] for row in matrix]
        rhs = [float(v) for v in rhs]
    solution = solve_affine(matrix, rhs, tol)
    if solution is None:
        raise NotRepresentableError(
            "the inverse of the divisor's linear part is not a degree-1 tensor over this algebra")
    particular, _ = solution
    return {(c // n, c % n): v for c, v in enumerate(particular) if v != 0}
