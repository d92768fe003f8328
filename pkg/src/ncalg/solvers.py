"""Square roots, the shifted square (a + x)^2 = a^2, and the linear equation ax - xa = b."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .algebra import (
    AlgebraSpec,
    Element,
    Scalar,
    _same_algebra,
    builtin_quaternion,
    exact_sqrt,
    mul,
    scalar_to_json,
)
from .conjugation import ConjugationProfile, analyze
from .errors import NotConjugationAlgebraError, NotReducibleError, ShapeError, UnsupportedAlgebraError
from .linalg import solve_affine

SPHERE_CONSTRAINT = "scalar part fixed, imaginary norm fixed"


@dataclass(frozen=True)
class Finite:
    roots: tuple[tuple[Element, int], ...]
    variant = "finite"

    def elements(self) -> list[Element]:
        return [r for r, _ in self.roots]

    def to_json(self) -> dict:
        return {"variant": self.variant,
                "roots": [{"root": r.to_json(), "multiplicity": m} for r, m in self.roots]}


@dataclass(frozen=True)
class Sphere:
    """All x with x - center purely imaginary of Euclidean norm ``radius``."""

    center: Element
    radius: Scalar
    constraint: str = SPHERE_CONSTRAINT
    variant = "sphere"

    def member(self, direction: Sequence) -> Element:
        """center + radius * u for a unit vector ``direction`` in the imaginary coordinates."""
        alg = self.center.algebra
        u = [0] * alg.dim
        for idx, d in zip(_imaginary_indices(alg), direction):
            u[idx] = d * self.radius
        return self.center + Element(alg, tuple(Fraction(v) if isinstance(v, int) else v for v in u))

    def sample(self, count: int, seed: int = 0) -> list[Element]:
        """Deterministic members; exact whenever radius and center are rational."""
        rng = random.Random(seed)
        m = self.center.algebra.dim - 1
        exact = isinstance(self.radius, (Fraction, int)) and self.center.exact
        out = []
        for _ in range(count):
            if exact:
                out.append(self.member(_rational_unit_vector(rng, m)))
            else:
                v = [rng.gauss(0.0, 1.0) for _ in range(m)]
                norm = math.sqrt(sum(t * t for t in v)) or 1.0
                out.append(self.member([t / norm for t in v]))
        return out

    def contains(self, x: Element, tol: float = 0.0) -> bool:
        d = x - self.center
        u = self.center.algebra.unit or 0
        sq = sum(d.coords[i] ** 2 for i in _imaginary_indices(x.algebra))
        target = self.radius ** 2
        if tol == 0:
            return d.coords[u] == 0 and sq == target
        return abs(d.coords[u]) <= tol and abs(sq - target) <= tol

    def to_json(self) -> dict:
        return {"variant": self.variant, "center": self.center.to_json(),
                "radius": scalar_to_json(self.radius)}


@dataclass(frozen=True)
class Affine:
    particular: Element
    basis: tuple[Element, ...]
    variant = "affine"

    def member(self, weights: Sequence) -> Element:
        x = self.particular
        for w, b in zip(weights, self.basis):
            x = x + b * w
        return x

    def to_json(self) -> dict:
        return {"variant": self.variant, "particular": self.particular.to_json(),
                "basis": [b.to_json() for b in self.basis]}


@dataclass(frozen=True)
class Empty:
    variant = "empty"

    def to_json(self) -> dict:
        return {"variant": self.variant}


RootSet = Union[Finite, Sphere, Affine, Empty]


def _imaginary_indices(alg: AlgebraSpec) -> list[int]:
    u = alg.unit if alg.unit is not None else 0
    return [i for i in range(alg.dim) if i != u]


def _rational_unit_vector(rng: random.Random, m: int) -> list[Fraction]:
    # inverse stereographic projection of a random rational point of Q^(m-1)
    if m == 1:
        return [Fraction(rng.choice((-1, 1)))]
    t = [Fraction(rng.randint(-99, 99), rng.randint(1, 99)) for _ in range(m - 1)]
    s = sum(v * v for v in t)
    return [2 * v / (s + 1) for v in t] + [(s - 1) / (s + 1)]


def square_residual_coords(spec: AlgebraSpec, x_coords: Sequence, a_coords: Sequence) -> list:
    """residual^p = sum C^p_{kl} x^k x^l - a^p; all zero exactly when x^2 = a."""
    if len(x_coords) != spec.dim or len(a_coords) != spec.dim:
        raise ShapeError(f"expected {spec.dim} coordinates")
    x = spec.element(x_coords)
    return [s - a for s, a in zip(mul(x, x).coords, spec.element(a_coords).coords)]


def commutator_residual_coords(spec: AlgebraSpec, a_coords: Sequence, x_coords: Sequence) -> list:
    """Coordinates of the commutator (2a + x) x - x (2a + x) = 2(ax - xa).

    Zero exactly when x commutes with a.  The shifted square uses the
    symmetric product instead: x^2 + ax + xa = ((2a + x) x + x (2a + x)) / 2.
    """
    if len(x_coords) != spec.dim or len(a_coords) != spec.dim:
        raise ShapeError(f"expected {spec.dim} coordinates")
    x = spec.element(x_coords)
    y = spec.element(a_coords) * 2 + x
    return list((mul(y, x) - mul(x, y)).coords)


def _negative_definite(G: list[list]) -> bool:
    # elimination without pivoting on -G; every pivot positive iff -G is positive definite
    m = [[-v for v in row] for row in G]
    n = len(m)
    for i in range(n):
        if m[i][i] <= 0:
            return False
        for r in range(i + 1, n):
            f = m[r][i] / m[i][i]
            for c in range(i, n):
                m[r][c] -= f * m[i][c]
    return True


def _scalar_form(alg: AlgebraSpec) -> list[list]:
    """Symmetrised C^0_{kl} restricted to k, l >= 1."""
    idx = _imaginary_indices(alg)
    half = Fraction(1, 2) if alg.exact else 0.5
    return [[(alg.constant(0, k, l) + alg.constant(0, l, k)) * half for l in idx] for k in idx]


def sqrt_conjugation(profile: ConjugationProfile, a: Element) -> RootSet:
    """All x with x^2 = a in an algebra with conjugation.

    With the vector part of vector products antisymmetric, x^2 has vector
    part 2 x^0 x_v and scalar part (x^0)^2 + q(x_v), q(v) = sum C^0_{kl} v^k v^l.
    If x^0 != 0 then x_v = a_v / (2 x^0) and y = (x^0)^2 solves
    y^2 - a^0 y - Q/4 = 0 with Q = -q(a_v); only y > 0 is kept.  If x^0 = 0
    then a_v must vanish and q(x_v) = a^0, which is a sphere when q is a
    negative multiple of the Euclidean norm.
    """
    if not profile.is_conjugation_algebra:
        raise NotConjugationAlgebraError(profile.violation or "not an algebra with conjugation")
    alg = profile.algebra
    if a.algebra != alg:
        _same_algebra(a, alg.zero())
    G = _scalar_form(alg)
    if not _negative_definite(G):
        raise NotReducibleError(
            "the scalar part of x^2 is not negative definite on the vector part; "
            "x^2 = a does not reduce to one quadratic in (x^0)^2")
    if not a:
        return Finite(((alg.zero(), 2),))

    a0 = a.coords[0]
    av = a.coords[1:]
    Q = sum(-G[k][l] * av[k] * av[l] for k in range(len(av)) for l in range(len(av)))
    root_disc = exact_sqrt(a0 * a0 + Q)
    # the larger root of y^2 - a0 y - Q/4, written to avoid cancellation when a0 < 0
    if a0 >= 0:
        y = (a0 + root_disc) / 2
    else:
        y = Q / (2 * (root_disc - a0))
    if y > 0:
        x0 = exact_sqrt(y)
        coords = [x0] + [v / (2 * x0) for v in av]
        if isinstance(x0, float):
            coords = [float(c) for c in coords]
        x = Element(alg, tuple(coords))
        return Finite(((x, 1), (-x, 1)))

    # x^0 = 0 branch: a is a negative scalar here
    if not G:
        return Empty()
    lam = -G[0][0]
    isotropic = all(G[k][l] == (-lam if k == l else 0)
                    for k in range(len(G)) for l in range(len(G)))
    if not isotropic:
        raise NotReducibleError("solutions form an ellipsoid, not a sphere, in this algebra")
    r = exact_sqrt(-a0 / lam)
    if len(G) == 1:
        e1 = alg.basis_element(1)
        return Finite(((e1 * r, 1), (e1 * -r, 1)))
    zero = alg.zero() if not isinstance(r, float) else alg.zero().to_float()
    return Sphere(zero, r)


def _require_quaternion(a: Element) -> None:
    if a.algebra != builtin_quaternion():
        raise UnsupportedAlgebraError("this solver is specific to the quaternion algebra")


def sqrt_quaternion(a: Element) -> RootSet:
    """x^2 = a in H: a double root at 0, a sphere for negative real a, else a pair {x, -x}."""
    _require_quaternion(a)
    return sqrt_conjugation(analyze(a.algebra), a)


def shifted_square(a: Element) -> RootSet:
    """Solutions of (a + x)^2 = a^2, i.e. x^2 + ax + xa = 0, by translating sqrt(a^2) by -a."""
    _require_quaternion(a)
    roots = sqrt_quaternion(mul(a, a))
    if isinstance(roots, Sphere):
        return Sphere(roots.center - a, roots.radius)
    return Finite(tuple((s - a, m) for s, m in roots.roots))


def sylvester_linear(a: Element, b: Element) -> RootSet:
    """Solve ax - xa = b by exact elimination on the matrix of x -> ax - xa."""
    _same_algebra(a, b)
    alg = a.algebra
    n = alg.dim
    exact = a.exact and b.exact and alg.exact
    columns = []
    for l in range(n):
        e = alg.basis_element(l)
        columns.append((mul(a, e) - mul(e, a)).coords)
    matrix = [[columns[l][p] for l in range(n)] for p in range(n)]
    rhs = list(b.coords)
    tol = 0.0
    if not exact:
        matrix = [[float(v) for v in row] for row in matrix]
        rhs = [float(v) for v in rhs]
        tol = 1e-12
    solution = solve_affine(matrix, rhs, tol)
    if solution is None:
        return Empty()
    particular, kernel = solution
    return Affine(Element(alg, tuple(particular)), tuple(Element(alg, tuple(v)) for v in kernel))
