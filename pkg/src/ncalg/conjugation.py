"""Algebras with conjugation: detection from structure constants, Re/Im, conjugate, norm."""
from __future__ import annotations

import functools
from dataclasses import dataclass
from itertools import product

from .algebra import FLOAT_TOL, AlgebraSpec, Element, Scalar, builtin_complex, builtin_quaternion, mul
from .errors import MissingUnitError, NotConjugationAlgebraError, UnitAxiomError, UnsupportedAlgebraError


@dataclass(frozen=True)
class ConjugationProfile:
    algebra: AlgebraSpec
    is_unital: bool
    is_conjugation_algebra: bool
    violation: str | None = None
    # (p, k, l) of the first antisymmetry failure, if that was the reason
    violation_indices: tuple | None = None


def analyze(spec: AlgebraSpec) -> ConjugationProfile:
    """Decide whether ``spec`` is an algebra with conjugation.

    Requires the unit at index 0.  The criterion is the unit axioms plus
    C^p_{kl} = -C^p_{lk} for all p, k, l >= 1: the vector part of a product
    of two vectors is antisymmetric, so only the scalar part of x*x survives
    the symmetric sum.
    """
    if spec.unit is None:
        raise MissingUnitError("conjugation analysis needs a declared unit")
    if spec.unit != 0:
        raise MissingUnitError(f"conjugation analysis expects the unit at index 0, got {spec.unit}")
    try:
        spec.check_unit()
    except UnitAxiomError as exc:
        return ConjugationProfile(spec, False, False, str(exc))
    tol = 0 if spec.exact else FLOAT_TOL
    n = spec.dim
    for p, k, l in product(range(1, n), repeat=3):
        if l < k:
            continue
        a, b = spec.constant(p, k, l), spec.constant(p, l, k)
        bad = a + b != 0 if tol == 0 else abs(a + b) > tol
        if bad:
            msg = f"C^{p}_{{{k}{l}}} = {a} but C^{p}_{{{l}{k}}} = {b}; vector part must be antisymmetric"
            return ConjugationProfile(spec, True, False, msg, (p, k, l))
    return ConjugationProfile(spec, True, True)


@functools.lru_cache(maxsize=32)
def _cached_profile(spec: AlgebraSpec) -> ConjugationProfile:
    return analyze(spec)


def _require(x: Element) -> None:
    prof = _cached_profile(x.algebra)
    if not prof.is_conjugation_algebra:
        raise NotConjugationAlgebraError(prof.violation)


def re(x: Element) -> Element:
    _require(x)
    return Element(x.algebra, (x.coords[0],) + tuple(0 * c for c in x.coords[1:]))


def im(x: Element) -> Element:
    _require(x)
    return Element(x.algebra, (0 * x.coords[0],) + tuple(x.coords[1:]))


def conj(x: Element) -> Element:
    _require(x)
    return Element(x.algebra, (x.coords[0],) + tuple(-c for c in x.coords[1:]))


def norm_sq(x: Element) -> Scalar:
    """Sum of squared coordinates; only defined for the builtin quaternions and complexes."""
    if x.algebra != builtin_quaternion() and x.algebra != builtin_complex():
        raise UnsupportedAlgebraError("norm_sq is only defined for the quaternion and complex algebras")
    return sum(c * c for c in x.coords)


def times_conj(x: Element) -> Element:
    """x * conj(x) for any conjugation algebra; lands in Re A for H and C."""
    return mul(x, conj(x))
