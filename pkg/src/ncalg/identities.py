"""Randomized checks of the polynomial identities, used by ``ncalg verify-identities``."""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .algebra import AlgebraSpec, Element, mul
from .ncpoly import (
    VIETE_PLACEMENTS,
    Monomial,
    NcPolynomial,
    build_question_poly,
    divide_linear,
    evaluate,
    expand_cube,
    expand_prod,
    expand_square,
    identity_b2_minus_a2,
    lam_mul,
    variable,
    viete_expand,
)


def random_element(alg: AlgebraSpec, rng: random.Random, spread: int = 5, max_den: int = 4) -> Element:
    return Element(alg, tuple(Fraction(rng.randint(-spread, spread), rng.randint(1, max_den))
                              for _ in range(alg.dim)))


def random_polynomial(alg: AlgebraSpec, rng: random.Random, max_degree: int = 3,
                      max_terms: int = 4) -> NcPolynomial:
    monos = []
    for _ in range(rng.randint(1, max_terms)):
        deg = rng.randint(0, max_degree)
        monos.append(Monomial(tuple(random_element(alg, rng) for _ in range(deg + 1))))
    return NcPolynomial(alg, tuple(monos))


def is_monic_quadratic(p: NcPolynomial) -> bool:
    u = p.algebra.unit
    return p.degree == 2 and p.leading_tensor() == {(u, u, u): 1}


@dataclass(frozen=True)
class LamWitness:
    p: NcPolynomial
    q: NcPolynomial
    point: Element
    product_value: Element
    values_product: Element


def lam_witness(alg: AlgebraSpec) -> LamWitness | None:
    """p = x - e_a, q = x - e_b, x0 = e_a for the first non-commuting basis pair.

    Under the central-variable product, (pq)(e_a) = e_a e_b - e_b e_a while
    p(e_a) q(e_a) = 0.  Returns None for commutative algebras.
    """
    x = variable(alg)
    for a, b in product(range(alg.dim), repeat=2):
        ea, eb = alg.basis_element(a), alg.basis_element(b)
        if mul(ea, eb) != mul(eb, ea):
            p, q = x - ea, x - eb
            lhs = evaluate(lam_mul(p, q), ea)
            rhs = mul(evaluate(p, ea), evaluate(q, ea))
            return LamWitness(p, q, ea, lhs, rhs)
    return None


def verify_identities(alg: AlgebraSpec, samples: int = 100, seed: int = 0) -> dict:
    """Run every identity on ``samples`` seeded random inputs; returns pass/fail counts."""
    rng = random.Random(seed)
    x = variable(alg)
    passed: Counter = Counter()
    failed: Counter = Counter()

    def record(name, ok):
        (passed if ok else failed)[name] += 1

    for _ in range(samples):
        a, b, c, x0 = (random_element(alg, rng) for _ in range(4))
        record("expand_square", expand_square(a) == (x + a) * (x + a))
        record("expand_cube", expand_cube(a) == (x + a) * (x + a) * (x + a))
        record("expand_prod", expand_prod(a, b) == (x + a) * (x + b))
        lhs, rhs = identity_b2_minus_a2(a, b)
        lhs_m, rhs_m = identity_b2_minus_a2(a, b, mirrored=True)
        record("b2_minus_a2", lhs == rhs and lhs_m == rhs_m)
        for placement in VIETE_PLACEMENTS:
            v = viete_expand(c, a, b, placement)
            record(f"viete_{placement}", is_monic_quadratic(v) and not evaluate(v, a) and not evaluate(v, b))
        record("question_poly_root", not evaluate(build_question_poly(a, b, c), a))
        r = random_polynomial(alg, rng)
        record("division_recomposition", divide_linear(r, c).recompose() == r)
        p, q = random_polynomial(alg, rng, 2), random_polynomial(alg, rng, 2)
        record("eval_multiplicative", evaluate(p * q, x0) == mul(evaluate(p, x0), evaluate(q, x0)))

    names = sorted(set(passed) | set(failed))
    report = {"samples": samples, "seed": seed,
              "checks": {n: {"pass": passed[n], "fail": failed[n]} for n in names}}
    w = lam_witness(alg)
    if w is None:
        report["lam_witness"] = {"found": False}
    else:
        report["lam_witness"] = {
            "found": w.product_value != w.values_product,
            "p": w.p.to_json(), "q": w.q.to_json(), "point": w.point.to_json(),
            "product_value": w.product_value.to_json(),
            "values_product": w.values_product.to_json(),
        }
    return report
