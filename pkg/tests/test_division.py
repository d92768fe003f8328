from fractions import Fraction

import numpy as np
import pytest

from ncalg import builtin_complex, constant, divide_by, divide_linear, evaluate, mul, variable
from ncalg.errors import DegreeError, NotRepresentableError, SingularDivisorError
from ncalg.identities import random_element, random_polynomial


def test_spec_example_exact(H, q, X):
    one, i, j, k = q
    r = (X - i) * (X - j)
    res = divide_linear(r, i)
    assert not res.remainder
    assert res.recompose() == r
    assert res.divisor == X - i


def test_remainder_is_value_at_c(H, rng):
    # every quotient term vanishes at x = c, so the remainder is r(c)
    for _ in range(40):
        r = random_polynomial(H, rng, max_degree=4)
        c = random_element(H, rng)
        res = divide_linear(r, c)
        assert res.remainder == evaluate(r, c)
        assert res.recompose() == r


def test_constant_dividend(H, q):
    one, i, j, k = q
    res = divide_linear(constant(j), i)
    assert res.quotient_terms == () and res.remainder == j


def test_divide_by_detects_monic(H, q, X):
    one, i, j, k = q
    r = X * j * X + constant(k)
    res = divide_by(r, X - k)
    assert res.divisor == X - k
    assert res.remainder == evaluate(r, k)


def _operator(d, H):
    """Matrix of y -> d(y) - d(0), built by evaluating on basis elements."""
    d0 = evaluate(d, H.zero())
    return np.array([[float(v) for v in (evaluate(d, H.basis_element(m)) - d0).coords]
                     for m in range(H.dim)]).T, d0


def test_general_divisor(H, q, X, rng):
    one, i, j, k = q
    d = 2 * X + i * X * i + constant(j)  # y -> 2y + iyi is invertible on H
    M, d0 = _operator(d, H)
    root = np.linalg.solve(M, -np.array([float(v) for v in d0.coords]))
    for _ in range(20):
        r = random_polynomial(H, rng, max_degree=3)
        res = divide_by(r, d)
        assert res.recompose() == r
        assert np.allclose([float(v) for v in res.remainder.coords],
                           [float(v) for v in evaluate(r.to_float(), H.element(root, backend="float")).coords])


def test_general_divisor_tensor_argument(H, q, X):
    one, i, j, k = q
    T = [[0] * 4 for _ in range(4)]
    T[1][2] = Fraction(3)  # 3 i x j
    r = X * X * k + constant(one)
    res = divide_linear(r, p0=one, p1=T)
    assert res.divisor == 3 * i * X * j + constant(one)
    assert res.recompose() == r


def test_singular_divisor(H, q, X):
    one, i, j, k = q
    d = j * X - X * j - constant(one)  # kills 1 and j
    with pytest.raises(SingularDivisorError):
        divide_by(X * X, d)


def test_not_representable_over_complex():
    C = builtin_complex()
    one, i = C.basis_element(0), C.basis_element(1)
    x = variable(C)
    # y -> y - iyi = 2y is invertible, but 1(x)1 - i(x)i has no inverse as a tensor
    d = x - i * x * i
    with pytest.raises(NotRepresentableError):
        divide_by(x * x, d)


def test_degree_error(H, X):
    with pytest.raises(DegreeError):
        divide_by(X * X, X * X)
    with pytest.raises(DegreeError):
        divide_by(X, constant(H.one()))


def test_float_backend_recomposes(H, rng):
    r = random_polynomial(H, rng, 3).to_float()
    c = random_element(H, rng).to_float()
    res = divide_linear(r, c)
    assert res.recompose().isclose(r, 1e-10)
