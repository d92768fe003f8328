import numpy as np
import pytest

from ncalg import evaluate, parse_polynomial
from ncalg.scan import ScanConfig, newton_root_scan, residual_and_jacobian, _compile
from ncalg.identities import random_polynomial


def coords(results):
    return [np.array([float(v) for v in x.coords]) for x, _ in results]


def test_jacobian_matches_finite_differences(H, rng):
    p = random_polynomial(H, rng, max_degree=3).to_float()
    C = np.array([[[float(H.constant(pp, k, l)) for pp in range(4)] for l in range(4)] for k in range(4)])
    X = np.random.default_rng(3).normal(size=(5, 4))
    F, J = residual_and_jacobian(C, _compile(p), X)
    for s in range(5):
        x0 = H.element(X[s], backend="float")
        assert np.allclose(F[s], [float(v) for v in evaluate(p, x0).coords])
        h = 1e-6
        for m in range(4):
            Xp = X.copy()
            Xp[s, m] += h
            Xm = X.copy()
            Xm[s, m] -= h
            Fp, _ = residual_and_jacobian(C, _compile(p), Xp)
            Fm, _ = residual_and_jacobian(C, _compile(p), Xm)
            assert np.allclose(J[s, :, m], (Fp[s] - Fm[s]) / (2 * h), atol=1e-5)


def test_shifted_one_two_roots(H):
    p = parse_polynomial("(1+x)^2 - 1", H, "float")
    found = coords(newton_root_scan(p, ScanConfig(starts=256)))
    assert len(found) == 2
    assert np.allclose(found[0], [-2, 0, 0, 0], atol=1e-8)
    assert np.allclose(found[1], [0, 0, 0, 0], atol=1e-8)


def test_residuals_reported(H):
    p = parse_polynomial("x^2 - (1+2i)^2", H, "float")
    results = newton_root_scan(p, ScanConfig(starts=64))
    assert len(results) == 2
    for x, r in results:
        assert r <= 1e-10
        assert np.linalg.norm([float(v) for v in evaluate(p, x).coords]) <= 1e-10


def test_one_root_example(H):
    p = parse_polynomial("(j*x - x*j - 1)*(x - i)", H, "float")
    found = coords(newton_root_scan(p, ScanConfig(starts=256)))
    assert len(found) == 1 and np.allclose(found[0], [0, 1, 0, 0], atol=1e-8)


def test_deterministic(H):
    p = parse_polynomial("x^2 + 1", H, "float")
    a = newton_root_scan(p, ScanConfig(starts=32, seed=5))
    b = newton_root_scan(p, ScanConfig(starts=32, seed=5))
    assert [(x.coords, r) for x, r in a] == [(x.coords, r) for x, r in b]
    assert len(a) == 32  # a sphere of roots: every start lands somewhere new


def test_exact_polynomial_accepted(H):
    p = parse_polynomial("x^2 - 4", H)
    found = coords(newton_root_scan(p, ScanConfig(starts=64)))
    assert len(found) == 2


@pytest.mark.parametrize("field,value", [
    ("starts", 0), ("residual_tol", 0.0), ("dedup_radius", -1.0), ("search_box", 0.0),
    ("newton_max_iters", -1),
])
def test_config_validation(field, value):
    with pytest.raises(ValueError):
        ScanConfig(**{field: value})
