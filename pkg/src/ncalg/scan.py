"""Multistart Newton scan for roots of a polynomial over an algebra (float backend)."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import Element
from .ncpoly import NcPolynomial


@dataclass(frozen=True)
class ScanConfig:
    starts: int = 512
    seed: int = 0
    newton_max_iters: int = 50
    residual_tol: float = 1e-10
    dedup_radius: float = 1e-6
    search_box: float = 4.0
    # singular values below rcond * largest are dropped from the pseudo-inverse step
    rcond: float = 1e-10

    def __post_init__(self):
        if self.starts <= 0:
            raise ValueError("starts must be positive")
        if not self.residual_tol > 0:
            raise ValueError("residual_tol must be positive")
        if not self.dedup_radius > 0:
            raise ValueError("dedup_radius must be positive")
        if not self.search_box > 0:
            raise ValueError("search_box must be positive")
        if self.newton_max_iters < 0:
            raise ValueError("newton_max_iters must be non-negative")


def _compile(p: NcPolynomial) -> list[np.ndarray]:
    return [np.array([[float(c) for c in a.coords] for a in m.coeffs]) for m in p.monomials]


def residual_and_jacobian(C: np.ndarray, monomials: list[np.ndarray], X: np.ndarray):
    """Batch value p(X) and Jacobian dp/dx for X of shape (S, n).

    The directional derivative of a0 x a1 ... x ak along v is the sum over
    positions j of (a0 x ... a_{j-1}) v (a_j x ... a_k); each term is the
    right-multiplication matrix of the suffix times the left-multiplication
    matrix of the prefix.
    """
    S, n = X.shape
    F = np.zeros((S, n))
    J = np.zeros((S, n, n))

    def bmul(u, v):
        return np.einsum("sk,sl,klp->sp", u, v, C)

    for coeffs in monomials:
        k = len(coeffs) - 1
        prefixes = [np.broadcast_to(coeffs[0], (S, n))]
        for j in range(1, k + 1):
            prefixes.append(bmul(bmul(prefixes[-1], X), np.broadcast_to(coeffs[j], (S, n))))
        F += prefixes[-1]
        suffix = np.broadcast_to(coeffs[k], (S, n))
        for j in range(k, 0, -1):
            # term with the variation at the j-th x: prefix a0 x ... a_{j-1}, suffix a_j x ... a_k
            left = np.einsum("sk,kmq->sqm", prefixes[j - 1], C)
            right = np.einsum("sl,qlp->spq", suffix, C)
            J += right @ left
            if j > 1:
                suffix = bmul(bmul(np.broadcast_to(coeffs[j - 1], (S, n)), X), suffix)
    return F, J


def newton_root_scan(p: NcPolynomial, cfg: ScanConfig | None = None) -> list[tuple[Element, float]]:
    """Newton's method from ``cfg.starts`` seeded points in the search box.

    Converged points (residual norm <= residual_tol) are merged when closer
    than dedup_radius and returned sorted by coordinates, each with its
    residual norm.
    """
    cfg = cfg or ScanConfig()
    alg = p.algebra
    n = alg.dim
    C = np.array(alg.constants, dtype=float)
    monomials = _compile(p)
    rng = np.random.default_rng(cfg.seed)
    X = rng.uniform(-cfg.search_box, cfg.search_box, size=(cfg.starts, n))
    if not monomials:
        # the zero polynomial vanishes everywhere; report the start points themselves
        return _dedup(X, np.zeros(cfg.starts), cfg, alg)

    active = np.ones(cfg.starts, dtype=bool)
    for _ in range(cfg.newton_max_iters):
        if not active.any():
            break
        F, J = residual_and_jacobian(C, monomials, X[active])
        res = np.linalg.norm(F, axis=1)
        step = -np.einsum("spq,sq->sp", np.linalg.pinv(J, rcond=cfg.rcond), F)
        idx = np.flatnonzero(active)
        done = res <= cfg.residual_tol * 1e-3
        X[idx[~done]] += step[~done]
        active[idx[done]] = False
        escaped = ~np.isfinite(X).all(axis=1) | (np.abs(X).max(axis=1) > 1e8)
        active &= ~escaped
        X[escaped] = np.nan

    finite = np.isfinite(X).all(axis=1)
    res = np.full(cfg.starts, np.inf)
    if finite.any():
        F, _ = residual_and_jacobian(C, monomials, X[finite])
        res[finite] = np.linalg.norm(F, axis=1)
    ok = res <= cfg.residual_tol
    return _dedup(X[ok], res[ok], cfg, alg)


def _dedup(X: np.ndarray, res: np.ndarray, cfg: ScanConfig, alg) -> list[tuple[Element, float]]:
    order = sorted(range(len(X)), key=lambda s: (res[s], tuple(X[s])))
    reps: list[int] = []
    for s in order:
        if all(np.linalg.norm(X[s] - X[r]) > cfg.dedup_radius for r in reps):
            reps.append(s)
    reps.sort(key=lambda s: tuple(X[s]))
    return [(Element(alg, tuple(float(v) for v in X[s])), float(res[s])) for s in reps]
