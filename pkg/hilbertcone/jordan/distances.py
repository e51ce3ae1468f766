"""Order bounds and projective metrics on symmetric cones.

For w in V and x in the interior of the cone,
M(w/x) = lambda_+(P(x^{-1/2}) w) and m(w/x) = lambda_-(P(x^{-1/2}) w).
"""

import math

import numpy as np
import scipy.linalg

from hilbertcone.config import settings
from hilbertcone.exceptions import NotInteriorException
from hilbertcone.jordan.algebra import (Algebra, JordanElement,
                                        check_same_algebra, eigenvalues,
                                        inverse_sqrt, is_interior,
                                        quadratic_rep_apply)
from hilbertcone.models import MetricKind


def lambda_bounds(w: JordanElement, x: JordanElement) -> tuple[float, float]:
    """Return (lambda_-(w, x), lambda_+(w, x)) for interior x.

    On Sym(n) these are the extreme eigenvalues of the symmetric-definite
    pencil (w, x), i.e. of x^{-1/2} w x^{-1/2}, computed through a Cholesky
    factorization of x instead of the nonsymmetric product x^{-1} w.
    """
    check_same_algebra(w, x)
    if not is_interior(x):
        raise NotInteriorException("lambda bounds require an interior reference element.")

    match w.algebra:
        case Algebra.SYM:
            values = scipy.linalg.eigh(w.data, x.data, eigvals_only=True)
        case Algebra.SPIN:
            values = eigenvalues(quadratic_rep_apply(inverse_sqrt(x), w))

    return float(values[0]), float(values[-1])


def _sym_sup_ratio(w: np.ndarray, x: np.ndarray, rtol: float) -> float:
    """M(w/x) on the PSD cone for a nonzero PSD x, possibly singular."""
    values, vectors = scipy.linalg.eigh(x)
    support = values > rtol * values[-1]
    range_basis, null_basis = vectors[:, support], vectors[:, ~support]

    w_scale = max(float(np.max(np.abs(w))), np.finfo(float).tiny)
    if null_basis.size and np.max(np.abs(null_basis.T @ w @ null_basis)) > rtol * w_scale:
        return math.inf

    scaled = range_basis / np.sqrt(values[support])
    restricted = scaled.T @ w @ scaled
    return max(0.0, float(scipy.linalg.eigvalsh(restricted)[-1]))


def _spin_sup_ratio(w: JordanElement, x: JordanElement, rtol: float) -> float:
    """M(w/x) on the Lorentz cone for a nonzero x on the boundary ray."""
    coefficient = float(w.data @ x.data / (x.data @ x.data))
    residual = np.linalg.norm(w.data - coefficient * x.data)
    if residual > rtol * max(np.linalg.norm(w.data), np.finfo(float).tiny):
        return math.inf
    return max(0.0, coefficient)


def sup_ratio(w: JordanElement, x: JordanElement, rtol: float | None = None) -> float:
    """M(w/x) for w in the cone and any nonzero x in the cone.

    Interior x uses lambda_+; boundary x restricts to the face generated by x,
    so M is finite only if w lies in that face.
    """
    rtol = settings.comparability_rtol if rtol is None else rtol
    check_same_algebra(w, x)
    if not np.any(w.data):
        return 0.0
    if is_interior(x, rtol):
        return max(0.0, lambda_bounds(w, x)[1])

    match x.algebra:
        case Algebra.SYM:
            return _sym_sup_ratio(w.data, x.data, rtol)
        case Algebra.SPIN:
            return _spin_sup_ratio(w, x, rtol)


def symmetric_cone_distance(x: JordanElement, y: JordanElement,
                            metric: MetricKind = MetricKind.HILBERT) -> float:
    """Hilbert, Thompson or Funk distance between interior elements."""
    check_same_algebra(x, y)
    if not (is_interior(x) and is_interior(y)):
        raise NotInteriorException("Symmetric cone distances require interior elements.")

    lower, upper = lambda_bounds(x, y)
    match MetricKind(metric):
        case MetricKind.HILBERT:
            return max(0.0, math.log(upper) - math.log(lower))
        case MetricKind.THOMPSON:
            return max(0.0, math.log(upper), -math.log(lower))
        case MetricKind.FUNK:
            return math.log(upper)


def sampled_lambda_bounds(x: JordanElement, y: JordanElement,
                          n_samples: int = 100_000, seed: int = 0) -> tuple[float, float]:
    """Estimate (lambda_-(x, y), lambda_+(x, y)) from random primitive idempotents c.

    Uses lambda_+ = max <x|c> / <y|c> and lambda_- = min <x|c> / <y|c> over
    the primitive idempotents; sampled values bound the true ones from inside.
    Sym(n): c = v v^T for unit v. Spin factor: c = (1, u) / 2 for unit u.
    """
    check_same_algebra(x, y)
    rng = np.random.default_rng(seed)

    match x.algebra:
        case Algebra.SYM:
            directions = rng.normal(size=(n_samples, x.n))
            numerators = np.einsum("ki,ij,kj->k", directions, x.data, directions)
            denominators = np.einsum("ki,ij,kj->k", directions, y.data, directions)
        case Algebra.SPIN:
            directions = rng.normal(size=(n_samples, x.n))
            directions /= np.linalg.norm(directions, axis=1, keepdims=True)
            numerators = x.s + directions @ x.x
            denominators = y.s + directions @ y.x

    ratios = numerators / denominators
    return float(ratios.min()), float(ratios.max())
