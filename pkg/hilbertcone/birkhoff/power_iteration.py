"""Hilbert-metric power iteration with a Birkhoff contraction certificate."""

from typing import Any, NamedTuple

import numpy as np
from loguru import logger

from hilbertcone.birkhoff.contraction import (as_positive_map,
                                              contraction_ratio,
                                              projective_diameter)
from hilbertcone.cones.metrics import orthant_distances
from hilbertcone.config import settings
from hilbertcone.exceptions import (DimensionMismatchException,
                                    EvaluationFailureException,
                                    NoConvergenceException,
                                    NotInteriorException)
from hilbertcone.models import ContractionCertificate

# residuals below this are indistinguishable from rounding noise in the log-ratio metric
RESIDUAL_FLOOR = 16 * np.finfo(float).eps


class PowerIterationResult(NamedTuple):
    vector: np.ndarray
    eigenvalue: float
    certificate: ContractionCertificate
    residuals: list[float]


def rate_bound_satisfied(residuals: list[float], kappa: float, slack: float = 1e-9) -> bool:
    """Check r_k <= kappa^k r_0 + slack for every recorded residual."""
    if not residuals:
        return True
    first = residuals[0]
    return all(r <= kappa ** k * first + slack for k, r in enumerate(residuals))


def convergence_curve(result: PowerIterationResult) -> list[dict[str, float]]:
    """Rows (iteration, residual, bound) with bound = kappa^k r_0."""
    kappa = result.certificate.kappa
    first = result.residuals[0] if result.residuals else 0.0
    return [
        {"iteration": k, "residual": r, "bound": kappa ** k * first}
        for k, r in enumerate(result.residuals)
    ]


def power_iteration(A: Any, x0: Any | None = None, tol: float | None = None,
                    max_iter: int | None = None) -> PowerIterationResult:
    """Dominant eigenpair of a square nonnegative matrix by normalized iteration.

    Iterates are normalized to coordinate sum 1. With kappa < 1 the
    iteration stops once d(x_{k+1}, x_k) < tol (1 - kappa), which bounds the
    Hilbert distance to the eigenvector by tol. With kappa = 1 the plain
    residual test is used and the certificate is marked uncertified.
    """
    A = as_positive_map(A)
    tol = settings.power_tol if tol is None else tol
    max_iter = settings.power_max_iter if max_iter is None else max_iter
    if not A.is_square:
        raise DimensionMismatchException(f"Power iteration needs a square matrix, got {A.shape}.")

    n = A.shape[0]
    x = np.full(n, 1.0 / n) if x0 is None else np.asarray(x0, dtype=float).ravel()
    if x.size != n:
        raise DimensionMismatchException(f"Start vector must have {n} coordinates, got {x.size}.")
    if np.any(x <= 0):
        raise NotInteriorException("Start vector must be strictly positive.")
    x = x / x.sum()

    delta = projective_diameter(A)
    kappa = contraction_ratio(delta)
    certified = kappa < 1
    threshold = tol * (1 - kappa) if certified else tol
    if not certified:
        logger.warning("Projective diameter is infinite; the stopping rule is not certified.")

    residuals: list[float] = []
    for k in range(max_iter):
        image = A.evaluate(x)
        total = image.sum()
        if not total > 0:
            raise EvaluationFailureException("Iterate was mapped to the apex.")
        image = image / total

        residual = float(orthant_distances(image, x)[0])
        residuals.append(residual)
        x = image
        logger.debug(f"Power iteration step {k}: residual {residual:.3e}.")
        if residual < threshold or residual <= RESIDUAL_FLOOR:
            break
    else:
        raise NoConvergenceException(max_iter, residuals[-1] if residuals else None)

    eigenvalue = float(A.evaluate(x).sum())
    certificate = ContractionCertificate(
        delta=delta,
        kappa=kappa,
        iterations=len(residuals),
        final_residual=residuals[-1],
        rate_bound_satisfied=rate_bound_satisfied(residuals, kappa),
        certified=certified,
    )
    logger.info(f"Power iteration converged after {len(residuals)} steps, eigenvalue {eigenvalue}.")
    return PowerIterationResult(x, eigenvalue, certificate, residuals)
