"""Runners for the diam and power commands."""

from typing import Any

from loguru import logger

from hilbertcone.birkhoff.contraction import (PositiveLinearMap,
                                              contraction_ratio,
                                              diameter_pair,
                                              directed_contraction,
                                              empirical_contraction,
                                              projective_diameter)
from hilbertcone.birkhoff.power_iteration import (convergence_curve,
                                                  power_iteration)
from hilbertcone.models import MatrixInput, RunConfig, RunnerOutput


def diam_runner(data: dict[str, Any], config: RunConfig) -> RunnerOutput:
    """Projective diameter, contraction ratio and its sampled estimates."""
    document = MatrixInput(**data)
    A = PositiveLinearMap(document.matrix)
    logger.info(f"Computing the projective diameter of a {A.shape[0]}x{A.shape[1]} matrix.")

    delta = projective_diameter(A)
    result = {
        "delta": delta,
        "kappa": contraction_ratio(delta),
        "strictly_positive": A.strictly_positive,
        "extremal_columns": diameter_pair(A),
        "empirical": empirical_contraction(A, document.n_samples, config.seed),
        "directed": directed_contraction(A),
        "n_samples": document.n_samples,
    }
    if A.strictly_positive:
        result["delta_cross_ratio"] = projective_diameter(A, method="cross_ratio")
    return RunnerOutput(result=result)


def power_runner(data: dict[str, Any], config: RunConfig) -> RunnerOutput:
    """Certified power iteration; the table holds the convergence curve."""
    document = MatrixInput(**data)
    A = PositiveLinearMap(document.matrix)
    outcome = power_iteration(A, document.x0, tol=config.tol, max_iter=config.max_iter)

    result = {
        "vector": outcome.vector,
        "eigenvalue": outcome.eigenvalue,
        "certificate": outcome.certificate.model_dump(),
    }
    return RunnerOutput(result=result, table=convergence_curve(outcome))
