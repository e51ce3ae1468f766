"""Runners for the orbit and bounds commands."""

from typing import Any

from loguru import logger

from hilbertcone.dynamics.bounds import period_bound, possible_periods
from hilbertcone.dynamics.maps import map_from_model
from hilbertcone.dynamics.orbits import iterate_orbit, omega_limit_estimate
from hilbertcone.models import (BoundsInput, OrbitInput, RunConfig,
                                RunnerOutput)


def orbit_runner(data: dict[str, Any], config: RunConfig) -> RunnerOutput:
    """Orbit, detected period and tail diagnostics; the table holds the orbit."""
    document = OrbitInput(**data)
    f = map_from_model(document.map)
    logger.info(f"Iterating {f!r} for {document.steps} steps.")

    record = iterate_orbit(f, document.x0, document.steps, document.normalization,
                           document.metric, tol=config.tol)
    report = omega_limit_estimate(f, document.x0, document.steps, document.normalization)
    if record.truncated:
        logger.warning("Orbit was truncated at the boundary of the cone.")

    result = {
        "period": record.detected_period,
        "cycle": record.cycle,
        "residuals": record.residuals,
        "boundary_proximity": record.boundary_proximity,
        "converged_to_boundary": record.converged_to_boundary,
        "truncated": record.truncated,
        "omega_limit": report.model_dump(),
    }
    return RunnerOutput(result=result, table=record.to_frame().to_dict(orient="records"))


def bounds_runner(data: dict[str, Any], config: RunConfig) -> RunnerOutput:
    """Evaluate period bound formulas and possible-period sets."""
    document = BoundsInput(**data)
    bounds = [
        {"kind": query.kind.value, "size": query.size, "bound": period_bound(query.kind, query.size)}
        for query in document.queries
    ]
    periods = {str(n): sorted(possible_periods(n)) for n in document.possible_periods}
    return RunnerOutput(result={"bounds": bounds, "possible_periods": periods}, table=bounds)
