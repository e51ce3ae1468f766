"""Runner for the dist command."""

from typing import Any

from loguru import logger

from hilbertcone.cones.factory import cone_from_model
from hilbertcone.cones.metrics import (funk_weak_metric, hilbert_distance,
                                       order_bounds, same_part,
                                       thompson_distance)
from hilbertcone.models import DistInput, RunConfig, RunnerOutput


def dist_runner(data: dict[str, Any], config: RunConfig) -> RunnerOutput:
    """Order bounds and projective distances of two points in a cone.

    For polytope documents the points are given in polytope
    coordinates and lifted to height 1.
    """
    document = DistInput(**data)
    cone = cone_from_model(document.cone)
    logger.info(f"Evaluating distances in {cone!r}.")

    x_coords, y_coords = document.x, document.y
    if document.cone.kind == "polytope":
        x_coords, y_coords = [*x_coords, 1.0], [*y_coords, 1.0]
    x, y = cone.point(x_coords), cone.point(y_coords)

    result: dict[str, Any] = {
        "cone": cone.kind.value,
        "same_part": same_part(x, y),
        "hilbert": hilbert_distance(x, y),
        "thompson": thompson_distance(x, y),
        "funk": funk_weak_metric(x, y) if x.interior and y.interior else None,
    }
    if not cone.is_zero(y.coords):
        result["order_bounds"] = order_bounds(x, y).model_dump()
    return RunnerOutput(result=result)
