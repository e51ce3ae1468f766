"""Runner for the embed command."""

from typing import Any

import numpy as np
from loguru import logger

from hilbertcone.cones.polytopes import homogenize_model
from hilbertcone.embeddings.isometries import (EmbeddedPoint, log_map,
                                               polytope_embedding,
                                               simplex_isometry)
from hilbertcone.models import EmbedInput, RunConfig, RunnerOutput


def _embed(document: EmbedInput) -> list[EmbeddedPoint]:
    match document.kind:
        case "log":
            return [log_map(point) for point in document.points]
        case "simplex":
            return [simplex_isometry(point, document.base_index) for point in document.points]
        case "polytope":
            cone = homogenize_model(document.polytope)
            return [polytope_embedding([*point, 1.0], cone) for point in document.points]


def embed_runner(data: dict[str, Any], config: RunConfig) -> RunnerOutput:
    """Embed points and report their pairwise target-norm distances."""
    document = EmbedInput(**data)
    embedded = _embed(document)
    logger.info(f"Embedded {len(embedded)} points with the {document.kind} embedding.")

    pairwise = np.array([[p.distance(q) for q in embedded] for p in embedded])
    table = [
        {"point": index, **{f"y_{k + 1}": value for k, value in enumerate(point.coords)}}
        for index, point in enumerate(embedded)
    ]
    result = {
        "target_norm": embedded[0].target_norm.value,
        "embedded": [point.coords for point in embedded],
        "pairwise_distances": pairwise,
    }
    return RunnerOutput(result=result, table=table)
