"""Isometric embeddings of simplex and polytope Hilbert geometries into normed spaces."""

from dataclasses import dataclass
from typing import Any

import numpy as np

from hilbertcone.cone_abc import PointVec
from hilbertcone.cones.cones import FacetCone
from hilbertcone.embeddings.norms import NORMS
from hilbertcone.exceptions import (DimensionMismatchException,
                                    NotInteriorException)
from hilbertcone.models import TargetNorm
from hilbertcone.utils.utils import as_vector


@dataclass(frozen=True)
class EmbeddedPoint:
    """Image of a point under one of the embeddings, tagged with its target norm."""

    coords: np.ndarray
    target_norm: TargetNorm

    def distance(self, other: "EmbeddedPoint") -> float:
        """Target-norm distance; equals the Hilbert distance of the preimages."""
        if self.target_norm != other.target_norm or self.coords.shape != other.coords.shape:
            raise DimensionMismatchException("Embedded points live in different target spaces.")
        return NORMS[self.target_norm](self.coords - other.coords)


def _positive(x: Any) -> np.ndarray:
    x = as_vector(x.coords if isinstance(x, PointVec) else x)
    if np.any(x <= 0):
        raise NotInteriorException(f"Point {x.tolist()} is not strictly positive.")
    return x


def log_map(x: Any) -> EmbeddedPoint:
    """Coordinatewise log of an interior orthant point."""
    return EmbeddedPoint(np.log(_positive(x)), TargetNorm.VARIATION)


def simplex_isometry(x: Any, base_index: int = -1) -> EmbeddedPoint:
    """log(x_k / x_base) over k != base_index, for a point of the open simplex.

    The result does not depend on the scale of x, so points need not
    sum to 1.
    """
    x = _positive(x)
    logs = np.log(x) - np.log(x[base_index])
    return EmbeddedPoint(np.delete(logs, base_index % x.size), TargetNorm.HEXAGONAL_H)


def polytope_embedding(x: Any, cone: FacetCone) -> EmbeddedPoint:
    """Psi_ij(x) = log psi_i(x) - log psi_j(x) for i < j in lexicographic order.

    x is an interior point of the cone, for a polytope the lifted point (x, 1).
    """
    coords = cone.coerce(x.coords if isinstance(x, PointVec) else x)
    values = cone.facet_values(coords)
    if np.any(values <= 0):
        raise NotInteriorException(f"Point {coords.tolist()} is not interior to {cone!r}.")

    logs = np.log(values)
    upper, lower = np.triu_indices(logs.size, k=1)
    return EmbeddedPoint(logs[upper] - logs[lower], TargetNorm.SUP_NORM)
