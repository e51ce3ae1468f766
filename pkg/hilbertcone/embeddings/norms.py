"""Target norms of the isometric embeddings."""

from typing import Any, NamedTuple

import numpy as np
from scipy.spatial import ConvexHull, HalfspaceIntersection

from hilbertcone.exceptions import ArgumentTooSmallException
from hilbertcone.models import TargetNorm
from hilbertcone.utils.utils import as_vector


def variation_norm(w: Any) -> float:
    """max_i w_i - min_j w_j; a norm on R^n modulo constants."""
    w = as_vector(w)
    return float(w.max() - w.min())


def h_norm(x: Any) -> float:
    """max(x_1, ..., x_n, 0) - min(x_1, ..., x_n, 0)."""
    x = as_vector(x)
    return float(max(x.max(), 0.0) - min(x.min(), 0.0))


def sup_norm(x: Any) -> float:
    return float(np.abs(as_vector(x)).max())


NORMS = {
    TargetNorm.VARIATION: variation_norm,
    TargetNorm.HEXAGONAL_H: h_norm,
    TargetNorm.SUP_NORM: sup_norm,
}


class UnitBall(NamedTuple):
    vertices: np.ndarray
    A: np.ndarray
    b: np.ndarray
    n_facets: int


def h_unit_ball(n: int) -> UnitBall:
    """The polytope {x in R^n : |x|_H <= 1}.

    It is cut out by x_i - x_j <= 1 for i != j in {0, ..., n} with x_0 = 0,
    a hexagon for n = 2. The facet count is read off the hull of the
    computed vertices.
    """
    if n < 1:
        raise ArgumentTooSmallException(f"Dimension must be at least 1, got {n}.")

    # rows e_i - e_j over the index set {0, ..., n}, dropping the x_0 column
    rows = [
        np.eye(n + 1)[i] - np.eye(n + 1)[j]
        for i in range(n + 1) for j in range(n + 1) if i != j
    ]
    A = np.array(rows)[:, 1:]
    b = np.ones(len(rows))

    if n == 1:
        return UnitBall(np.array([[-1.0], [1.0]]), A, b, 2)

    vertices = HalfspaceIntersection(np.c_[A, -b], np.zeros(n)).intersections
    vertices = np.unique(np.round(vertices, 12) + 0.0, axis=0)
    equations = np.unique(np.round(ConvexHull(vertices).equations, 10) + 0.0, axis=0)
    return UnitBall(vertices, A, b, len(equations))
