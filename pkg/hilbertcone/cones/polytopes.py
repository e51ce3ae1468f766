"""Polytope conversions and the cone over a polytope.

A polytope P = {x : A x <= b} in R^n is lifted to the cone
C = {(t x, t) : x in P, t >= 0} in R^(n+1) whose facet functionals are
psi_i(x, s) = b_i s - a_i . x.
"""

import numpy as np
from loguru import logger
from scipy.optimize import linprog
from scipy.spatial import ConvexHull, HalfspaceIntersection, QhullError

from hilbertcone.cones.cones import PolyhedralCone
from hilbertcone.exceptions import (DegeneratePolytopeException,
                                    DimensionMismatchException,
                                    UnboundedDomainException)
from hilbertcone.models import PolytopeModel
from hilbertcone.utils.utils import as_matrix, as_vector


def _dedupe_rows(rows: np.ndarray, decimals: int = 10) -> np.ndarray:
    _, index = np.unique(np.round(rows, decimals) + 0.0, axis=0, return_index=True)
    return rows[np.sort(index)]


def check_halfspaces(A, b) -> tuple[np.ndarray, np.ndarray]:
    """Cast (A, b) to arrays and check that the shapes agree."""
    A, b = as_matrix(A), as_vector(b)
    if A.shape[0] != b.size:
        raise DimensionMismatchException(
            f"A has {A.shape[0]} rows but b has {b.size} entries."
        )
    return A, b


def chebyshev_center(A, b, tol: float = 1e-9) -> tuple[np.ndarray, float]:
    """Center and radius of the largest ball inside {x : A x <= b}.

    Raise UnboundedDomainException for an unbounded LP and
    DegeneratePolytopeException when the radius does not exceed tol.
    """
    A, b = check_halfspaces(A, b)
    m, n = A.shape
    norms = np.linalg.norm(A, axis=1)
    result = linprog(
        np.r_[np.zeros(n), -1.0],
        A_ub=np.c_[A, norms],
        b_ub=b,
        bounds=[(None, None)] * n + [(0, None)],
        method="highs",
    )
    if result.status == 3:
        raise UnboundedDomainException("Inscribed-ball LP is unbounded.")
    if result.status == 2:
        raise DegeneratePolytopeException("Inequalities are infeasible.")
    if result.status != 0:
        raise DegeneratePolytopeException(f"Inscribed-ball LP failed: {result.message}")

    radius = float(result.x[-1])
    if radius <= tol:
        raise DegeneratePolytopeException("Polytope has empty interior.")
    return result.x[:n], radius


def bounding_box(A, b) -> np.ndarray:
    """Coordinate bounds of {x : A x <= b} as an (n, 2) array.

    Every axis direction is maximized and minimized by LP; an unbounded
    direction raises UnboundedDomainException.
    """
    A, b = check_halfspaces(A, b)
    n = A.shape[1]
    box = np.empty((n, 2))
    for k in range(n):
        for column, sign in ((0, 1.0), (1, -1.0)):
            objective = np.zeros(n)
            objective[k] = sign
            result = linprog(objective, A_ub=A, b_ub=b,
                             bounds=[(None, None)] * n, method="highs")
            if result.status == 3:
                raise UnboundedDomainException(f"Domain is unbounded along axis {k}.")
            if result.status != 0:
                raise DegeneratePolytopeException(f"Bounding-box LP failed: {result.message}")
            box[k, column] = sign * result.fun
    return box


def facets_from_vertices(vertices) -> tuple[np.ndarray, np.ndarray]:
    """H-representation (A, b) of the convex hull of the given points."""
    points = as_matrix(vertices)
    n = points.shape[1]
    if n == 1:
        lo, hi = float(points.min()), float(points.max())
        if hi - lo <= 0:
            raise DegeneratePolytopeException("Interval has empty interior.")
        return np.array([[-1.0], [1.0]]), np.array([-lo, hi])

    if points.shape[0] < n + 1:
        raise DegeneratePolytopeException(
            f"Need at least {n + 1} points for a full-dimensional polytope in R^{n}."
        )
    try:
        hull = ConvexHull(points)
    except QhullError as error:
        raise DegeneratePolytopeException("Vertices do not span a full-dimensional polytope.") from error

    # rows of hull.equations are (normal, offset) with normal . x + offset <= 0
    equations = _dedupe_rows(hull.equations)
    return equations[:, :-1], -equations[:, -1]


def vertices_from_halfspaces(A, b, interior_point=None) -> np.ndarray:
    """Vertices of the bounded polytope {x : A x <= b}."""
    A, b = check_halfspaces(A, b)
    if interior_point is None:
        interior_point, _ = chebyshev_center(A, b)
    n = A.shape[1]
    if n == 1:
        box = bounding_box(A, b)
        return box.reshape(2, 1)

    try:
        intersection = HalfspaceIntersection(np.c_[A, -b], np.asarray(interior_point, dtype=float))
    except QhullError as error:
        raise DegeneratePolytopeException("Halfspace intersection failed.") from error
    return _dedupe_rows(intersection.intersections)


def homogenize(A=None, b=None, vertices=None) -> PolyhedralCone:
    """Cone over a polytope at height 1, given by (A, b) or by vertices.

    The facet functionals are normalized at the witness
    u = (barycenter of the vertices, 1).
    """
    if vertices is not None:
        vertices = as_matrix(vertices)
        A, b = facets_from_vertices(vertices)
        vertices = vertices_from_halfspaces(A, b)
    elif A is not None and b is not None:
        A, b = check_halfspaces(A, b)
        bounding_box(A, b)
        center, _ = chebyshev_center(A, b)
        vertices = vertices_from_halfspaces(A, b, center)
    else:
        raise DegeneratePolytopeException("Give either (A, b) or vertices.")

    psi = np.c_[-A, b]
    witness = np.r_[vertices.mean(axis=0), 1.0]
    logger.debug(f"Homogenized polytope with {psi.shape[0]} facets in R^{A.shape[1]}.")
    return PolyhedralCone(psi, witness=witness)


def homogenize_model(model: PolytopeModel) -> PolyhedralCone:
    """homogenize for a validated PolytopeModel."""
    if model.vertices is not None:
        return homogenize(vertices=model.vertices)
    return homogenize(A=model.A, b=model.b)
