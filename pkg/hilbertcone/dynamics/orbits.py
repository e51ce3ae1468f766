"""Orbits of order-preserving homogeneous maps, periods and boundary diagnostics."""

from dataclasses import dataclass
from typing import Any, Literal

import numpy as np
import pandas as pd
from loguru import logger
from scipy.cluster.hierarchy import fclusterdata

from hilbertcone.cone_abc import Cone
from hilbertcone.cones.cones import Orthant
from hilbertcone.cones.metrics import distance, hilbert_distance, orthant_distances
from hilbertcone.config import settings
from hilbertcone.exceptions import (ArgumentTooSmallException,
                                    EvaluationFailureException,
                                    NotInConeException, NotInteriorException)
from hilbertcone.geometry.domain import PolytopalDomain, cross_ratio_distance
from hilbertcone.map_abc import ConeMap
from hilbertcone.models import MetricKind, OmegaLimitReport

BOUNDARY_THRESHOLD = 1e-6


@dataclass(frozen=True)
class OrbitRecord:
    """Iterates x_0, ..., x_K with residuals d(x_{k+1}, x_k)."""

    cone: Cone
    iterates: list[np.ndarray]
    residuals: list[float]
    metric: MetricKind = MetricKind.HILBERT
    detected_period: int | None = None
    boundary_proximity: float | None = None
    converged_to_boundary: bool = False
    truncated: bool = False

    def __len__(self) -> int:
        return len(self.iterates)

    @property
    def cycle(self) -> list[np.ndarray]:
        """The first detected_period iterates of the detected periodic tail."""
        if self.detected_period is None:
            return []
        start = len(self.iterates) - self.detected_period
        return self.iterates[start - start % self.detected_period:][:self.detected_period]

    def to_frame(self) -> pd.DataFrame:
        """One row per iterate: iteration, x_1..x_n, residual (empty for the last)."""
        coords = np.array([np.asarray(x, dtype=float).ravel() for x in self.iterates])
        frame = pd.DataFrame(coords, columns=[f"x_{k + 1}" for k in range(coords.shape[1])])
        frame.insert(0, "iteration", range(len(frame)))
        frame["residual"] = pd.Series(self.residuals, dtype=float)
        return frame


def _normalize(x: np.ndarray, normalization: str) -> np.ndarray:
    if normalization == "none":
        return x
    total = x.sum()
    if not total > 0:
        raise EvaluationFailureException("The map sent an iterate to the apex.")
    return x / total


def _pair_distance(cone: Cone, x: np.ndarray, y: np.ndarray, metric: MetricKind) -> float:
    if isinstance(cone, Orthant):
        return float(orthant_distances(np.asarray(x, float), np.asarray(y, float), metric)[0])
    return distance(cone.point(np.asarray(x, float)), cone.point(np.asarray(y, float)), metric)


def iterate_orbit(f: ConeMap, x0: Any, K: int, normalization: Literal["sum", "none"] = "sum",
                  metric: MetricKind | str = MetricKind.HILBERT,
                  tol: float | None = None) -> OrbitRecord:
    """Iterate g(x) = f(x) / sum(f(x)) (or f itself) K times from x0.

    On the orthant residuals are support-aware, so orbits on boundary
    faces are continued. On other cones the orbit is truncated at the
    first iterate that leaves the interior.
    """
    if K < 0:
        raise ArgumentTooSmallException(f"Number of steps must be >= 0, got {K}.")
    metric = MetricKind(metric)
    cone = f.cone
    if not cone.contains(x0):
        raise NotInConeException(f"Start point {x0!r} is not in {cone!r}.")

    x = _normalize(np.asarray(x0), normalization)
    iterates, residuals = [x], []
    truncated = False
    for k in range(K):
        image = _normalize(np.asarray(f.evaluate(x)), normalization)
        if not isinstance(cone, Orthant) and not cone.is_interior(np.asarray(image, float)):
            logger.warning(f"Orbit left the interior of {cone!r} at step {k + 1}; truncating.")
            truncated = True
            break
        residuals.append(_pair_distance(cone, image, x, metric))
        iterates.append(image)
        x = image

    record = OrbitRecord(cone=cone, iterates=iterates, residuals=residuals, metric=metric, truncated=truncated)
    period = detect_periodic_orbit(record, tol)
    proximity = cone.boundary_proximity(cone.coerce(np.asarray(iterates[-1], float)))
    logger.debug(f"Orbit of {len(iterates)} iterates, period {period}, boundary proximity {proximity}.")
    return OrbitRecord(
        cone=cone,
        iterates=iterates,
        residuals=residuals,
        metric=metric,
        detected_period=period,
        boundary_proximity=proximity,
        converged_to_boundary=proximity < BOUNDARY_THRESHOLD,
        truncated=truncated,
    )


def detect_periodic_orbit(record: OrbitRecord, tol: float | None = None) -> int | None:
    """Smallest p with d(x_{k+p}, x_k) < tol over the last window of the orbit.

    The window has length min(3p, N - p) for N iterates and must hold
    at least p comparisons.
    """
    tol = settings.period_tol if tol is None else tol
    n = len(record.iterates)
    coords = [np.asarray(x, dtype=float) for x in record.iterates]

    for p in range(1, n):
        window = min(3 * p, n - p)
        if window < p:
            break
        ks = range(n - p - window, n - p)
        if all(_pair_distance(record.cone, coords[k + p], coords[k], record.metric) < tol for k in ks):
            return p
    return None


def gromov_product(x: Any, y: Any, p: Any, geometry: PolytopalDomain | Cone) -> float:
    """(x | y)_p = (d(x, p) + d(y, p) - d(x, y)) / 2.

    Uses the cross-ratio metric on a polytopal domain and Hilbert's
    projective metric on a cone.
    """
    if isinstance(geometry, PolytopalDomain):
        def metric(a, b):
            return cross_ratio_distance(a, b, geometry)
    else:
        points = [geometry.point(point) for point in (x, y, p)]
        if not all(point.interior for point in points):
            raise NotInteriorException("The Gromov product needs interior points.")
        x, y, p = points
        metric = hilbert_distance
    return (metric(x, p) + metric(y, p) - metric(x, y)) / 2


def omega_limit_estimate(f: ConeMap, x0: Any, K: int, normalization: Literal["sum", "none"] = "sum",
                         cluster_tol: float = 1e-6) -> OmegaLimitReport:
    """Diagnostic summary of the last quarter of the orbit.

    Normalized tail iterates are clustered; the report carries the cluster
    representatives, the affine dimension of their hull and the smallest
    boundary proximity along the tail.
    """
    if K == 0:
        return OmegaLimitReport()

    record = iterate_orbit(f, x0, K, normalization)
    tail_length = max(1, len(record.iterates) // 4)
    tail = np.array([np.asarray(x, dtype=float) for x in record.iterates[-tail_length:]])
    tail = tail / tail.sum(axis=1, keepdims=True)

    if tail_length == 1:
        labels = np.ones(1, dtype=int)
    else:
        labels = fclusterdata(tail, t=cluster_tol, criterion="distance")
    representatives = np.array([tail[labels == label].mean(axis=0) for label in np.unique(labels)])
    hull_dimension = int(np.linalg.matrix_rank(representatives - representatives[0])) if len(representatives) > 1 else 0
    proximity = min(record.cone.boundary_proximity(record.cone.coerce(x)) for x in tail)

    return OmegaLimitReport(
        n_iterates=len(record.iterates),
        tail_length=tail_length,
        clusters=len(representatives),
        cluster_representatives=representatives.tolist(),
        min_boundary_proximity=proximity,
        hull_dimension=hull_dimension,
        converged_to_boundary=proximity < BOUNDARY_THRESHOLD,
    )
