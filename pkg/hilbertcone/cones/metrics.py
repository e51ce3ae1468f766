"""Order functionals and projective metrics on cones.

Conventions for the apex: d(0, 0) = 0, and any metric between 0 and
a nonzero point is +inf (different parts). m(x/y) is computed as
1 / M(y/x) with 1 / inf = 0.
"""

import math

import numpy as np

from hilbertcone.cone_abc import Cone, PointVec, check_same_cone
from hilbertcone.config import settings
from hilbertcone.exceptions import NotInteriorException, ZeroDenominatorException
from hilbertcone.models import MetricKind, OrderBounds
from hilbertcone.utils.utils import safe_log


def _sup_ratio(cone: Cone, x: PointVec, y: PointVec) -> float:
    """M(x/y) including the apex cases."""
    if cone.is_zero(y.coords):
        return 0.0 if cone.is_zero(x.coords) else math.inf
    if cone.is_zero(x.coords):
        return 0.0
    return cone.sup_ratio(x.coords, y.coords)


def _ratio_pair(x: PointVec, y: PointVec) -> tuple[float, float]:
    cone = check_same_cone(x, y)
    return _sup_ratio(cone, x, y), _sup_ratio(cone, y, x)


def order_bounds(x: PointVec, y: PointVec) -> OrderBounds:
    """Compute M(x/y) and m(x/y) for a nonzero y."""
    cone = check_same_cone(x, y)
    if cone.is_zero(y.coords):
        raise ZeroDenominatorException("order_bounds requires y != 0.")

    upper = _sup_ratio(cone, x, y)
    reverse = _sup_ratio(cone, y, x)
    lower = 0.0 if math.isinf(reverse) else 1 / reverse
    return OrderBounds(M=upper, m=min(lower, upper), comparable=not math.isinf(upper))


def same_part(x: PointVec, y: PointVec) -> bool:
    """Check whether x and y dominate each other."""
    forward, backward = _ratio_pair(x, y)
    cone = x.cone
    if cone.is_zero(x.coords) or cone.is_zero(y.coords):
        return cone.is_zero(x.coords) and cone.is_zero(y.coords)
    return not (math.isinf(forward) or math.isinf(backward))


def hilbert_distance(x: PointVec, y: PointVec) -> float:
    """Hilbert's projective metric log(M(x/y) / m(x/y))."""
    forward, backward = _ratio_pair(x, y)
    cone = x.cone
    if cone.is_zero(x.coords) and cone.is_zero(y.coords):
        return 0.0
    if cone.is_zero(x.coords) or cone.is_zero(y.coords):
        return math.inf
    if math.isinf(forward) or math.isinf(backward):
        return math.inf
    return max(0.0, math.log(forward) + math.log(backward))


def thompson_distance(x: PointVec, y: PointVec) -> float:
    """Thompson's metric max(log M(x/y), log M(y/x))."""
    forward, backward = _ratio_pair(x, y)
    cone = x.cone
    if cone.is_zero(x.coords) and cone.is_zero(y.coords):
        return 0.0
    if cone.is_zero(x.coords) or cone.is_zero(y.coords):
        return math.inf
    return max(0.0, safe_log(forward), safe_log(backward))


def funk_weak_metric(x: PointVec, y: PointVec) -> float:
    """Funk's weak metric log M(x/y) for interior points; not symmetric."""
    check_same_cone(x, y)
    if not (x.interior and y.interior):
        raise NotInteriorException("The Funk metric is defined for interior points only.")
    return math.log(x.cone.sup_ratio(x.coords, y.coords))


_METRICS = {
    MetricKind.HILBERT: hilbert_distance,
    MetricKind.THOMPSON: thompson_distance,
    MetricKind.FUNK: funk_weak_metric,
}


def distance(x: PointVec, y: PointVec, metric: MetricKind | str = MetricKind.HILBERT) -> float:
    """Dispatch to one of the projective metrics by name."""
    return _METRICS[MetricKind(metric)](x, y)


def orthant_distances(X: np.ndarray, Y: np.ndarray,
                      metric: MetricKind | str = MetricKind.HILBERT,
                      rtol: float | None = None) -> np.ndarray:
    """Row-wise Hilbert or Thompson distances of nonnegative arrays on the orthant.

    Coordinates below rtol times the largest coordinate of their row count
    as zero: coordinates vanishing in both rows are ignored, a coordinate
    vanishing in one row only gives +inf, and two zero rows are at distance 0.
    """
    rtol = settings.comparability_rtol if rtol is None else rtol
    X, Y = np.atleast_2d(X).astype(float), np.atleast_2d(Y).astype(float)
    zero_x, zero_y = _negligible_rows(X, rtol), _negligible_rows(Y, rtol)
    mismatch = np.any(zero_x != zero_y, axis=1)
    with np.errstate(divide="ignore", invalid="ignore"):
        diff = np.where(zero_x | zero_y, np.nan, np.log(X) - np.log(Y))
    upper = np.fmax.reduce(diff, axis=1)
    lower = np.fmin.reduce(diff, axis=1)

    if MetricKind(metric) == MetricKind.THOMPSON:
        result = np.fmax(upper, -lower)
    else:
        result = upper - lower
    result = np.where(np.isnan(result), 0.0, np.maximum(result, 0.0))
    return np.where(mismatch, np.inf, result)


def _negligible_rows(X: np.ndarray, rtol: float) -> np.ndarray:
    return np.abs(X) <= rtol * np.max(np.abs(X), axis=1, keepdims=True)
