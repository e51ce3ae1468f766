"""Projective diameter and Birkhoff contraction of nonnegative matrices."""

import math
from itertools import combinations
from typing import Any

import numpy as np
from loguru import logger
from more_itertools import chunked

from hilbertcone.cones.cones import Orthant
from hilbertcone.cones.metrics import orthant_distances
from hilbertcone.exceptions import (EmptyMatrixException,
                                    NegativeDiameterException,
                                    NegativeEntryException)
from hilbertcone.map_abc import ConeMap
from hilbertcone.models import MatrixMapModel
from hilbertcone.utils.utils import frozen


class PositiveLinearMap(ConeMap):
    """x -> A x for a nonnegative m x n matrix A, mapping R^n_+ into R^m_+."""

    def __init__(self, entries: Any) -> None:
        matrix = np.asarray(entries, dtype=float)
        if matrix.ndim != 2 or matrix.size == 0:
            raise EmptyMatrixException("Expected a non-empty two-dimensional matrix.")
        if np.any(matrix < 0):
            raise NegativeEntryException("Matrix entries must be nonnegative.")

        super().__init__(MatrixMapModel, entries=matrix.tolist())
        self.entries = frozen(matrix)
        self.strictly_positive = bool(np.all(matrix > 0))
        self._cone = Orthant(matrix.shape[1])

    @property
    def cone(self) -> Orthant:
        return self._cone

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    @property
    def is_square(self) -> bool:
        return self.shape[0] == self.shape[1]

    def evaluate(self, x: Any) -> np.ndarray:
        return self.entries @ np.asarray(x, dtype=float)

    def power(self, p: int) -> "PositiveLinearMap":
        """The map A^p, for primitive matrices whose power is strictly positive."""
        return PositiveLinearMap(np.linalg.matrix_power(self.entries, p))


def as_positive_map(A: Any) -> PositiveLinearMap:
    return A if isinstance(A, PositiveLinearMap) else PositiveLinearMap(A)


def column_distances(A: Any) -> dict[tuple[int, int], float]:
    """Hilbert distances d(A e_i, A e_j) for all column pairs i < j."""
    A = as_positive_map(A)
    columns = A.entries.T
    pairs = list(combinations(range(A.shape[1]), 2))
    if not pairs:
        return {}
    left, right = zip(*pairs)
    values = orthant_distances(columns[list(left)], columns[list(right)])
    return dict(zip(pairs, values.tolist()))


def _cross_ratio_diameter(entries: np.ndarray) -> float:
    """log max (a_pi a_qj) / (a_pj a_qi) over all index quadruples."""
    logs = np.log(entries)
    # axes (p, q, i, j)
    ratios = (
        logs[:, None, :, None] + logs[None, :, None, :]
        - logs[:, None, None, :] - logs[None, :, :, None]
    )
    return max(0.0, float(ratios.max()))


def projective_diameter(A: Any, method: str = "columns") -> float:
    """Delta(A) = sup d(A x, A y) over the orthant.

    method="columns" takes the maximum Hilbert distance between
    columns, which may be inf for matrices with zeros.
    method="cross_ratio" evaluates the four-index ratio formula and
    applies to strictly positive matrices only; other matrices fall back
    to the column formula.
    """
    A = as_positive_map(A)
    if method == "cross_ratio" and A.strictly_positive:
        return _cross_ratio_diameter(A.entries)
    if method not in ("columns", "cross_ratio"):
        raise ValueError(f"Unknown diameter method '{method}'.")

    distances = column_distances(A)
    return max(distances.values(), default=0.0)


def diameter_pair(A: Any) -> tuple[int, int] | None:
    """The column pair realizing the projective diameter."""
    distances = column_distances(A)
    if not distances:
        return None
    return max(distances, key=distances.get)


def contraction_ratio(delta: float) -> float:
    """Birkhoff's contraction ratio tanh(delta / 4), equal to 1 for delta = inf."""
    if math.isnan(delta) or delta < 0:
        raise NegativeDiameterException(f"Projective diameter must be >= 0, got {delta}.")
    if math.isinf(delta):
        return 1.0
    return math.tanh(delta / 4)


def power_map_bound(M: float, r: float) -> float:
    """Upper bound M^r for M(f(x)/f(y)) of an order-preserving degree-r homogeneous f."""
    return math.inf if math.isinf(M) else M ** r


def _ratios(A: PositiveLinearMap, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """d(Ax, Ay) / d(x, y) for rows with d(x, y) > 0."""
    before = orthant_distances(X, Y)
    after = orthant_distances(X @ A.entries.T, Y @ A.entries.T)
    keep = (before > 0) & np.isfinite(before)
    return after[keep] / before[keep]


def empirical_contraction(A: Any, n_samples: int = 10_000, seed: int = 0,
                          batch_size: int = 4096) -> float:
    """Sampled estimate of sup d(Ax, Ay) / d(x, y) over interior pairs.

    Points are drawn log-uniformly in the interior of the orthant,
    in batches, from a single seeded generator.
    """
    A = as_positive_map(A)
    rng = np.random.default_rng(seed)
    n = A.shape[1]

    best = 0.0
    for batch in chunked(range(n_samples), batch_size):
        X = np.exp(rng.uniform(-5.0, 5.0, (len(batch), n)))
        Y = np.exp(rng.uniform(-5.0, 5.0, (len(batch), n)))
        ratios = _ratios(A, X, Y)
        if ratios.size:
            best = max(best, float(ratios.max()))
    logger.debug(f"Empirical contraction over {n_samples} samples: {best}.")
    return best


def directed_contraction(A: Any, n_grid: int = 400, step: float = 1e-6,
                         offset: float = 1e-9) -> float:
    """Near-extreme estimate of the contraction ratio.

    Samples nearby pairs x = e_i + u e_j + offset * 1 and
    x + u * step * e_j in the face spanned by the column pair (i, j)
    realizing the diameter, with u on a log grid.
    """
    A = as_positive_map(A)
    pair = diameter_pair(A)
    if pair is None:
        return 0.0
    i, j = pair

    n = A.shape[1]
    u = np.logspace(-6.0, 6.0, n_grid)
    X = np.full((n_grid, n), offset)
    X[:, i] += 1.0
    X[:, j] += u
    Y = X.copy()
    Y[:, j] += u * step

    ratios = _ratios(A, X, Y)
    return float(ratios.max()) if ratios.size else 0.0
