"""Finite metric spaces, contraction maps and iterated function systems on them."""

import abc
from dataclasses import dataclass
from typing import Any

import numpy as np
from loguru import logger
from scipy.spatial.distance import cdist

from hilbertcone.exceptions import (DimensionMismatchException,
                                    HypothesisViolatedException,
                                    InvalidConeException)
from hilbertcone.models import (AffineMapModel, ContractionConstants,
                                HolderConeParams, IFSSpecModel, IndexMapModel,
                                WeightModel)
from hilbertcone.transfer.holder_cone import (cone_membership,
                                              contraction_constants,
                                              interpolation_excess)
from hilbertcone.utils.utils import as_vector, frozen

_METRIC_ATOL = 1e-12


class DiscreteSpace:
    """Points s_1, ..., s_N with a distance matrix rho and diameter max rho > 0."""

    def __init__(self, points: Any, rho: Any | None = None, check_metric: bool = True) -> None:
        points = np.asarray(points, dtype=float)
        if points.ndim == 1:
            points = points.reshape(-1, 1)
        rho = cdist(points, points) if rho is None else np.asarray(rho, dtype=float)

        n = points.shape[0]
        if rho.shape != (n, n):
            raise DimensionMismatchException(f"rho must be {n} x {n}, got {rho.shape}.")
        if check_metric:
            _check_metric(rho)

        self.points = frozen(points)
        self.rho = frozen(rho)
        self.diameter = float(rho.max())
        if not self.diameter > 0:
            raise InvalidConeException("The space must have positive diameter.")

    @classmethod
    def grid(cls, n: int = 256, lo: float = 0.0, hi: float = 1.0) -> "DiscreteSpace":
        """Uniform grid on [lo, hi] with rho(s, t) = |s - t|."""
        return cls(np.linspace(lo, hi, n), check_metric=False)

    def __len__(self) -> int:
        return self.points.shape[0]

    @property
    def is_interval(self) -> bool:
        """Sorted scalar points with the distance |s - t|."""
        if self.points.shape[1] != 1:
            return False
        line = self.points[:, 0]
        return bool(np.all(np.diff(line) > 0)
                    and np.allclose(self.rho, np.abs(line[:, None] - line[None, :])))

    @property
    def line(self) -> np.ndarray:
        return self.points[:, 0]

    def __repr__(self) -> str:
        return f"DiscreteSpace(n={len(self)}, diameter={self.diameter})"


def _check_metric(rho: np.ndarray) -> None:
    if not np.allclose(rho, rho.T, rtol=0, atol=_METRIC_ATOL):
        raise InvalidConeException("rho must be symmetric.")
    if np.any(np.abs(np.diag(rho)) > _METRIC_ATOL) or np.any(rho < -_METRIC_ATOL):
        raise InvalidConeException("rho must be nonnegative with zero diagonal.")
    for k in range(rho.shape[0]):
        if np.any(rho > rho[:, [k]] + rho[[k], :] + _METRIC_ATOL):
            raise InvalidConeException(f"rho violates the triangle inequality through point {k}.")


class ContractionMap(abc.ABC):
    """A map theta of the space into itself, acting on functions by composition."""

    @abc.abstractmethod
    def compose(self, f: np.ndarray, space: DiscreteSpace) -> np.ndarray:
        """The function f o theta on the points of the space."""
        raise NotImplementedError

    @abc.abstractmethod
    def lipschitz_ratio(self, space: DiscreteSpace) -> float:
        """Realized Lipschitz constant of theta on the space."""
        raise NotImplementedError

    def interpolation_mesh(self, space: DiscreteSpace) -> float:
        """Largest cell width used when f o theta is interpolated; 0 for exact compositions."""
        return 0.0


@dataclass(frozen=True)
class AffineMap(ContractionMap):
    """theta(s) = a s + b on an interval grid; f o theta is linearly interpolated."""

    a: float
    b: float

    def _images(self, space: DiscreteSpace) -> np.ndarray:
        if not space.is_interval:
            raise DimensionMismatchException("Affine maps need an interval grid.")
        line = space.line
        images = self.a * line + self.b
        span = line[-1] - line[0]
        if images.min() < line[0] - 1e-12 * span or images.max() > line[-1] + 1e-12 * span:
            raise HypothesisViolatedException(f"{self!r} does not map the interval into itself.")
        return np.clip(images, line[0], line[-1])

    def compose(self, f: np.ndarray, space: DiscreteSpace) -> np.ndarray:
        return np.interp(self._images(space), space.line, f)

    def lipschitz_ratio(self, space: DiscreteSpace) -> float:
        self._images(space)
        return abs(self.a)

    def interpolation_mesh(self, space: DiscreteSpace) -> float:
        images = self._images(space)
        line = space.line
        if np.all(np.isin(images, line)):
            return 0.0
        return float(np.max(np.diff(line)))


@dataclass(frozen=True)
class IndexMap(ContractionMap):
    """theta given by the index of the image of every point."""

    indices: tuple[int, ...]

    def _check(self, space: DiscreteSpace) -> np.ndarray:
        indices = np.asarray(self.indices, dtype=int)
        if indices.size != len(space) or indices.min() < 0 or indices.max() >= len(space):
            raise DimensionMismatchException("Index map does not match the space.")
        return indices

    def compose(self, f: np.ndarray, space: DiscreteSpace) -> np.ndarray:
        return f[self._check(space)]

    def lipschitz_ratio(self, space: DiscreteSpace) -> float:
        indices = self._check(space)
        image_rho = space.rho[np.ix_(indices, indices)]
        off_diagonal = ~np.eye(len(space), dtype=bool)
        return float(np.max(image_rho[off_diagonal] / space.rho[off_diagonal]))


class IteratedFunctionSystem:
    """Contraction maps theta_i with weights b_i and Hoelder parameters (M0, lambda).

    Construction checks that every map is a contraction with ratio at
    most lipschitz_bound < 1 and that every weight lies in K(M0, lambda).
    """

    def __init__(self, space: DiscreteSpace, maps: list[ContractionMap], weights: list[Any],
                 lipschitz_bound: float, M0: float, lam: float = 1.0) -> None:
        if len(maps) != len(weights) or not maps:
            raise DimensionMismatchException("Every map needs exactly one weight.")
        if not 0 < lipschitz_bound < 1:
            raise HypothesisViolatedException("The Lipschitz bound must lie in (0, 1).")

        self.space = space
        self.maps = list(maps)
        self.weights = [frozen(as_vector(weight)) for weight in weights]
        self.lipschitz_bound = float(lipschitz_bound)
        self.params = HolderConeParams(M=M0, lam=lam)

        for index, theta in enumerate(self.maps):
            ratio = theta.lipschitz_ratio(space)
            if ratio > self.lipschitz_bound * (1 + 1e-12):
                raise HypothesisViolatedException(
                    f"Map {index} has Lipschitz ratio {ratio} above the bound {self.lipschitz_bound}."
                )
        for index, weight in enumerate(self.weights):
            if weight.size != len(space):
                raise DimensionMismatchException(f"Weight {index} has {weight.size} values, expected {len(space)}.")
            membership = cone_membership(weight, self.params, space)
            if not membership:
                raise HypothesisViolatedException(
                    f"Weight {index} is not in K({M0}, {lam}); worst pair {membership.worst_pair}."
                )
        logger.debug(f"Validated IFS with {len(self.maps)} maps on {space!r}.")

    @property
    def M0(self) -> float:
        return self.params.M

    @property
    def lam(self) -> float:
        return self.params.lam

    @property
    def has_nonzero_weight(self) -> bool:
        return any(np.any(weight != 0) for weight in self.weights)

    def discretization_excess(self, M: float) -> float:
        """Hoelder constant lost to interpolated compositions when L acts on K(M, lambda)."""
        mesh = max(theta.interpolation_mesh(self.space) for theta in self.maps)
        if mesh == 0.0:
            return 0.0
        rho = self.space.rho[~np.eye(len(self.space), dtype=bool)]
        return interpolation_excess(M, self.lam, mesh, float(rho.min()))

    def contraction_constants(self, M2: float) -> ContractionConstants:
        return contraction_constants(self.M0, M2, self.lam, self.lipschitz_bound, self.space.diameter,
                                     excess=self.discretization_excess(M2))

    @classmethod
    def from_model(cls, model: IFSSpecModel) -> "IteratedFunctionSystem":
        if model.grid is not None:
            space = DiscreteSpace.grid(model.grid.n, model.grid.lo, model.grid.hi)
        else:
            space = DiscreteSpace(model.points, model.rho)

        maps = [_map_from_model(theta) for theta in model.maps]
        weights = [_weight_values(weight, space) for weight in model.weights]
        return cls(space, maps, weights, model.lipschitz_bound, model.M0, model.lam)


def _map_from_model(model: AffineMapModel | IndexMapModel) -> ContractionMap:
    match model:
        case AffineMapModel(a=a, b=b):
            return AffineMap(a, b)
        case IndexMapModel(indices=indices):
            return IndexMap(tuple(indices))


def _weight_values(model: WeightModel, space: DiscreteSpace) -> np.ndarray:
    if model.table is not None:
        return as_vector(model.table)
    if space.points.shape[1] != 1:
        raise DimensionMismatchException("Affine weights need scalar points.")
    slope, intercept = model.affine
    return slope * space.line + intercept

