"""ABC and point type for closed cones with nonempty interior."""

import abc
from dataclasses import dataclass
from typing import Any

import numpy as np

from hilbertcone.config import settings
from hilbertcone.exceptions import (DimensionMismatchException,
                                    NotInConeException)
from hilbertcone.models import ConeKind


class Cone(abc.ABC):
    """Cone ABC.

    A concrete cone knows how to coerce raw coordinates into its
    ambient space, how to decide membership, and how to evaluate
    M(x/y) = inf{beta : x <=_C beta y}. Everything else
    (m, parts, the projective metrics) is derived from M.

    Cones are immutable after construction and can be shared freely.
    """

    kind: ConeKind

    def __init__(self, ambient_dim: int, rtol: float | None = None) -> None:
        """Initialize a Cone."""
        self.ambient_dim = int(ambient_dim)
        self.rtol = settings.comparability_rtol if rtol is None else rtol

    @abc.abstractmethod
    def coerce(self, coords: Any) -> np.ndarray:
        """Cast raw coordinates to the cone's array layout.

        Raise DimensionMismatchException on a shape mismatch.
        """
        raise NotImplementedError

    @abc.abstractmethod
    def membership(self, x: np.ndarray) -> tuple[bool, bool]:
        """Return (x in C, x in the interior of C) within tolerance."""
        raise NotImplementedError

    @abc.abstractmethod
    def sup_ratio(self, x: np.ndarray, y: np.ndarray) -> float:
        """Evaluate M(x/y) for a nonzero y; math.inf if y does not dominate x."""
        raise NotImplementedError

    @abc.abstractmethod
    def boundary_proximity(self, x: np.ndarray) -> float:
        """Scale-invariant distance-to-boundary proxy; 0 exactly on the boundary."""
        raise NotImplementedError

    @abc.abstractmethod
    def _signature(self) -> tuple:
        """Hashable description used for cone equality."""
        raise NotImplementedError

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cone):
            return NotImplemented
        return self._signature() == other._signature()

    def __hash__(self) -> int:
        return hash(self._signature())

    def __repr__(self) -> str:
        return f"{type(self).__name__}(ambient_dim={self.ambient_dim})"

    def is_zero(self, x: np.ndarray) -> bool:
        """Check whether x is the apex of the cone."""
        return not np.any(x)

    def contains(self, coords: Any) -> bool:
        return self.membership(self.coerce(coords))[0]

    def is_interior(self, coords: Any) -> bool:
        return self.membership(self.coerce(coords))[1]

    def point(self, coords: Any) -> "PointVec":
        """Construct a PointVec, raising NotInConeException for outside points."""
        x = self.coerce(coords)
        inside, interior = self.membership(x)
        if not inside:
            raise NotInConeException(f"Point {x.tolist()} is not in {self!r}.")
        x.flags.writeable = False
        return PointVec(coords=x, cone=self, interior=interior)


@dataclass(frozen=True, eq=False)
class PointVec:
    """A cone element together with its cone and an interior flag."""

    coords: np.ndarray
    cone: Cone
    interior: bool

    def __array__(self, dtype=None, copy=None) -> np.ndarray:
        return self.coords if dtype is None else self.coords.astype(dtype)


def check_same_cone(x: PointVec, y: PointVec) -> Cone:
    """Return the common cone of x and y."""
    if x.cone != y.cone:
        raise DimensionMismatchException(
            f"Points live in different cones: {x.cone!r} and {y.cone!r}."
        )
    return x.cone
