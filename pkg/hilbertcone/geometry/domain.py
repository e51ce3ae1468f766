"""Hilbert's cross-ratio metric on bounded polytopal domains."""

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Any

import numpy as np

from hilbertcone.cones.cones import PolyhedralCone
from hilbertcone.cones.metrics import hilbert_distance
from hilbertcone.cones.polytopes import (bounding_box, chebyshev_center,
                                         check_halfspaces,
                                         facets_from_vertices, homogenize)
from hilbertcone.config import settings
from hilbertcone.exceptions import (DimensionMismatchException,
                                    NotInteriorException,
                                    PointsCoincideException,
                                    UnboundedDomainException)
from hilbertcone.models import PolytopeModel
from hilbertcone.utils.utils import as_vector, frozen


class PolytopalDomain:
    """The open polytope {x : A x < b} with a stored interior witness.

    Boundedness is certified at construction by maximizing and
    minimizing every coordinate; pass check_bounded=False to skip it.
    """

    def __init__(self, A: Any, b: Any, witness: Any | None = None,
                 check_bounded: bool = True) -> None:
        A, b = check_halfspaces(A, b)
        if check_bounded:
            bounding_box(A, b)

        if witness is None:
            witness, _ = chebyshev_center(A, b)
        witness = as_vector(witness)
        if witness.size != A.shape[1]:
            raise DimensionMismatchException(
                f"Witness must have {A.shape[1]} coordinates, got {witness.size}."
            )

        self.A = frozen(A)
        self.b = frozen(b)
        self.witness = frozen(witness)
        if not self.is_interior(witness):
            raise NotInteriorException("Witness does not strictly satisfy all inequalities.")

    @classmethod
    def from_vertices(cls, vertices: Any) -> "PolytopalDomain":
        """Domain bounded by the convex hull of the given points."""
        A, b = facets_from_vertices(vertices)
        return cls(A, b)

    @classmethod
    def from_model(cls, model: PolytopeModel) -> "PolytopalDomain":
        if model.vertices is not None:
            return cls.from_vertices(model.vertices)
        return cls(model.A, model.b)

    @property
    def dim(self) -> int:
        return self.A.shape[1]

    def slack(self, x: np.ndarray) -> np.ndarray:
        """b - A x; positive entries mean strict satisfaction."""
        return self.b - self.A @ x

    def is_interior(self, x: Any) -> bool:
        x = as_vector(x)
        scale = np.abs(self.b) + np.abs(self.A) @ np.abs(x)
        return bool(np.all(self.slack(x) > settings.interior_rtol * np.maximum(scale, 1.0)))

    @cached_property
    def cone(self) -> PolyhedralCone:
        """The cone over the domain at height 1."""
        return homogenize(A=self.A, b=self.b)

    def homogenize(self) -> PolyhedralCone:
        return self.cone

    def __repr__(self) -> str:
        return f"PolytopalDomain(dim={self.dim}, facets={self.A.shape[0]})"


@dataclass(frozen=True)
class ChordEndpoints:
    """Boundary points of the chord through x and y.

    The line is parametrized as x + t (y - x); x_prime sits at
    t_minus < 0 and y_prime at t_plus > 1.
    """

    x_prime: np.ndarray
    y_prime: np.ndarray
    t_minus: float
    t_plus: float


def _interior_pair(x: Any, y: Any, domain: PolytopalDomain) -> tuple[np.ndarray, np.ndarray]:
    x, y = as_vector(x), as_vector(y)
    if x.size != domain.dim or y.size != domain.dim:
        raise DimensionMismatchException(f"Points must have {domain.dim} coordinates.")
    for point in (x, y):
        if not domain.is_interior(point):
            raise NotInteriorException(f"Point {point.tolist()} is not interior to {domain!r}.")
    return x, y


def _chord(x: np.ndarray, y: np.ndarray, domain: PolytopalDomain) -> ChordEndpoints:
    direction = y - x
    rates = domain.A @ direction
    slack = domain.slack(x)
    parallel = np.abs(rates) <= settings.parallel_tol * (
        np.linalg.norm(domain.A, axis=1) * np.linalg.norm(direction)
    )
    exits, entries = (rates > 0) & ~parallel, (rates < 0) & ~parallel
    if not (exits.any() and entries.any()):
        raise UnboundedDomainException("The line through x and y leaves the domain only on one side.")

    t_plus = float(np.min(slack[exits] / rates[exits]))
    t_minus = float(np.max(slack[entries] / rates[entries]))
    return ChordEndpoints(
        x_prime=x + t_minus * direction,
        y_prime=x + t_plus * direction,
        t_minus=t_minus,
        t_plus=t_plus,
    )


def boundary_intersections(x: Any, y: Any, domain: PolytopalDomain) -> ChordEndpoints:
    """Clip the line through x and y against the facets of the domain."""
    x, y = _interior_pair(x, y, domain)
    if not np.any(x - y):
        raise PointsCoincideException("x and y coincide; the chord is undefined.")
    return _chord(x, y, domain)


def cross_ratio_distance(x: Any, y: Any, domain: PolytopalDomain,
                         ord: float | None = None) -> float:
    """Hilbert's metric as the log of the cross ratio of x, y and the chord endpoints.

    With ord=None the ratios are read off the line parameters;
    otherwise they are computed with numpy's vector norm of that order.
    """
    x, y = _interior_pair(x, y, domain)
    if not np.any(x - y):
        return 0.0

    chord = _chord(x, y, domain)
    if ord is None:
        ratio = ((1 - chord.t_minus) / -chord.t_minus) * (chord.t_plus / (chord.t_plus - 1))
    else:
        norm = np.linalg.norm
        ratio = (
            norm(chord.x_prime - y, ord) / norm(chord.x_prime - x, ord)
            * norm(chord.y_prime - x, ord) / norm(chord.y_prime - y, ord)
        )
    return max(0.0, math.log(ratio))


def birkhoff_distance(x: Any, y: Any, domain: PolytopalDomain) -> float:
    """Hilbert's projective metric between (x, 1) and (y, 1) on the cone over the domain."""
    x, y = _interior_pair(x, y, domain)
    cone = domain.cone
    return hilbert_distance(cone.point(np.r_[x, 1.0]), cone.point(np.r_[y, 1.0]))
