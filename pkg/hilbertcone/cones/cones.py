"""Concrete cone families.

Orthant, simplicial and polyhedral cones are described by facet
functionals psi_1, ..., psi_m; for them

    M(x/y) = max_i psi_i(x) / psi_i(y),

taken over the facets with psi_i(y) > 0, and M = inf as soon as some
facet vanishes on y but not on x. PSD and Lorentz cones delegate to
the Jordan algebra routines.
"""

import abc
import math
from typing import Any

import numpy as np
from scipy.optimize import linprog

from hilbertcone.cone_abc import Cone
from hilbertcone.config import settings
from hilbertcone.exceptions import (DimensionMismatchException,
                                    InvalidConeException)
from hilbertcone.jordan.algebra import JordanElement, eigenvalues
from hilbertcone.jordan.distances import sup_ratio as jordan_sup_ratio
from hilbertcone.models import ConeKind
from hilbertcone.utils.utils import as_matrix, frozen, negligible


def facet_sup_ratio(px: np.ndarray, py: np.ndarray, rtol: float) -> float:
    """M(x/y) from facet values px = psi(x), py = psi(y).

    Facet values of y below rtol * max|psi(y)| count as zero.
    Requires psi(y) != 0.
    """
    zero_y = negligible(py, rtol)
    x_scale = float(np.max(np.abs(px))) if px.size else 0.0
    if x_scale == 0.0:
        return 0.0
    if np.any(px[zero_y] > rtol * x_scale):
        return math.inf
    support = ~zero_y
    return max(0.0, float(np.max(px[support] / py[support])))


def facet_membership(values: np.ndarray, rtol: float, scale: float) -> tuple[bool, bool]:
    """(inside, interior) from facet values with a common tolerance scale."""
    threshold = rtol * scale
    return bool(np.all(values >= -threshold)), bool(scale > 0 and np.all(values > threshold))


class FacetCone(Cone):
    """Cone ABC for cones given by finitely many facet functionals."""

    @abc.abstractmethod
    def facet_values(self, x: np.ndarray) -> np.ndarray:
        """Evaluate all facet functionals at x."""
        raise NotImplementedError

    @property
    @abc.abstractmethod
    def n_facets(self) -> int:
        raise NotImplementedError

    def coerce(self, coords: Any) -> np.ndarray:
        x = np.array(coords, dtype=float).ravel()
        if x.size != self.ambient_dim:
            raise DimensionMismatchException(
                f"Expected {self.ambient_dim} coordinates, got {x.size}."
            )
        return x

    def membership(self, x: np.ndarray) -> tuple[bool, bool]:
        values = self.facet_values(x)
        scale = float(np.max(np.abs(values)))
        return facet_membership(values, self.rtol, scale)

    def sup_ratio(self, x: np.ndarray, y: np.ndarray) -> float:
        return facet_sup_ratio(self.facet_values(x), self.facet_values(y), self.rtol)

    def boundary_proximity(self, x: np.ndarray) -> float:
        values = self.facet_values(x)
        total = float(values.sum())
        return max(0.0, float(values.min()) / total) if total > 0 else 0.0


class Orthant(FacetCone):
    """The standard cone R^n_+; its facet functionals are the coordinates."""

    kind = ConeKind.ORTHANT

    def __init__(self, n: int, rtol: float | None = None) -> None:
        if n < 1:
            raise InvalidConeException("Orthant dimension must be positive.")
        super().__init__(n, rtol)

    @property
    def n_facets(self) -> int:
        return self.ambient_dim

    def facet_values(self, x: np.ndarray) -> np.ndarray:
        return x

    def _signature(self) -> tuple:
        return (self.kind, self.ambient_dim)


class SimplicialCone(FacetCone):
    """The cone generated by the columns of an invertible basis matrix."""

    kind = ConeKind.SIMPLICIAL

    def __init__(self, basis: Any, rtol: float | None = None,
                 condition_floor: float | None = None) -> None:
        basis = as_matrix(basis)
        if basis.shape[0] != basis.shape[1]:
            raise InvalidConeException(f"Basis must be square, got shape {basis.shape}.")
        floor = settings.condition_floor if condition_floor is None else condition_floor
        if 1 / np.linalg.cond(basis) < floor:
            raise InvalidConeException("Basis is singular or too badly conditioned.")

        super().__init__(basis.shape[0], rtol)
        self.basis = frozen(basis)
        self._inverse = frozen(np.linalg.inv(basis))

    @property
    def n_facets(self) -> int:
        return self.ambient_dim

    def facet_values(self, x: np.ndarray) -> np.ndarray:
        """Coordinates of x with respect to the basis."""
        return self._inverse @ x

    def _signature(self) -> tuple:
        return (self.kind, self.ambient_dim, self.basis.tobytes())


def _interior_witness(psi: np.ndarray) -> np.ndarray | None:
    """Find u with psi_i(u) > 0 for all i by maximizing the inscribed margin in a box."""
    m, n = psi.shape
    norms = np.linalg.norm(psi, axis=1)
    # variables (u, t): maximize t s.t. psi u >= t * |psi_i|, -1 <= u <= 1
    objective = np.r_[np.zeros(n), -1.0]
    constraints = np.c_[-psi, norms]
    result = linprog(
        objective,
        A_ub=constraints,
        b_ub=np.zeros(m),
        bounds=[(-1, 1)] * n + [(None, 1)],
        method="highs",
    )
    if result.status != 0 or -result.fun <= 1e-9:
        return None
    return result.x[:n]


class PolyhedralCone(FacetCone):
    """The cone {x : psi_i(x) >= 0 for all i} with nonempty interior.

    Each facet functional is normalized so that psi_i(u) = 1
    at the stored interior witness u.
    """

    kind = ConeKind.POLYHEDRAL

    def __init__(self, psi: Any, witness: Any | None = None, rtol: float | None = None) -> None:
        psi = as_matrix(psi)
        m, n = psi.shape
        if m == 0 or n == 0:
            raise InvalidConeException("Polyhedral cone needs at least one facet functional.")
        if np.linalg.matrix_rank(psi) < n:
            raise InvalidConeException("Facet functionals do not define a pointed cone.")

        u = _interior_witness(psi) if witness is None else np.asarray(witness, dtype=float).ravel()
        if u is None:
            raise InvalidConeException("Polyhedral cone has empty interior.")
        if u.size != n:
            raise DimensionMismatchException(f"Witness must have {n} coordinates, got {u.size}.")

        values = psi @ u
        if np.any(values <= 0):
            raise InvalidConeException("Witness is not an interior point of the cone.")

        super().__init__(n, rtol)
        self.psi = frozen(psi / values[:, None])
        self.witness = frozen(u)

    @property
    def n_facets(self) -> int:
        return self.psi.shape[0]

    def facet_values(self, x: np.ndarray) -> np.ndarray:
        return self.psi @ x

    def _signature(self) -> tuple:
        return (self.kind, self.ambient_dim, self.psi.tobytes())


class PSDCone(Cone):
    """The cone of positive semidefinite n x n matrices."""

    kind = ConeKind.PSD

    def __init__(self, n: int, rtol: float | None = None) -> None:
        if n < 1:
            raise InvalidConeException("PSD cone size must be positive.")
        super().__init__(n * n, rtol)
        self.n = n

    def coerce(self, coords: Any) -> np.ndarray:
        """Accept an n x n matrix or its row-major flattening; symmetrize."""
        matrix = np.array(coords, dtype=float)
        if matrix.size != self.n * self.n:
            raise DimensionMismatchException(
                f"Expected a {self.n} x {self.n} matrix, got {matrix.size} entries."
            )
        matrix = matrix.reshape(self.n, self.n)
        return (matrix + matrix.T) / 2

    def element(self, x: np.ndarray) -> JordanElement:
        return JordanElement.sym(x)

    def membership(self, x: np.ndarray) -> tuple[bool, bool]:
        values = eigenvalues(self.element(x))
        scale = float(np.max(np.abs(values)))
        return facet_membership(values, self.rtol, scale)

    def sup_ratio(self, x: np.ndarray, y: np.ndarray) -> float:
        return jordan_sup_ratio(self.element(x), self.element(y), self.rtol)

    def boundary_proximity(self, x: np.ndarray) -> float:
        values = eigenvalues(self.element(x))
        total = float(values.sum())
        return max(0.0, float(values[0]) / total) if total > 0 else 0.0

    def _signature(self) -> tuple:
        return (self.kind, self.n)


class LorentzCone(Cone):
    """The cone {(s, x) in R x R^n : s >= |x|}."""

    kind = ConeKind.LORENTZ

    def __init__(self, n: int, rtol: float | None = None) -> None:
        if n < 1:
            raise InvalidConeException("Lorentz cone dimension must be positive.")
        super().__init__(n + 1, rtol)
        self.n = n

    def coerce(self, coords: Any) -> np.ndarray:
        x = np.array(coords, dtype=float).ravel()
        if x.size != self.ambient_dim:
            raise DimensionMismatchException(
                f"Expected (s, x_1, ..., x_{self.n}), got {x.size} coordinates."
            )
        return x

    def element(self, x: np.ndarray) -> JordanElement:
        return JordanElement.from_vector(x)

    def membership(self, x: np.ndarray) -> tuple[bool, bool]:
        values = eigenvalues(self.element(x))
        scale = float(np.max(np.abs(values)))
        return facet_membership(values, self.rtol, scale)

    def sup_ratio(self, x: np.ndarray, y: np.ndarray) -> float:
        return jordan_sup_ratio(self.element(x), self.element(y), self.rtol)

    def boundary_proximity(self, x: np.ndarray) -> float:
        values = eigenvalues(self.element(x))
        total = float(values.sum())
        return max(0.0, float(values[0]) / total) if total > 0 else 0.0

    def _signature(self) -> tuple:
        return (self.kind, self.n)
