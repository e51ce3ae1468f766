"""Jordan product, spectral decomposition and functional calculus.

Two Euclidean Jordan algebras are supported:

- Sym(n), symmetric n x n matrices with A o B = (AB + BA) / 2,
  whose cone of squares is the PSD cone;
- the spin factor R x R^n with (s, x) o (t, y) = (st + <x, y>, sy + tx),
  whose cone of squares is the Lorentz cone.
"""

from collections.abc import Callable
from dataclasses import dataclass
from enum import StrEnum
from typing import Any

import numpy as np
import scipy.linalg

from hilbertcone.config import settings
from hilbertcone.exceptions import (AlgebraMismatchException,
                                    DimensionMismatchException,
                                    NotInteriorException,
                                    NotInvertibleException)


class Algebra(StrEnum):
    """Supported Euclidean Jordan algebras."""
    SYM = "sym"
    SPIN = "spin"


@dataclass(frozen=True, eq=False)
class JordanElement:
    """An element of Sym(n) (a symmetric matrix) or of the spin factor ((s, x) as one vector)."""

    algebra: Algebra
    data: np.ndarray

    @classmethod
    def sym(cls, matrix: Any) -> "JordanElement":
        """Construct a Sym(n) element; the input is symmetrized."""
        matrix = np.atleast_2d(np.asarray(matrix, dtype=float))
        if matrix.shape[0] != matrix.shape[1]:
            raise DimensionMismatchException(f"Expected a square matrix, got shape {matrix.shape}.")
        return cls(Algebra.SYM, (matrix + matrix.T) / 2)

    @classmethod
    def spin(cls, s: float, x: Any = ()) -> "JordanElement":
        """Construct the spin factor element (s, x)."""
        return cls(Algebra.SPIN, np.concatenate(([float(s)], np.asarray(x, dtype=float).ravel())))

    @classmethod
    def from_vector(cls, vector: Any) -> "JordanElement":
        """Construct a spin factor element from the packed vector (s, x_1, ..., x_n)."""
        vector = np.asarray(vector, dtype=float).ravel()
        return cls.spin(vector[0], vector[1:])

    @classmethod
    def unit(cls, algebra: Algebra, n: int) -> "JordanElement":
        """The unit e: the identity matrix or (1, 0)."""
        match algebra:
            case Algebra.SYM:
                return cls(Algebra.SYM, np.eye(n))
            case Algebra.SPIN:
                return cls.spin(1.0, np.zeros(n))

    @property
    def n(self) -> int:
        """Matrix size for Sym(n), vector part length for the spin factor."""
        return self.data.shape[0] if self.algebra is Algebra.SYM else self.data.size - 1

    @property
    def s(self) -> float:
        return float(self.data[0])

    @property
    def x(self) -> np.ndarray:
        return self.data[1:]

    def _new(self, data: np.ndarray) -> "JordanElement":
        return JordanElement(self.algebra, data)

    def __add__(self, other: "JordanElement") -> "JordanElement":
        check_same_algebra(self, other)
        return self._new(self.data + other.data)

    def __sub__(self, other: "JordanElement") -> "JordanElement":
        check_same_algebra(self, other)
        return self._new(self.data - other.data)

    def __mul__(self, scalar: float) -> "JordanElement":
        return self._new(scalar * self.data)

    __rmul__ = __mul__

    def __neg__(self) -> "JordanElement":
        return self._new(-self.data)

    def allclose(self, other: "JordanElement", atol: float = 1e-10) -> bool:
        check_same_algebra(self, other)
        return bool(np.allclose(self.data, other.data, rtol=0, atol=atol))


@dataclass(frozen=True)
class SpectralDecomposition:
    """x = sum_i eigenvalues[i] * idempotents[i] with distinct eigenvalues."""

    eigenvalues: np.ndarray
    idempotents: list[JordanElement]

    def reconstruct(self) -> JordanElement:
        """Sum lambda_i c_i."""
        return sum(
            (value * idempotent for value, idempotent in zip(self.eigenvalues, self.idempotents)),
            start=0 * self.idempotents[0],
        )

    @property
    def lambda_plus(self) -> float:
        return float(self.eigenvalues.max())

    @property
    def lambda_minus(self) -> float:
        return float(self.eigenvalues.min())


def check_same_algebra(a: JordanElement, b: JordanElement) -> None:
    """Raise AlgebraMismatchException unless a and b live in the same algebra."""
    if a.algebra is not b.algebra or a.data.shape != b.data.shape:
        raise AlgebraMismatchException(
            f"Elements of {a.algebra}({a.n}) and {b.algebra}({b.n}) cannot be combined."
        )


def jordan_product(a: JordanElement, b: JordanElement) -> JordanElement:
    """The Jordan product a o b."""
    check_same_algebra(a, b)
    match a.algebra:
        case Algebra.SYM:
            product = a.data @ b.data
            return a._new((product + product.T) / 2)
        case Algebra.SPIN:
            return JordanElement.spin(a.s * b.s + a.x @ b.x, a.s * b.x + b.s * a.x)


def square(a: JordanElement) -> JordanElement:
    return jordan_product(a, a)


def trace(a: JordanElement) -> float:
    """Jordan trace: the sum of eigenvalues with multiplicity."""
    match a.algebra:
        case Algebra.SYM:
            return float(np.trace(a.data))
        case Algebra.SPIN:
            return 2 * a.s


def inner_product(a: JordanElement, b: JordanElement) -> float:
    """Trace inner product <a | b> = tr(a o b)."""
    return trace(jordan_product(a, b))


def eigenvalues(a: JordanElement) -> np.ndarray:
    """Eigenvalues with multiplicity, in ascending order."""
    match a.algebra:
        case Algebra.SYM:
            return scipy.linalg.eigvalsh(a.data)
        case Algebra.SPIN:
            radius = np.linalg.norm(a.x)
            return np.array([a.s - radius, a.s + radius])


def _cluster(values: np.ndarray, tol: float) -> list[np.ndarray]:
    """Group sorted eigenvalue indices whose neighbours differ by at most tol."""
    order = np.argsort(values)
    scale = max(1.0, float(np.max(np.abs(values))))
    groups = [[order[0]]]
    for previous, current in zip(order, order[1:]):
        if values[current] - values[previous] <= tol * scale:
            groups[-1].append(current)
        else:
            groups.append([current])
    return [np.array(group) for group in groups]


def spectral_decompose(a: JordanElement, cluster_tol: float | None = None) -> SpectralDecomposition:
    """Decompose a into distinct eigenvalues and a complete system of orthogonal idempotents."""
    tol = settings.eigen_cluster_tol if cluster_tol is None else cluster_tol

    match a.algebra:
        case Algebra.SYM:
            values, vectors = scipy.linalg.eigh(a.data)
            groups = _cluster(values, tol)
            idempotents = [
                a._new(vectors[:, group] @ vectors[:, group].T)
                for group in groups
            ]
            return SpectralDecomposition(
                eigenvalues=np.array([values[group].mean() for group in groups]),
                idempotents=idempotents,
            )
        case Algebra.SPIN:
            radius = float(np.linalg.norm(a.x))
            if radius <= tol * max(1.0, abs(a.s)):
                return SpectralDecomposition(
                    eigenvalues=np.array([a.s]),
                    idempotents=[JordanElement.unit(Algebra.SPIN, a.n)],
                )
            direction = a.x / radius
            return SpectralDecomposition(
                eigenvalues=np.array([a.s - radius, a.s + radius]),
                idempotents=[
                    JordanElement.spin(0.5, -0.5 * direction),
                    JordanElement.spin(0.5, 0.5 * direction),
                ],
            )


def spectral_apply(a: JordanElement, func: Callable[[np.ndarray], np.ndarray]) -> JordanElement:
    """Functional calculus: sum_i func(lambda_i) c_i."""
    decomposition = spectral_decompose(a)
    return SpectralDecomposition(
        eigenvalues=func(decomposition.eigenvalues),
        idempotents=decomposition.idempotents,
    ).reconstruct()


def is_interior(a: JordanElement, rtol: float | None = None) -> bool:
    """x lies in the interior of the cone of squares iff all eigenvalues are positive."""
    rtol = settings.interior_rtol if rtol is None else rtol
    values = eigenvalues(a)
    return bool(values[-1] > 0 and values[0] > rtol * values[-1])


def _require_interior(a: JordanElement) -> None:
    if not is_interior(a):
        raise NotInteriorException("Element is not in the interior of its symmetric cone.")


def inverse(a: JordanElement) -> JordanElement:
    values = eigenvalues(a)
    scale = max(1.0, float(np.max(np.abs(values))))
    if np.min(np.abs(values)) <= settings.interior_rtol * scale:
        raise NotInvertibleException("Element has a zero eigenvalue.")
    return spectral_apply(a, np.reciprocal)


def sqrt(a: JordanElement) -> JordanElement:
    _require_interior(a)
    return spectral_apply(a, np.sqrt)


def inverse_sqrt(a: JordanElement) -> JordanElement:
    _require_interior(a)
    return spectral_apply(a, lambda values: 1 / np.sqrt(values))


def power(a: JordanElement, exponent: float) -> JordanElement:
    _require_interior(a)
    return spectral_apply(a, lambda values: values ** exponent)


def log(a: JordanElement) -> JordanElement:
    _require_interior(a)
    return spectral_apply(a, np.log)


def exp(a: JordanElement) -> JordanElement:
    return spectral_apply(a, np.exp)


def quadratic_rep_apply(x: JordanElement, w: JordanElement) -> JordanElement:
    """P(x) w = 2 x o (x o w) - x^2 o w."""
    check_same_algebra(x, w)
    return 2 * jordan_product(x, jordan_product(x, w)) - jordan_product(square(x), w)
