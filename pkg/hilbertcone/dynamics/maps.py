"""Min-max maps, user callables and the map factory for orbit computations."""

from functools import cache
from typing import Any

import numpy as np

from hilbertcone.birkhoff.contraction import PositiveLinearMap
from hilbertcone.cone_abc import Cone
from hilbertcone.cones.cones import Orthant
from hilbertcone.exceptions import (DimensionMismatchException,
                                    EvaluationFailureException,
                                    NegativeInputException)
from hilbertcone.map_abc import ConeMap
from hilbertcone.models import (CallableMapModel, MapModel, MatrixMapModel,
                                MinMaxExampleModel, MinMaxMapModel)

# f1 = (3 x1 ^ x2) v (3 x2 ^ x3)
# f2 = (3 x1 ^ x3) v (3 x3 ^ x2)
# f3 = (3 x2 ^ x1) v (3 x3 ^ x1)
MINMAX_EXAMPLE_TERMS = [
    [[(3, 0), (1, 1)], [(3, 1), (1, 2)]],
    [[(3, 0), (1, 2)], [(3, 2), (1, 1)]],
    [[(3, 1), (1, 0)], [(3, 2), (1, 0)]],
]


class MinMaxMap(ConeMap):
    """f_i(x) = max over terms of min over (coef, j) of coef * x_j.

    Integer coefficients are kept as int, so integer and Fraction
    inputs are evaluated exactly.
    """

    def __init__(self, terms: list) -> None:
        super().__init__(MinMaxMapModel, terms=terms)
        self.terms = [
            [[(int(c) if float(c).is_integer() else c, j) for c, j in term] for term in coordinate]
            for coordinate in self.bindings.terms
        ]
        self._cone = Orthant(len(self.terms))
        self.spot_check()

    @property
    def cone(self) -> Orthant:
        return self._cone

    def evaluate(self, x: Any) -> np.ndarray:
        values = list(np.asarray(x).ravel())
        if len(values) != len(self.terms):
            raise DimensionMismatchException(f"Expected {len(self.terms)} coordinates, got {len(values)}.")
        if any(value < 0 for value in values):
            raise NegativeInputException(f"Min-max maps act on the orthant, got {values}.")
        return np.array([
            max(min(coef * values[index] for coef, index in term) for term in coordinate)
            for coordinate in self.terms
        ])


@cache
def example_minmax_map() -> MinMaxMap:
    """The period-6 min-max map on R^3_+."""
    return MinMaxMap(MINMAX_EXAMPLE_TERMS)


def minmax_example_map(x: Any) -> np.ndarray:
    return example_minmax_map().evaluate(x)


class CallableMap(ConeMap):
    """A user-supplied map on a cone of ambient dimension dim, R^dim_+ by default.

    Failures surface as EvaluationFailureException.
    """

    def __init__(self, function: Any, dim: int, cone: Cone | None = None) -> None:
        super().__init__(CallableMapModel, function=function, dim=dim)
        if cone is not None and cone.ambient_dim != dim:
            raise DimensionMismatchException(f"{cone!r} does not have ambient dimension {dim}.")
        self._cone = Orthant(dim) if cone is None else cone

    @property
    def cone(self) -> Cone:
        return self._cone

    def evaluate(self, x: Any) -> np.ndarray:
        try:
            value = np.asarray(self.bindings.function(x))
        except Exception as error:
            raise EvaluationFailureException(f"Map evaluation failed at {x!r}.") from error
        if value.shape != (self.bindings.dim,):
            raise EvaluationFailureException(f"Map returned shape {value.shape}, expected ({self.bindings.dim},).")
        if value.dtype.kind == "f" and not np.all(np.isfinite(value)):
            raise EvaluationFailureException(f"Map returned non-finite values at {x!r}.")
        return value


def map_from_model(model: MapModel) -> ConeMap:
    match model:
        case MatrixMapModel(entries=entries):
            matrix = PositiveLinearMap(entries)
            if not matrix.is_square:
                raise DimensionMismatchException(f"Orbits need a square matrix, got {matrix.shape}.")
            return matrix
        case MinMaxMapModel(terms=terms):
            return MinMaxMap(terms)
        case MinMaxExampleModel():
            return example_minmax_map()
        case _:
            raise TypeError(f"Unsupported map document: {model!r}")
