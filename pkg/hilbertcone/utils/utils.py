"""Miscellaneous utilities for hilbertcone."""

import math
from collections.abc import Callable, Mapping, Sequence
from fractions import Fraction
from typing import Any

import numpy as np
from toolz import compose

from hilbertcone.exceptions import EmptyVectorException

_INFINITIES: dict[str, float] = {"inf": math.inf, "-inf": -math.inf}


def as_vector(values: Any, dtype: Any = float) -> np.ndarray:
    """Cast values to a one-dimensional array.

    Raise EmptyVectorException for empty input.
    """
    vector = np.asarray(values, dtype=dtype)
    if vector.ndim == 0:
        vector = vector.reshape(1)
    if vector.size == 0:
        raise EmptyVectorException("Expected a non-empty vector.")
    return vector.ravel()


def as_matrix(values: Any) -> np.ndarray:
    """Cast values to a two-dimensional float array."""
    matrix = np.asarray(values, dtype=float)
    if matrix.ndim == 1:
        matrix = matrix.reshape(1, -1)
    return matrix


def frozen(array: np.ndarray) -> np.ndarray:
    """Return a read-only copy of array."""
    copy = np.array(array, copy=True)
    copy.flags.writeable = False
    return copy


def negligible(values: np.ndarray, rtol: float) -> np.ndarray:
    """Mask of entries that vanish relative to the largest absolute entry."""
    values = np.asarray(values, dtype=float)
    scale = np.max(np.abs(values)) if values.size else 0.0
    return np.abs(values) <= rtol * scale


def safe_log(value: float) -> float:
    """Natural log on [0, inf], mapping 0 to -inf and inf to inf."""
    if value == 0:
        return -math.inf
    if math.isinf(value):
        return math.inf
    return math.log(value)


def revalmap(f: Callable, d: Any) -> Any:
    """Recursively apply a callable to mapping and sequence values."""
    if isinstance(d, Mapping):
        return {key: revalmap(f, value) for key, value in d.items()}
    if isinstance(d, Sequence) and not isinstance(d, str):
        return [revalmap(f, value) for value in d]
    return f(d)


def _to_builtin(value: Any) -> Any:
    """Turn numpy containers and scalars into builtin Python values."""
    match value:
        case np.ndarray():
            return value.tolist()
        case np.bool_():
            return bool(value)
        case np.integer():
            return int(value)
        case np.floating():
            return float(value)
        case Fraction():
            return float(value)
        case _:
            return value


def _encode_float(value: Any) -> Any:
    """Encode extended reals; +/-inf become strings, finite floats stay lossless."""
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        if math.isnan(value):
            raise ValueError("NaN is not a serializable extended real.")
    return value


def _lists_first(value: Any) -> Any:
    """Expand arrays before the recursive walk reaches their items."""
    value = _to_builtin(value)
    if isinstance(value, (list, tuple)):
        return [_lists_first(item) for item in value]
    if isinstance(value, Mapping):
        return {key: _lists_first(item) for key, item in value.items()}
    return value


def encode_extended(data: Any) -> Any:
    """Prepare nested data for JSON serialization."""
    return revalmap(compose(_encode_float, _to_builtin), _lists_first(data))


def decode_extended(data: Any) -> Any:
    """Inverse of encode_extended for the infinity markers."""
    return revalmap(lambda value: _INFINITIES.get(value, value)
                    if isinstance(value, str) else value, data)
