"""ABC for order-preserving homogeneous maps on cones."""

import abc
from collections.abc import Iterator
from typing import Any

import numpy as np
from pydantic import BaseModel

from hilbertcone.cone_abc import Cone
from hilbertcone.exceptions import HypothesisViolatedException


class ConeMap(abc.ABC):
    """ConeMap ABC.

    Concrete maps validate their bindings against a pydantic model,
    exactly one model per map kind, and expose evaluate.
    """

    def __init__(self, model: type[BaseModel], **bindings: Any) -> None:
        """Initialize a ConeMap."""
        self.bindings = model(**bindings)

    @property
    @abc.abstractmethod
    def cone(self) -> Cone:
        """The domain cone of the map."""
        raise NotImplementedError

    @abc.abstractmethod
    def evaluate(self, x: Any) -> np.ndarray:
        """Evaluate the map at a point of its cone.

        Implementations keep integer and Fraction inputs exact where
        the map allows it.
        """
        raise NotImplementedError

    def __call__(self, x: Any) -> np.ndarray:
        return self.evaluate(x)

    def iterate(self, x0: Any) -> Iterator[np.ndarray]:
        """Yield x0, f(x0), f(f(x0)), ..."""
        x = x0
        while True:
            yield x
            x = self.evaluate(x)

    def spot_check(self, n_samples: int = 16, seed: int = 0, rtol: float = 1e-9) -> None:
        """Check order preservation and degree-1 homogeneity on random orthant samples.

        Raise HypothesisViolatedException on the first failing sample.
        """
        rng = np.random.default_rng(seed)
        dim = self.cone.ambient_dim
        for _ in range(n_samples):
            x = rng.uniform(0.1, 2.0, dim)
            y = x + rng.uniform(0.0, 1.0, dim)
            scale = rng.uniform(0.1, 10.0)
            fx, fy = np.asarray(self.evaluate(x), float), np.asarray(self.evaluate(y), float)
            if np.any(fx > fy + rtol * np.abs(fy)):
                raise HypothesisViolatedException(f"{type(self).__name__} is not order-preserving.")
            if not np.allclose(np.asarray(self.evaluate(scale * x), float), scale * fx, rtol=rtol):
                raise HypothesisViolatedException(f"{type(self).__name__} is not homogeneous.")

    def __repr__(self) -> str:
        return f"{type(self).__name__}(cone={self.cone!r})"
