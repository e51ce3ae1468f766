"""The transfer operator (L f)(t) = sum_i b_i(t) f(theta_i(t)) and its leading eigenfunction."""

import math
from typing import Any, NamedTuple

import numpy as np
from loguru import logger

from hilbertcone.config import settings
from hilbertcone.exceptions import (DimensionMismatchException,
                                    HypothesisViolatedException,
                                    NoConvergenceException,
                                    NotInConeException)
from hilbertcone.models import ContractionConstants, HolderConeParams
from hilbertcone.transfer.holder_cone import (cone_membership,
                                              holder_cone_distance)
from hilbertcone.transfer.space import IteratedFunctionSystem
from hilbertcone.utils.utils import as_vector


class TransferOperator:
    """Linear positive operator of an iterated function system."""

    def __init__(self, ifs: IteratedFunctionSystem) -> None:
        self.ifs = ifs

    def __len__(self) -> int:
        return len(self.ifs.space)

    def apply(self, f: Any) -> np.ndarray:
        f = as_vector(f)
        if f.size != len(self):
            raise DimensionMismatchException(f"Expected {len(self)} function values, got {f.size}.")
        space = self.ifs.space
        return sum(
            weight * theta.compose(f, space)
            for theta, weight in zip(self.ifs.maps, self.ifs.weights)
        )

    __call__ = apply

    def operator_matrix(self) -> np.ndarray:
        """N x N matrix of L; column j is L applied to the j-th indicator."""
        return np.column_stack([self.apply(column) for column in np.eye(len(self))])


def apply_operator(ifs: IteratedFunctionSystem, f: Any) -> np.ndarray:
    return TransferOperator(ifs).apply(f)


class EigenfunctionResult(NamedTuple):
    vector: np.ndarray
    eigenvalue: float
    residual: float
    residual_history: list[float]
    hilbert_residuals: list[float]
    constants: ContractionConstants


def leading_eigenfunction(ifs: IteratedFunctionSystem, M2: float, g: Any | None = None,
                          tol: float | None = None, max_iter: int | None = None) -> EigenfunctionResult:
    """Normalized iteration v_{k+1} = L v_k / |L v_k|_sup from g in K(M2, lambda).

    Stops once |L v - |L v|_sup v|_sup <= tol and reports |L v|_sup as
    the eigenvalue. The d_2 distances between consecutive iterates on
    K(M2, lambda) are recorded alongside the sup-norm residuals.
    """
    tol = settings.transfer_tol if tol is None else tol
    max_iter = settings.transfer_max_iter if max_iter is None else max_iter
    constants = ifs.contraction_constants(M2)
    if not ifs.has_nonzero_weight:
        raise HypothesisViolatedException("At least one weight must not vanish identically.")

    params = HolderConeParams(M=M2, lam=ifs.lam)
    operator = TransferOperator(ifs)
    v = np.ones(len(operator)) if g is None else as_vector(g)
    if not np.any(v) or not cone_membership(v, params, ifs.space):
        raise NotInConeException(f"Start function must be a nonzero element of K({M2}, {ifs.lam}).")
    v = v / np.max(np.abs(v))

    residuals: list[float] = []
    hilbert_residuals: list[float] = []
    for k in range(max_iter + 1):
        image = operator.apply(v)
        eigenvalue = float(np.max(np.abs(image)))
        if eigenvalue == 0.0:
            raise HypothesisViolatedException("The operator annihilated the iterate.")
        residual = float(np.max(np.abs(image - eigenvalue * v)))
        residuals.append(residual)
        logger.debug(f"Transfer iteration {k}: eigenvalue {eigenvalue}, residual {residual:.3e}.")
        if residual <= tol:
            break

        following = image / eigenvalue
        hilbert_residuals.append(holder_cone_distance(following, v, params, ifs.space))
        v = following
    else:
        raise NoConvergenceException(max_iter, residuals[-1])

    kappa = math.tanh(constants.d2_diameter_bound / 4)
    logger.info(
        f"Leading eigenfunction after {len(residuals) - 1} steps: eigenvalue {eigenvalue}, "
        f"contraction bound {kappa:.6f}."
    )
    return EigenfunctionResult(v, eigenvalue, residual, residuals, hilbert_residuals, constants)
