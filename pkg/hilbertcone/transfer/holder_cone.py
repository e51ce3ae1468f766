"""The cones K(M, lambda) = {f : f(s) <= f(t) exp(M rho(s, t)^lambda) for all s, t}.

On a finite space K(M, lambda) is polyhedral with the facet functionals
phi_st(f) = f(t) - exp(-M rho(s, t)^lambda) f(s), s != t, so its Hilbert
metric is evaluated exactly by the facet-ratio formula. These facets are
the functionals exp(M rho^lambda) f(t) - f(s) scaled by exp(-M rho^lambda).
"""

import math
from typing import TYPE_CHECKING, Any

import numpy as np

from hilbertcone.cones.cones import facet_sup_ratio
from hilbertcone.config import settings
from hilbertcone.exceptions import HypothesisViolatedException
from hilbertcone.models import (ContractionConstants, HolderConeParams,
                                MembershipResult)
from hilbertcone.utils.utils import as_vector

if TYPE_CHECKING:
    from hilbertcone.transfer.space import DiscreteSpace


def saturating_exp(x: float) -> float:
    """exp(x), with inf instead of an OverflowError."""
    try:
        return math.exp(x)
    except OverflowError:
        return math.inf


def decay(params: HolderConeParams, space: "DiscreteSpace") -> np.ndarray:
    """D[s, t] = exp(-M rho(s, t)^lambda); underflows to 0 for distant pairs."""
    return np.exp(-params.M * space.rho ** params.lam)


def cone_membership(f: Any, params: HolderConeParams, space: "DiscreteSpace",
                    rtol: float | None = None) -> MembershipResult:
    """Scan all pairs for f(s) D[s, t] <= f(t), relative to max |f|.

    On failure the result carries the worst pair (s, t) and its violation
    f(s) D[s, t] - f(t).
    """
    rtol = settings.comparability_rtol if rtol is None else rtol
    f = as_vector(f)
    scale = float(np.max(np.abs(f)))
    if scale == 0.0:
        return MembershipResult(member=True)

    violations = f[:, None] * decay(params, space) - f[None, :]
    s, t = np.unravel_index(np.argmax(violations), violations.shape)
    worst = float(violations[s, t])
    if worst <= rtol * scale:
        return MembershipResult(member=True)
    return MembershipResult(member=False, worst_pair=(int(s), int(t)), violation=worst)


def facet_values(f: np.ndarray, params: HolderConeParams, space: "DiscreteSpace") -> np.ndarray:
    """phi_st(f) for all ordered pairs s != t."""
    values = f[None, :] - f[:, None] * decay(params, space)
    return values[~np.eye(len(space), dtype=bool)]


def holder_cone_distance(f: Any, g: Any, params: HolderConeParams, space: "DiscreteSpace",
                         rtol: float | None = None) -> float:
    """Hilbert's projective metric d_2(f, g) on K(M, lambda)."""
    rtol = settings.comparability_rtol if rtol is None else rtol
    f, g = as_vector(f), as_vector(g)
    f_zero, g_zero = not np.any(f), not np.any(g)
    if f_zero or g_zero:
        return 0.0 if f_zero and g_zero else math.inf

    phi_f, phi_g = facet_values(f, params, space), facet_values(g, params, space)
    forward = facet_sup_ratio(phi_g, phi_f, rtol)
    backward = facet_sup_ratio(phi_f, phi_g, rtol)
    if math.isinf(forward) or math.isinf(backward):
        return math.inf
    return max(0.0, math.log(forward) + math.log(backward))


def interpolation_excess(M: float, lam: float, mesh: float, min_distance: float) -> float:
    """Extra Hoelder constant picked up by linearly interpolating f in K(M, lambda).

    Piecewise-linear interpolation of log f keeps the constant M. The
    interpolant of f itself exceeds exp(interpolated log f) by a factor
    of at most exp(G), G = min(delta^2 / 8, delta) with delta = M mesh^lambda,
    and charging G to the shortest node distance gives G / min_distance^lambda.
    """
    if mesh == 0.0:
        return 0.0
    delta = M * mesh ** lam
    return min(delta * delta / 8, delta) / min_distance ** lam


def contraction_constants(M0: float, M2: float, lam: float, c: float, delta: float,
                          excess: float = 0.0) -> ContractionConstants:
    """Constants for L mapping K(M2, lambda) into K(M1, lambda).

    M1 = M0 + c^lambda M2 + excess, where excess accounts for interpolated
    compositions, and every f, g in K(M1, lambda) with sup norm 1 satisfy
    alpha f <= g <= beta f in the order of K(M2, lambda), so the image has
    d_2-diameter at most log(beta / alpha). Everything is computed from
    log alpha and log beta; alpha and beta themselves saturate at 0 and inf.
    """
    if not (0 < c < 1 and 0 < lam <= 1 and delta > 0 and M0 > 0 and excess >= 0):
        raise HypothesisViolatedException("Need 0 < c < 1, 0 < lambda <= 1, delta > 0, M0 > 0 and excess >= 0.")
    shrink = c ** lam
    if not M2 > M0 / (1 - shrink):
        raise HypothesisViolatedException(
            f"M2 = {M2} must exceed M0 / (1 - c^lambda) = {M0 / (1 - shrink)}."
        )

    M1 = M0 + shrink * M2 + excess
    if not M1 < M2:
        raise HypothesisViolatedException(
            f"M1 = {M1} including the interpolation excess {excess} is not below M2 = {M2}; refine the grid."
        )
    log_ratio = math.log(M2 - M1) - math.log(M2 + M1)
    exponent = M1 * delta ** lam
    log_alpha = log_ratio - exponent
    log_beta = exponent - log_ratio
    return ContractionConstants(
        M1=M1,
        alpha=math.exp(log_alpha),
        beta=saturating_exp(log_beta),
        log_alpha=log_alpha,
        log_beta=log_beta,
        d2_diameter_bound=log_beta - log_alpha,
        discretization_excess=excess,
    )
