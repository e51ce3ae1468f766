"""Upper bounds on periods of periodic points of non-expansive maps."""

from math import comb, factorial

from hilbertcone.exceptions import ArgumentTooSmallException
from hilbertcone.models import PeriodBoundKind


def _sup_norm_ball(n: int) -> int:
    return max(2 ** k * comb(n, k) for k in range(n + 1))


def _polyhedral_cone_orbit(m: int) -> int:
    return factorial(m) // (factorial(m // 3) * factorial((m + 1) // 3) * factorial((m + 2) // 3))


def period_bound(kind: PeriodBoundKind | str, size: int) -> int:
    """Exact integer bound on the period of a periodic point.

    sup_norm_ball(n): non-expansive maps of (R^n, sup norm), max_k 2^k C(n, k).
    polytopal_hilbert(m): Hilbert geometry of a polytope with m facets,
        the sup-norm bound in dimension m(m - 1)/2.
    polyhedral_cone_orbit(m): order-preserving homogeneous maps on a cone
        with m facets, m! / (floor(m/3)! floor((m+1)/3)! floor((m+2)/3)!).
    simplicial_eigen(m): periodic orbits of such maps on R^m_+ with an
        interior eigenvector, C(m, floor(m/2)).
    """
    if size < 1:
        raise ArgumentTooSmallException(f"Size must be at least 1, got {size}.")

    match PeriodBoundKind(kind):
        case PeriodBoundKind.SUP_NORM_BALL:
            return _sup_norm_ball(size)
        case PeriodBoundKind.POLYTOPAL_HILBERT:
            return _sup_norm_ball(size * (size - 1) // 2)
        case PeriodBoundKind.POLYHEDRAL_CONE_ORBIT:
            return _polyhedral_cone_orbit(size)
        case PeriodBoundKind.SIMPLICIAL_EIGEN:
            return comb(size, size // 2)


def possible_periods(n: int) -> set[int]:
    """All q1 q2 with 1 <= q1 <= C(k, floor(k/2)) and 1 <= q2 <= C(n, k) for some 0 <= k <= n.

    These are the periods admitted for order-preserving homogeneous
    maps on R^n_+; for n = 3 the set is {1, 2, 3, 4, 6}.
    """
    if n < 1:
        raise ArgumentTooSmallException(f"Dimension must be at least 1, got {n}.")
    return {
        q1 * q2
        for k in range(n + 1)
        for q1 in range(1, comb(k, k // 2) + 1)
        for q2 in range(1, comb(n, k) + 1)
    }
