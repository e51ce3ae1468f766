"""Tests for the projective diameter, Birkhoff contraction and the certified power iteration."""

import math

import numpy as np
import pytest

from hilbertcone.birkhoff import (PositiveLinearMap, contraction_ratio,
                                  directed_contraction, empirical_contraction,
                                  power_iteration, power_map_bound,
                                  projective_diameter)
from hilbertcone.birkhoff.contraction import column_distances, diameter_pair
from hilbertcone.birkhoff.power_iteration import (convergence_curve,
                                                  rate_bound_satisfied)
from hilbertcone.exceptions import (DimensionMismatchException,
                                    EmptyMatrixException,
                                    NegativeDiameterException,
                                    NegativeEntryException,
                                    NoConvergenceException,
                                    NotInteriorException)

GOLDEN = [[2.0, 1.0], [1.0, 1.0]]
KAPPA_GOLDEN = math.tanh(math.log(2) / 4)


def test_diameter_examples():
    assert projective_diameter(GOLDEN) == pytest.approx(math.log(2))
    assert projective_diameter(GOLDEN, method="cross_ratio") == pytest.approx(math.log(2))
    assert projective_diameter(np.ones((3, 3))) == pytest.approx(0.0, abs=1e-15)
    assert math.isinf(projective_diameter(np.eye(2)))


def test_column_formula_matches_cross_ratio_formula():
    rng = np.random.default_rng(40)
    for _ in range(20):
        A = rng.uniform(0.05, 5.0, (rng.integers(2, 6), rng.integers(2, 6)))
        assert projective_diameter(A) == pytest.approx(projective_diameter(A, method="cross_ratio"), abs=1e-12)


def test_extremal_columns():
    A = [[1.0, 1.0, 4.0], [1.0, 2.0, 1.0]]
    distances = column_distances(A)
    assert set(distances) == {(0, 1), (0, 2), (1, 2)}
    assert diameter_pair(A) == (1, 2)
    assert distances[(1, 2)] == pytest.approx(math.log(8))


def test_contraction_ratio_examples():
    assert contraction_ratio(0.0) == 0.0
    assert contraction_ratio(math.inf) == 1.0
    assert contraction_ratio(math.log(2)) == pytest.approx(0.171573, abs=1e-6)
    # tanh(log(M) / 4) = (sqrt(M) - 1) / (sqrt(M) + 1)
    assert contraction_ratio(math.log(2)) == pytest.approx((math.sqrt(2) - 1) / (math.sqrt(2) + 1))
    with pytest.raises(NegativeDiameterException):
        contraction_ratio(-1.0)


def test_power_map_bound():
    assert power_map_bound(2.0, 3.0) == 8.0
    assert math.isinf(power_map_bound(math.inf, 0.5))


def test_invalid_matrices():
    with pytest.raises(EmptyMatrixException):
        PositiveLinearMap([[]])
    with pytest.raises(NegativeEntryException):
        PositiveLinearMap([[1.0, -1.0], [1.0, 1.0]])


def test_empirical_contraction_respects_birkhoff_bound():
    assert empirical_contraction(GOLDEN, n_samples=100_000, seed=0) <= KAPPA_GOLDEN + 1e-9
    assert empirical_contraction(np.ones((2, 2)), n_samples=1000, seed=0) == 0.0


def test_directed_contraction_approaches_the_bound():
    value = directed_contraction(GOLDEN)
    assert 0.9 * KAPPA_GOLDEN <= value <= KAPPA_GOLDEN + 1e-9


def test_birkhoff_bound_on_random_positive_matrices():
    rng = np.random.default_rng(41)
    for trial in range(30):
        n = rng.integers(2, 9)
        A = PositiveLinearMap(rng.uniform(0.1, 10.0, (n, n)))
        kappa = contraction_ratio(projective_diameter(A))
        assert empirical_contraction(A, n_samples=10_000, seed=trial) <= kappa + 1e-9
        assert directed_contraction(A) >= 0.9 * kappa


def test_sampling_is_deterministic_per_seed():
    first = empirical_contraction(GOLDEN, n_samples=5000, seed=7)
    assert empirical_contraction(GOLDEN, n_samples=5000, seed=7) == first
    assert empirical_contraction(GOLDEN, n_samples=5000, seed=7, batch_size=1000) <= KAPPA_GOLDEN + 1e-9


def test_power_iteration_golden_matrix():
    result = power_iteration(GOLDEN)
    assert result.eigenvalue == pytest.approx((3 + math.sqrt(5)) / 2, abs=1e-12)
    expected = np.array([1.0, (math.sqrt(5) - 1) / 2])
    assert result.vector == pytest.approx(expected / expected.sum(), abs=1e-10)

    certificate = result.certificate
    assert certificate.kappa == pytest.approx(KAPPA_GOLDEN)
    assert certificate.certified
    assert certificate.rate_bound_satisfied
    assert certificate.iterations == len(result.residuals)


@pytest.mark.parametrize("A, eigenvalue", [
    (np.ones((3, 3)), 3.0),
    ([[2.0, 1.0, 1.0], [1.0, 2.0, 1.0], [1.0, 1.0, 2.0]], 4.0),
])
def test_power_iteration_symmetric_examples(A, eigenvalue):
    result = power_iteration(A, x0=[0.2, 0.3, 0.5])
    assert result.eigenvalue == pytest.approx(eigenvalue, abs=1e-10)
    assert result.vector == pytest.approx(np.full(3, 1 / 3), abs=1e-10)


def test_power_iteration_on_random_positive_matrices():
    rng = np.random.default_rng(43)
    for _ in range(100):
        n = rng.integers(2, 9)
        A = rng.uniform(0.1, 10.0, (n, n))
        result = power_iteration(A)
        residual = np.abs(A @ result.vector - result.eigenvalue * result.vector).sum()
        assert residual <= 1e-10 * result.eigenvalue
        assert result.eigenvalue == pytest.approx(max(np.linalg.eigvals(A).real), rel=1e-10)


def test_eigenvector_does_not_depend_on_the_start():
    rng = np.random.default_rng(44)
    for _ in range(20):
        A = rng.uniform(0.1, 5.0, (5, 5))
        first = power_iteration(A, x0=rng.uniform(0.01, 1.0, 5))
        second = power_iteration(A, x0=rng.uniform(0.01, 1.0, 5))
        assert first.vector == pytest.approx(second.vector, abs=1e-10)
        assert first.eigenvalue == pytest.approx(second.eigenvalue, rel=1e-10)


def test_residuals_decay_geometrically():
    rng = np.random.default_rng(42)
    for _ in range(10):
        A = rng.uniform(0.1, 3.0, (4, 4))
        result = power_iteration(A, x0=rng.uniform(0.1, 1.0, 4))
        assert rate_bound_satisfied(result.residuals, result.certificate.kappa)


def test_convergence_curve_rows():
    result = power_iteration(GOLDEN, x0=[1.0, 5.0])
    curve = convergence_curve(result)
    assert [row["iteration"] for row in curve] == list(range(len(result.residuals)))
    assert all(row["residual"] <= row["bound"] + 1e-9 for row in curve)
    assert curve[0]["bound"] == curve[0]["residual"]


def test_power_iteration_errors():
    with pytest.raises(DimensionMismatchException):
        power_iteration([[1.0, 2.0, 3.0], [1.0, 1.0, 1.0]])
    with pytest.raises(NotInteriorException):
        power_iteration(GOLDEN, x0=[1.0, 0.0])
    with pytest.raises(NoConvergenceException):
        power_iteration([[0.0, 1.0], [1.0, 0.0]], x0=[1.0, 3.0], max_iter=50)


def test_primitive_matrix_power_is_positive():
    A = PositiveLinearMap([[0.0, 1.0], [1.0, 1.0]])
    assert math.isinf(projective_diameter(A))
    assert A.power(2).strictly_positive
    assert contraction_ratio(projective_diameter(A.power(2))) < 1
