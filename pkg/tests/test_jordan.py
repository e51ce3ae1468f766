"""Tests for the Jordan algebras of the PSD and Lorentz cones."""

import math

import numpy as np
import pytest

from hilbertcone.cones import Orthant, hilbert_distance
from hilbertcone.exceptions import (AlgebraMismatchException,
                                    NotInteriorException,
                                    NotInvertibleException)
from hilbertcone.jordan.algebra import (Algebra, JordanElement, exp,
                                        inner_product, inverse, inverse_sqrt,
                                        is_interior, jordan_product, log,
                                        quadratic_rep_apply, spectral_decompose,
                                        sqrt, square, trace)
from hilbertcone.jordan.distances import (lambda_bounds,
                                          sampled_lambda_bounds,
                                          symmetric_cone_distance)


def random_pd(rng: np.random.Generator, n: int) -> JordanElement:
    factor = rng.normal(size=(n, n))
    return JordanElement.sym(factor @ factor.T + 0.5 * np.eye(n))


def random_lorentz_interior(rng: np.random.Generator, n: int) -> JordanElement:
    x = rng.normal(size=n)
    return JordanElement.spin(np.linalg.norm(x) + rng.uniform(0.1, 2.0), x)


def test_sym_product_by_hand():
    a = JordanElement.sym(np.diag([1.0, 2.0]))
    b = JordanElement.sym([[0.0, 1.0], [1.0, 0.0]])
    assert np.allclose(jordan_product(a, b).data, [[0.0, 1.5], [1.5, 0.0]])


@pytest.mark.parametrize("algebra, n", [(Algebra.SYM, 3), (Algebra.SPIN, 3)])
def test_unit_is_neutral(algebra, n):
    rng = np.random.default_rng(1)
    x = random_pd(rng, n) if algebra is Algebra.SYM else random_lorentz_interior(rng, n)
    e = JordanElement.unit(algebra, n)
    assert jordan_product(e, x).allclose(x)
    assert jordan_product(x, e).allclose(x)


@pytest.mark.parametrize("algebra", [Algebra.SYM, Algebra.SPIN])
def test_jordan_identity(algebra):
    """(x o y) o x^2 = x o (y o x^2)."""
    rng = np.random.default_rng(2)
    for _ in range(20):
        if algebra is Algebra.SYM:
            x, y = JordanElement.sym(rng.normal(size=(3, 3))), JordanElement.sym(rng.normal(size=(3, 3)))
        else:
            x, y = JordanElement.from_vector(rng.normal(size=4)), JordanElement.from_vector(rng.normal(size=4))
        left = jordan_product(jordan_product(x, y), square(x))
        right = jordan_product(x, jordan_product(y, square(x)))
        assert left.allclose(right, atol=1e-9)
        assert jordan_product(x, y).allclose(jordan_product(y, x))


def test_product_across_algebras_fails():
    with pytest.raises(AlgebraMismatchException):
        jordan_product(JordanElement.sym(np.eye(2)), JordanElement.spin(1.0, [0.0]))
    with pytest.raises(AlgebraMismatchException):
        jordan_product(JordanElement.sym(np.eye(2)), JordanElement.sym(np.eye(3)))


def test_spin_spectral_decomposition():
    x = JordanElement.spin(2.0, [1.0, 0.0])
    decomposition = spectral_decompose(x)
    assert sorted(decomposition.eigenvalues) == pytest.approx([1.0, 3.0])

    expected = {1.0: JordanElement.spin(0.5, [-0.5, 0.0]), 3.0: JordanElement.spin(0.5, [0.5, 0.0])}
    for value, idempotent in zip(decomposition.eigenvalues, decomposition.idempotents):
        assert idempotent.allclose(expected[round(float(value))])
        assert square(idempotent).allclose(idempotent)
    assert decomposition.reconstruct().allclose(x)


def test_unit_decomposes_into_itself():
    for algebra, n in [(Algebra.SYM, 3), (Algebra.SPIN, 2)]:
        e = JordanElement.unit(algebra, n)
        decomposition = spectral_decompose(e)
        assert decomposition.eigenvalues == pytest.approx([1.0])
        assert decomposition.idempotents[0].allclose(e)


def test_sym_decomposition_groups_repeated_eigenvalues():
    decomposition = spectral_decompose(JordanElement.sym(np.diag([1.0, 2.0, 2.0])))
    assert decomposition.eigenvalues == pytest.approx([1.0, 2.0])
    assert np.allclose(decomposition.idempotents[0].data, np.diag([1.0, 0.0, 0.0]))
    assert np.allclose(decomposition.idempotents[1].data, np.diag([0.0, 1.0, 1.0]))


def test_idempotent_system_axioms():
    rng = np.random.default_rng(3)
    for _ in range(1000):
        if rng.uniform() < 0.5:
            n = int(rng.integers(2, 6))
            x = JordanElement.sym(rng.normal(size=(n, n)))
        else:
            x = JordanElement.spin(rng.normal(), rng.normal(size=int(rng.integers(2, 9))))
        idempotents = spectral_decompose(x).idempotents
        total = sum(idempotents[1:], start=idempotents[0])
        assert total.allclose(JordanElement.unit(x.algebra, x.n), atol=1e-9)
        for i, c in enumerate(idempotents):
            assert square(c).allclose(c, atol=1e-9)
            for d in idempotents[i + 1:]:
                assert np.allclose(jordan_product(c, d).data, 0.0, atol=1e-9)


def test_trace_inner_product():
    rng = np.random.default_rng(11)
    for _ in range(20):
        a, b = JordanElement.sym(rng.normal(size=(3, 3))), JordanElement.sym(rng.normal(size=(3, 3)))
        assert inner_product(a, b) == pytest.approx(np.trace(a.data @ b.data))
        p = JordanElement.spin(rng.normal(), rng.normal(size=3))
        q = JordanElement.spin(rng.normal(), rng.normal(size=3))
        assert inner_product(p, q) == pytest.approx(2 * (p.s * q.s + p.x @ q.x))
        assert inner_product(p, q) == pytest.approx(inner_product(q, p))

    x = JordanElement.spin(2.0, [1.0, 0.0])
    decomposition = spectral_decompose(x)
    low, high = decomposition.idempotents
    assert inner_product(low, high) == pytest.approx(0.0, abs=1e-12)
    for value, c in zip(decomposition.eigenvalues, decomposition.idempotents):
        assert inner_product(x, c) == pytest.approx(value * trace(c))


def test_quadratic_representation_is_aba():
    rng = np.random.default_rng(4)
    a = JordanElement.sym(np.diag([2.0, 3.0]))
    b = JordanElement.sym(rng.normal(size=(2, 2)))
    assert np.allclose(quadratic_rep_apply(a, b).data, a.data @ b.data @ a.data)

    e = JordanElement.unit(Algebra.SYM, 2)
    assert quadratic_rep_apply(e, b).allclose(b)


@pytest.mark.parametrize("algebra", [Algebra.SYM, Algebra.SPIN])
def test_quadratic_representation_normalizes_to_unit(algebra):
    rng = np.random.default_rng(5)
    for _ in range(10):
        x = random_pd(rng, 3) if algebra is Algebra.SYM else random_lorentz_interior(rng, 3)
        assert quadratic_rep_apply(inverse_sqrt(x), x).allclose(JordanElement.unit(algebra, 3), atol=1e-9)


def test_functional_calculus():
    rng = np.random.default_rng(6)
    for x in [random_pd(rng, 3), random_lorentz_interior(rng, 2)]:
        assert square(sqrt(x)).allclose(x, atol=1e-9)
        assert exp(log(x)).allclose(x, atol=1e-9)
        assert jordan_product(x, inverse(x)).allclose(JordanElement.unit(x.algebra, x.n), atol=1e-9)


def test_boundary_elements():
    boundary = JordanElement.sym(np.diag([1.0, 0.0]))
    assert not is_interior(boundary)
    with pytest.raises(NotInvertibleException):
        inverse(boundary)
    with pytest.raises(NotInteriorException):
        sqrt(JordanElement.spin(1.0, [1.0, 0.0]))


def test_lambda_bounds_examples():
    assert lambda_bounds(JordanElement.sym(np.diag([1.0, 2.0])), JordanElement.sym(np.eye(2))) == pytest.approx((1.0, 2.0))
    assert lambda_bounds(JordanElement.spin(2.0, [1.0, 0.0]), JordanElement.unit(Algebra.SPIN, 2)) == pytest.approx((1.0, 3.0))

    rng = np.random.default_rng(7)
    x = random_pd(rng, 3)
    assert lambda_bounds(x, x) == pytest.approx((1.0, 1.0))


def test_lambda_bounds_need_interior_reference():
    with pytest.raises(NotInteriorException):
        lambda_bounds(JordanElement.sym(np.eye(2)), JordanElement.sym(np.diag([1.0, 0.0])))


def test_symmetric_cone_distance_examples():
    a, identity = JordanElement.sym(np.diag([1.0, 2.0])), JordanElement.sym(np.eye(2))
    assert symmetric_cone_distance(a, identity) == pytest.approx(math.log(2))

    rng = np.random.default_rng(8)
    x = random_pd(rng, 3)
    assert symmetric_cone_distance(x, 5.0 * x) == pytest.approx(0.0, abs=1e-9)
    assert symmetric_cone_distance(x, 5.0 * x, "thompson") == pytest.approx(math.log(5))


def test_diagonal_matrices_match_orthant():
    rng = np.random.default_rng(9)
    orthant = Orthant(4)
    for _ in range(20):
        a, b = rng.uniform(0.1, 5.0, 4), rng.uniform(0.1, 5.0, 4)
        expected = hilbert_distance(orthant.point(a), orthant.point(b))
        got = symmetric_cone_distance(JordanElement.sym(np.diag(a)), JordanElement.sym(np.diag(b)))
        assert got == pytest.approx(expected, abs=1e-9)


@pytest.mark.parametrize("algebra", [Algebra.SYM, Algebra.SPIN])
def test_automorphism_invariance(algebra):
    rng = np.random.default_rng(10)
    draw = (lambda: random_pd(rng, 3)) if algebra is Algebra.SYM else (lambda: random_lorentz_interior(rng, 3))
    for _ in range(10):
        x, w, y = draw(), draw(), draw()
        before = symmetric_cone_distance(w, y)
        after = symmetric_cone_distance(quadratic_rep_apply(x, w), quadratic_rep_apply(x, y))
        assert after == pytest.approx(before, abs=1e-9)


def test_sampled_bounds_approach_lorentz_lambda_plus():
    x = JordanElement.spin(3.0, [1.0, 0.5])
    y = JordanElement.spin(2.0, [-0.5, 0.5])
    lower, upper = lambda_bounds(x, y)
    sampled_lower, sampled_upper = sampled_lambda_bounds(x, y, n_samples=100_000, seed=0)
    assert sampled_upper <= upper + 1e-12
    assert sampled_lower >= lower - 1e-12
    assert sampled_upper == pytest.approx(upper, abs=1e-3)
