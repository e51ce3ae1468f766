"""Tests for cones, order bounds and the projective metrics."""

import math

import numpy as np
import pytest

from hilbertcone.birkhoff import power_map_bound
from hilbertcone.cones import (LorentzCone, Orthant, PolyhedralCone, PSDCone,
                               SimplicialCone, cone_from_model, distance,
                               funk_weak_metric, hilbert_distance, homogenize,
                               order_bounds, orthant_distances, same_part,
                               thompson_distance)
from hilbertcone.exceptions import (DegeneratePolytopeException,
                                    DimensionMismatchException,
                                    InvalidConeException, NotInConeException,
                                    NotInteriorException,
                                    UnboundedDomainException,
                                    ZeroDenominatorException)
from hilbertcone.models import DistInput

LOG2, LOG4 = math.log(2), math.log(4)

orthant = Orthant(2)


def random_interior(rng: np.random.Generator, n: int, size: int = 1) -> np.ndarray:
    return np.exp(rng.uniform(-3.0, 3.0, (size, n)))


def test_order_bounds_examples():
    bounds = order_bounds(orthant.point([1, 2]), orthant.point([2, 1]))
    assert bounds.M == pytest.approx(2.0)
    assert bounds.m == pytest.approx(0.5)
    assert bounds.comparable

    x = orthant.point([3, 5])
    assert order_bounds(x, x).M == pytest.approx(1.0)
    assert order_bounds(x, x).m == pytest.approx(1.0)

    bounds = order_bounds(orthant.point([1, 0]), orthant.point([0, 1]))
    assert not bounds.comparable
    assert math.isinf(bounds.M)
    assert bounds.m == 0.0


def test_order_bounds_against_zero():
    with pytest.raises(ZeroDenominatorException):
        order_bounds(orthant.point([1, 1]), orthant.point([0, 0]))
    bounds = order_bounds(orthant.point([0, 0]), orthant.point([1, 1]))
    assert bounds.M == 0.0 and bounds.m == 0.0


def test_hilbert_examples():
    assert hilbert_distance(orthant.point([1, 2]), orthant.point([2, 1])) == pytest.approx(LOG4)
    assert hilbert_distance(orthant.point([1, 2]), orthant.point([3, 6])) == pytest.approx(0.0, abs=1e-15)
    assert math.isinf(hilbert_distance(orthant.point([1, 0]), orthant.point([1, 1])))


def test_thompson_examples():
    x = orthant.point([1, 2])
    assert thompson_distance(x, orthant.point([2, 1])) == pytest.approx(LOG2)
    assert thompson_distance(x, orthant.point([2, 4])) == pytest.approx(LOG2)
    assert thompson_distance(x, x) == 0.0


def test_funk_examples():
    assert funk_weak_metric(orthant.point([1, 4]), orthant.point([1, 1])) == pytest.approx(LOG4)
    assert funk_weak_metric(orthant.point([1, 1]), orthant.point([1, 4])) == pytest.approx(0.0)
    x = orthant.point([2, 7])
    assert funk_weak_metric(x, x) == 0.0
    with pytest.raises(NotInteriorException):
        funk_weak_metric(orthant.point([1, 0]), orthant.point([1, 1]))


def test_same_part_examples():
    cube = Orthant(3)
    assert same_part(cube.point([1, 0, 2]), cube.point([3, 0, 1]))
    assert not same_part(orthant.point([1, 0]), orthant.point([1, 1]))
    assert same_part(orthant.point([0, 0]), orthant.point([0, 0]))


def test_apex_conventions():
    zero, x = orthant.point([0, 0]), orthant.point([1, 1])
    assert hilbert_distance(zero, zero) == 0.0
    assert thompson_distance(zero, zero) == 0.0
    assert math.isinf(hilbert_distance(zero, x))
    assert math.isinf(thompson_distance(x, zero))


def test_points_outside_and_mismatched():
    with pytest.raises(NotInConeException):
        orthant.point([1, -1])
    with pytest.raises(DimensionMismatchException):
        orthant.point([1, 1, 1])
    with pytest.raises(DimensionMismatchException):
        hilbert_distance(orthant.point([1, 1]), Orthant(3).point([1, 1, 1]))


@pytest.mark.parametrize("metric", ["hilbert", "thompson"])
def test_metric_axioms_on_orthant(metric):
    rng = np.random.default_rng(11)
    cone = Orthant(4)
    for _ in range(200):
        x, y, z = (cone.point(p) for p in random_interior(rng, 4, 3))
        dxy, dyx = distance(x, y, metric), distance(y, x, metric)
        assert dxy >= 0
        assert dxy == pytest.approx(dyx, abs=1e-12)
        assert dxy <= distance(x, z, metric) + distance(z, y, metric) + 1e-12


def test_projective_invariance_and_scaling():
    rng = np.random.default_rng(12)
    cone = Orthant(3)
    for _ in range(50):
        x, y = random_interior(rng, 3, 2)
        a, b = rng.uniform(0.1, 10.0, 2)
        before = hilbert_distance(cone.point(x), cone.point(y))
        after = hilbert_distance(cone.point(a * x), cone.point(b * y))
        assert after == pytest.approx(before, abs=1e-12)
        assert thompson_distance(cone.point(x), cone.point(a * x)) == pytest.approx(abs(math.log(a)))


def test_funk_decomposes_hilbert():
    rng = np.random.default_rng(13)
    cone = Orthant(3)
    for _ in range(100):
        x, y = (cone.point(p) for p in random_interior(rng, 3, 2))
        total = funk_weak_metric(x, y) + funk_weak_metric(y, x)
        assert total == pytest.approx(hilbert_distance(x, y), abs=1e-12)
        assert max(funk_weak_metric(x, y), funk_weak_metric(y, x)) == pytest.approx(thompson_distance(x, y))


def test_hilbert_bounded_by_twice_thompson():
    rng = np.random.default_rng(14)
    cone = Orthant(5)
    for _ in range(100):
        x, y = (cone.point(p) for p in random_interior(rng, 5, 2))
        assert hilbert_distance(x, y) <= 2 * thompson_distance(x, y) + 1e-12


def test_orthant_distances_are_support_aware():
    X = np.array([[1.0, 2.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, 0.0]])
    Y = np.array([[2.0, 1.0, 0.0], [1.0, 1.0, 0.0], [0.0, 0.0, 0.0], [1.0, 0.0, 0.0]])
    assert orthant_distances(X, Y) == pytest.approx([LOG4, math.inf, 0.0, math.inf])
    assert orthant_distances(X, Y, "thompson") == pytest.approx([LOG2, math.inf, 0.0, math.inf])


def test_orthant_distances_treat_tiny_coordinates_as_zero():
    X = np.array([[1.0, 1e-14, 2.0], [1.0, 1e-14, 2.0]])
    Y = np.array([[2.0, 0.0, 1.0], [2.0, 1e-3, 1.0]])
    expected = [
        hilbert_distance(Orthant(3).point(x), Orthant(3).point(y)) for x, y in zip(X, Y)
    ]
    assert orthant_distances(X, Y) == pytest.approx(expected)
    assert orthant_distances(X, Y) == pytest.approx([LOG4, math.inf])
    assert orthant_distances(X, Y, rtol=1e-16)[0] == math.inf


def test_orthant_distances_match_pointwise_metric():
    rng = np.random.default_rng(15)
    cone = Orthant(4)
    X, Y = random_interior(rng, 4, 50), random_interior(rng, 4, 50)
    expected = [hilbert_distance(cone.point(x), cone.point(y)) for x, y in zip(X, Y)]
    assert orthant_distances(X, Y) == pytest.approx(expected, abs=1e-12)


def test_simplicial_cone_with_identity_basis_is_orthant():
    rng = np.random.default_rng(16)
    simplicial, cube = SimplicialCone(np.eye(3)), Orthant(3)
    for _ in range(50):
        x, y = random_interior(rng, 3, 2)
        assert hilbert_distance(simplicial.point(x), simplicial.point(y)) == pytest.approx(
            hilbert_distance(cube.point(x), cube.point(y))
        )


def test_simplicial_cone_is_invariant_under_its_basis():
    rng = np.random.default_rng(17)
    basis = np.array([[2.0, 1.0, 0.0], [0.0, 1.0, 1.0], [1.0, 0.0, 3.0]])
    cone, cube = SimplicialCone(basis), Orthant(3)
    for _ in range(50):
        a, b = random_interior(rng, 3, 2)
        got = hilbert_distance(cone.point(basis @ a), cone.point(basis @ b))
        assert got == pytest.approx(hilbert_distance(cube.point(a), cube.point(b)), abs=1e-10)


def test_singular_basis_is_rejected():
    with pytest.raises(InvalidConeException):
        SimplicialCone([[1.0, 2.0], [2.0, 4.0]])


def test_polyhedral_cone_needs_interior():
    with pytest.raises(InvalidConeException):
        PolyhedralCone([[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0]])


def test_polyhedral_witness_normalization():
    cone = PolyhedralCone([[1.0, 0.0], [0.0, 1.0], [1.0, 1.0]], witness=[1.0, 2.0])
    assert cone.facet_values(np.array([1.0, 2.0])) == pytest.approx([1.0, 1.0, 1.0])


def test_homogenize_interval():
    cone = homogenize(A=[[1.0], [-1.0]], b=[1.0, 0.0])
    assert cone.ambient_dim == 2
    assert cone.n_facets == 2
    assert cone.contains([0.5, 1.0])
    assert cone.contains([0.0, 2.0])
    assert not cone.contains([1.5, 1.0])


def test_homogenize_simplex_matches_orthant():
    """The cone over the standard simplex is linearly isomorphic to R^3_+."""
    rng = np.random.default_rng(18)
    triangle = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])
    cone, cube = homogenize(vertices=triangle), Orthant(3)
    for _ in range(50):
        a, b = rng.dirichlet(np.ones(3), 2)
        x, y = a[1:], b[1:]
        got = hilbert_distance(cone.point([*x, 1.0]), cone.point([*y, 1.0]))
        assert got == pytest.approx(hilbert_distance(cube.point(a), cube.point(b)), abs=1e-9)


def test_homogenize_unit_square():
    square = homogenize(A=[[1, 0], [-1, 0], [0, 1], [0, -1]], b=[1, 0, 1, 0])
    assert square.ambient_dim == 3
    assert square.n_facets == 4
    from_vertices = homogenize(vertices=[[0, 0], [1, 0], [0, 1], [1, 1]])
    assert from_vertices.n_facets == 4


def test_homogenize_rejects_bad_polytopes():
    with pytest.raises(UnboundedDomainException):
        homogenize(A=[[1.0, 0.0], [0.0, 1.0]], b=[1.0, 1.0])
    with pytest.raises(DegeneratePolytopeException):
        homogenize(A=[[1.0], [-1.0]], b=[0.0, 0.0])
    with pytest.raises(DegeneratePolytopeException):
        homogenize(vertices=[[0.0, 0.0], [1.0, 1.0], [2.0, 2.0]])


def test_psd_diagonal_matches_orthant():
    rng = np.random.default_rng(19)
    psd, cube = PSDCone(3), Orthant(3)
    for _ in range(20):
        a, b = random_interior(rng, 3, 2)
        got = hilbert_distance(psd.point(np.diag(a)), psd.point(np.diag(b)))
        assert got == pytest.approx(hilbert_distance(cube.point(a), cube.point(b)), abs=1e-9)


def test_psd_boundary_parts():
    psd = PSDCone(2)
    x, y = psd.point(np.diag([1.0, 0.0])), psd.point(np.diag([3.0, 0.0]))
    assert not x.interior
    assert same_part(x, y)
    assert hilbert_distance(x, y) == pytest.approx(0.0, abs=1e-12)
    assert math.isinf(hilbert_distance(x, psd.point(np.eye(2))))


def test_lorentz_cone():
    cone = LorentzCone(2)
    e = cone.point([1.0, 0.0, 0.0])
    w = cone.point([2.0, 1.0, 0.0])
    assert order_bounds(w, e).M == pytest.approx(3.0)
    assert order_bounds(w, e).m == pytest.approx(1.0)
    assert hilbert_distance(w, e) == pytest.approx(math.log(3))
    assert not cone.contains([1.0, 2.0, 0.0])
    assert not cone.point([1.0, 1.0, 0.0]).interior


def test_cone_from_model():
    document = DistInput(cone={"kind": "orthant", "dim": 2}, x=[1, 2], y=[2, 1])
    assert cone_from_model(document.cone) == Orthant(2)
    document = DistInput(cone={"kind": "polytope", "A": [[1], [-1]], "b": [1, 0]}, x=[0.25], y=[0.5])
    cone = cone_from_model(document.cone)
    assert isinstance(cone, PolyhedralCone)
    assert hilbert_distance(cone.point([0.25, 1.0]), cone.point([0.5, 1.0])) == pytest.approx(math.log(3))


def test_nonnegative_matrices_do_not_expand_the_metrics():
    rng = np.random.default_rng(20)
    cone = Orthant(4)
    for _ in range(100):
        A = rng.uniform(0.0, 3.0, (4, 4)) * (rng.uniform(size=(4, 4)) > 0.4)
        x, y = random_interior(rng, 4, 2)
        for metric in ("hilbert", "thompson"):
            after = distance(cone.point(A @ x), cone.point(A @ y), metric)
            assert after <= distance(cone.point(x), cone.point(y), metric) + 1e-12


@pytest.mark.parametrize("r", [0.5, 1.0, 2.0])
def test_power_maps_scale_the_metrics(r):
    rng = np.random.default_rng(21)
    cone = Orthant(3)
    for _ in range(100):
        x, y = random_interior(rng, 3, 2)
        upper = order_bounds(cone.point(x), cone.point(y)).M
        assert order_bounds(cone.point(x ** r), cone.point(y ** r)).M <= power_map_bound(upper, r) * (1 + 1e-12)
        before = hilbert_distance(cone.point(x), cone.point(y))
        assert hilbert_distance(cone.point(x ** r), cone.point(y ** r)) == pytest.approx(r * before, abs=1e-9)
        before = thompson_distance(cone.point(x), cone.point(y))
        assert thompson_distance(cone.point(x ** r), cone.point(y ** r)) == pytest.approx(r * before, abs=1e-9)


@pytest.mark.parametrize("cone, draw", [
    (Orthant(3), lambda rng: np.exp(rng.uniform(-3.0, 3.0, 3))),
    (LorentzCone(2), lambda rng: (lambda v: np.r_[np.linalg.norm(v) + rng.uniform(0.1, 2.0), v])(rng.normal(size=2))),
    (PSDCone(2), lambda rng: (lambda a: a @ a.T + 0.1 * np.eye(2))(rng.normal(size=(2, 2)))),
    (PolyhedralCone([[1.0, 0.0], [0.0, 1.0], [1.0, 1.0]]), lambda rng: rng.uniform(0.1, 3.0, 2)),
])
def test_order_bounds_are_submultiplicative(cone, draw):
    rng = np.random.default_rng(22)
    for _ in range(50):
        x, y, z = cone.point(draw(rng)), cone.point(draw(rng)), cone.point(draw(rng))
        xy, yz, xz = order_bounds(x, y), order_bounds(y, z), order_bounds(x, z)
        assert xz.M <= xy.M * yz.M * (1 + 1e-9)
        assert xz.m >= xy.m * yz.m * (1 - 1e-9)


def test_positive_diagonal_permutations_are_isometries():
    rng = np.random.default_rng(23)
    cone = Orthant(5)
    for _ in range(50):
        D = np.diag(rng.uniform(0.1, 10.0, 5)) @ np.eye(5)[rng.permutation(5)]
        x, y = random_interior(rng, 5, 2)
        for metric in ("hilbert", "thompson"):
            before = distance(cone.point(x), cone.point(y), metric)
            assert distance(cone.point(D @ x), cone.point(D @ y), metric) == pytest.approx(before, abs=1e-12)
