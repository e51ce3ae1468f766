"""Pydantic models for input validation and result records."""

import math
from collections.abc import Callable
from enum import StrEnum
from pathlib import Path
from typing import Annotated, Any, Literal

from pydantic import AfterValidator, BaseModel, ConfigDict, Field, model_validator

from hilbertcone.config import settings


class ConeKind(StrEnum):
    """Supported cone families."""
    ORTHANT = "orthant"
    SIMPLICIAL = "simplicial"
    POLYHEDRAL = "polyhedral"
    PSD = "psd"
    LORENTZ = "lorentz"


class MetricKind(StrEnum):
    """Projective metrics available on every cone."""
    HILBERT = "hilbert"
    THOMPSON = "thompson"
    FUNK = "funk"


class TargetNorm(StrEnum):
    """Target norms of the isometric embeddings."""
    VARIATION = "variation"
    HEXAGONAL_H = "hexagonal_h"
    SUP_NORM = "sup_norm"


class PeriodBoundKind(StrEnum):
    """Settings for which a period bound formula is known."""
    SUP_NORM_BALL = "sup_norm_ball"
    POLYTOPAL_HILBERT = "polytopal_hilbert"
    POLYHEDRAL_CONE_ORBIT = "polyhedral_cone_orbit"
    SIMPLICIAL_EIGEN = "simplicial_eigen"


# records

class OrderBounds(BaseModel):
    """M(x/y), m(x/y) and whether y dominates x."""
    model_config = ConfigDict(frozen=True)

    M: float
    m: float
    comparable: bool

    @model_validator(mode="after")
    def check_ordering(self):
        if self.comparable and self.m > self.M * (1 + 1e-12):
            raise ValueError(f"Comparable bounds require m <= M, got m={self.m}, M={self.M}.")
        return self


class ContractionCertificate(BaseModel):
    """Record of a Birkhoff-certified power iteration."""
    model_config = ConfigDict(frozen=True)

    delta: float = Field(ge=0)
    kappa: float = Field(ge=0, le=1)
    iterations: int = Field(ge=0)
    final_residual: float = Field(ge=0)
    rate_bound_satisfied: bool
    certified: bool = True

    @model_validator(mode="after")
    def check_kappa(self):
        expected = 1.0 if math.isinf(self.delta) else math.tanh(self.delta / 4)
        if not math.isclose(self.kappa, expected, rel_tol=1e-12, abs_tol=1e-15):
            raise ValueError("kappa must equal tanh(delta / 4).")
        return self


class ContractionConstants(BaseModel):
    """Explicit constants for the transfer operator on K(M2, lambda)."""
    model_config = ConfigDict(frozen=True)

    M1: float
    alpha: float = Field(ge=0)
    beta: float = Field(gt=0)
    log_alpha: float
    log_beta: float
    d2_diameter_bound: float = Field(ge=0)
    discretization_excess: float = Field(default=0.0, ge=0)


class HolderConeParams(BaseModel):
    """Parameters (M, lambda) of the cone K(M, lambda)."""
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    M: float = Field(gt=0)
    lam: float = Field(gt=0, le=1, alias="lambda")


class MembershipResult(BaseModel):
    """Outcome of a K(M, lambda) pair scan."""
    model_config = ConfigDict(frozen=True)

    member: bool
    worst_pair: tuple[int, int] | None = None
    violation: float = 0.0

    def __bool__(self) -> bool:
        return self.member


class OmegaLimitReport(BaseModel):
    """Diagnostic summary of the tail of an orbit."""
    model_config = ConfigDict(frozen=True)

    n_iterates: int = 0
    tail_length: int = 0
    clusters: int = 0
    cluster_representatives: list[list[float]] = []
    min_boundary_proximity: float | None = None
    hull_dimension: int | None = None
    converged_to_boundary: bool = False


# cone and polytope documents

class OrthantModel(BaseModel):
    kind: Literal["orthant"]
    dim: int = Field(ge=1)


class SimplicialModel(BaseModel):
    kind: Literal["simplicial"]
    basis: list[list[float]]


class PolyhedralModel(BaseModel):
    kind: Literal["polyhedral"]
    psi: list[list[float]]
    witness: list[float] | None = None


class PSDModel(BaseModel):
    kind: Literal["psd"]
    dim: int = Field(ge=1)


class LorentzModel(BaseModel):
    kind: Literal["lorentz"]
    dim: int = Field(ge=1)


class PolytopeModel(BaseModel):
    """A polytope, either as {"A": ..., "b": ...} or as {"vertices": ...}."""
    kind: Literal["polytope"] = "polytope"
    A: list[list[float]] | None = None
    b: list[float] | None = None
    vertices: list[list[float]] | None = None

    @model_validator(mode="after")
    def check_representation(self):
        h_rep = self.A is not None and self.b is not None
        v_rep = self.vertices is not None
        if h_rep == v_rep:
            raise ValueError("Give either both 'A' and 'b' or 'vertices'.")
        if h_rep and len(self.A) != len(self.b):
            raise ValueError("'A' and 'b' must have the same number of rows.")
        return self


ConeModel = Annotated[
    OrthantModel | SimplicialModel | PolyhedralModel | PSDModel | LorentzModel | PolytopeModel,
    Field(discriminator="kind")
]

PointModel = list[float] | list[list[float]]


# map documents

def _check_nonnegative(rows: list[list[float]]) -> list[list[float]]:
    if not rows or not rows[0]:
        raise ValueError("Matrix must not be empty.")
    if len({len(row) for row in rows}) != 1:
        raise ValueError("Matrix rows must have equal length.")
    if any(value < 0 for row in rows for value in row):
        raise ValueError("Matrix entries must be nonnegative.")
    return rows


NonnegativeMatrix = Annotated[list[list[float]], AfterValidator(_check_nonnegative)]


class MatrixMapModel(BaseModel):
    """Bindings for x -> A x on the orthant."""
    kind: Literal["matrix"] = "matrix"
    entries: NonnegativeMatrix


MinMaxTerm = list[tuple[int | float, int]]


class MinMaxMapModel(BaseModel):
    """Bindings for a min-max map.

    terms[i] is a list of terms joined by max;
    each term is a list of (coefficient, index) pairs joined by min.
    """
    kind: Literal["minmax"] = "minmax"
    terms: list[list[MinMaxTerm]]

    @model_validator(mode="after")
    def check_terms(self):
        dim = len(self.terms)
        for coordinate in self.terms:
            if not coordinate or any(not term for term in coordinate):
                raise ValueError("Every coordinate needs at least one non-empty term.")
            for term in coordinate:
                for coef, index in term:
                    if coef <= 0:
                        raise ValueError("Min-max coefficients must be positive.")
                    if not 0 <= index < dim:
                        raise ValueError(f"Index {index} out of range for dimension {dim}.")
        return self


class MinMaxExampleModel(BaseModel):
    """The built-in period-6 min-max map on R^3_+."""
    kind: Literal["minmax_example"] = "minmax_example"


MapModel = Annotated[
    MatrixMapModel | MinMaxMapModel | MinMaxExampleModel,
    Field(discriminator="kind")
]


class CallableMapModel(BaseModel):
    """Bindings for a user-supplied map of ambient dimension dim."""
    function: Callable
    dim: int = Field(ge=1)


# transfer operator documents

class GridModel(BaseModel):
    """Uniform grid on [lo, hi] with rho(s, t) = |s - t|."""
    n: int = Field(default=256, ge=2)
    lo: float = 0.0
    hi: float = 1.0

    @model_validator(mode="after")
    def check_interval(self):
        if not self.hi > self.lo:
            raise ValueError("Grid requires hi > lo.")
        return self


class AffineMapModel(BaseModel):
    """theta(s) = a * s + b."""
    kind: Literal["affine"] = "affine"
    a: float
    b: float


class IndexMapModel(BaseModel):
    """theta given as the image index of every point."""
    kind: Literal["index"] = "index"
    indices: list[int]


ContractionMapModel = Annotated[
    AffineMapModel | IndexMapModel,
    Field(discriminator="kind")
]


class WeightModel(BaseModel):
    """A weight function b_i, tabulated or affine (b(s) = p * s + q)."""
    table: list[float] | None = None
    affine: tuple[float, float] | None = None

    @model_validator(mode="after")
    def check_representation(self):
        if (self.table is None) == (self.affine is None):
            raise ValueError("Give exactly one of 'table' or 'affine'.")
        return self


class IFSSpecModel(BaseModel):
    """Bindings model for a transfer operator of an iterated function system."""
    model_config = ConfigDict(populate_by_name=True)

    grid: GridModel | None = None
    points: list[float] | None = None
    rho: list[list[float]] | None = None
    maps: list[ContractionMapModel] = Field(min_length=1)
    lipschitz_bound: float = Field(gt=0, lt=1)
    weights: list[WeightModel] = Field(min_length=1)
    M0: float = Field(gt=0)
    lam: float = Field(default=1.0, gt=0, le=1, alias="lambda")

    @model_validator(mode="after")
    def check_consistency(self):
        if len(self.maps) != len(self.weights):
            raise ValueError("Every map needs exactly one weight.")
        if self.grid is None and self.points is None:
            self.grid = GridModel(n=settings.grid_size)
        if self.grid is not None and self.points is not None:
            raise ValueError("Give either 'grid' or 'points' (with optional 'rho').")
        return self


# command documents

class DistInput(BaseModel):
    cone: ConeModel
    x: PointModel
    y: PointModel


class MatrixInput(BaseModel):
    matrix: NonnegativeMatrix
    x0: list[float] | None = None
    n_samples: int = Field(default=10_000, ge=1)


class EmbedInput(BaseModel):
    kind: Literal["log", "simplex", "polytope"]
    points: list[list[float]] = Field(min_length=1)
    base_index: int = -1
    polytope: PolytopeModel | None = None

    @model_validator(mode="after")
    def check_polytope(self):
        if self.kind == "polytope" and self.polytope is None:
            raise ValueError("Embedding kind 'polytope' requires a 'polytope'.")
        return self


class OrbitInput(BaseModel):
    map: MapModel
    x0: list[float] = Field(min_length=1)
    steps: int = Field(default=100, ge=0)
    normalization: Literal["sum", "none"] = "sum"
    metric: Literal["hilbert", "thompson"] = "hilbert"


class TransferInput(BaseModel):
    ifs: IFSSpecModel
    M2: float = Field(gt=0)


class BoundQuery(BaseModel):
    kind: PeriodBoundKind
    size: int


class BoundsInput(BaseModel):
    queries: list[BoundQuery] = []
    possible_periods: list[int] = []


class RunnerOutput(BaseModel):
    """Result of a runner; table rows feed the CSV artifact."""
    result: dict[str, Any]
    table: list[dict[str, Any]] | None = None


class RunConfig(BaseModel):
    """Configuration of a single CLI run."""
    command: Literal["dist", "diam", "power", "embed", "orbit", "transfer", "bounds"]
    input_path: Path
    output_path: Path | None = None
    seed: int | None = None
    tol: float | None = Field(default=None, gt=0)
    max_iter: int | None = Field(default=None, ge=1)
    format: Literal["json", "csv"] = "json"

    @model_validator(mode="after")
    def check_seed(self):
        if self.command == "diam" and self.seed is None:
            raise ValueError("Command 'diam' samples randomly and requires --seed.")
        return self
