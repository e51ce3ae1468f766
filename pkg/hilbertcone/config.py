"""Settings for hilbertcone.

Defaults can be overridden with HILBERTCONE_* variables,
either in the environment or in a .env file.
"""

import os

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field

load_dotenv()

_PREFIX = "HILBERTCONE_"


class Settings(BaseModel):
    """Numerical tolerances and iteration limits."""

    model_config = ConfigDict(frozen=True)

    comparability_rtol: float = Field(default=1e-12, gt=0)
    condition_floor: float = Field(default=1e-12, gt=0)
    parallel_tol: float = Field(default=1e-14, gt=0)
    interior_rtol: float = Field(default=1e-12, gt=0)
    eigen_cluster_tol: float = Field(default=1e-9, gt=0)
    power_tol: float = Field(default=1e-12, gt=0)
    power_max_iter: int = Field(default=100_000, ge=1)
    period_tol: float = Field(default=1e-9, gt=0)
    transfer_tol: float = Field(default=1e-10, gt=0)
    transfer_max_iter: int = Field(default=500, ge=1)
    grid_size: int = Field(default=256, ge=2)
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls) -> "Settings":
        """Construct Settings from HILBERTCONE_* environment variables."""
        overrides = {
            name: value
            for name in cls.model_fields
            if (value := os.getenv(f"{_PREFIX}{name.upper()}")) is not None
        }
        return cls(**overrides)


settings = Settings.from_env()
