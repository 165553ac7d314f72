"""Configuration settings for hamburn."""

from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings."""

    model_config = SettingsConfigDict(env_file=".env", env_prefix="HAMBURN_")

    # Materialization of H(n, q) as an explicit graph
    materialize_cap: int = Field(default=4096, ge=1)  # Max q**n vertices

    # Exact solver guards
    solver_vertex_cap: int = Field(default=64, ge=1)
    solver_time_budget: Optional[float] = Field(default=None, gt=0)  # Seconds

    # Parallelism (1 = sequential)
    workers: int = Field(default=1, ge=1)

    # Constant c in upper - lower_real <= c * sqrt(n ln n)
    envelope_constant: float = Field(default=3.0, gt=0)

    log_file: Optional[str] = Field(default=None)


# Global settings instance
settings = Settings()
