"""
Configuration management using Pydantic Settings.
Loads from environment variables (GOGMAGOG_*) and .env file.
"""

from typing import Literal
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import Field


class Settings(BaseSettings):
    """Run-time configuration for enumeration caps, worker pool and logging."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="GOGMAGOG_",
        case_sensitive=False,
    )

    # Size caps
    max_triangle_n: int = Field(
        default=6,
        description="Largest triangle size the verification suites enumerate"
    )
    max_trapezoid_n: int = Field(
        default=7,
        description="Largest size for trapezoid sweeps"
    )
    max_pentagon_n: int = Field(
        default=8,
        description="Largest size for pentagon sweeps"
    )
    max_determinant_n: int = Field(
        default=6,
        description="Largest size for the Z(n,x,y) determinant in the harness"
    )

    # Worker pool
    jobs: int = Field(default=1, description="Worker processes for partitioned counts")

    # Randomized checks
    involution_samples: int = Field(
        default=10000,
        description="Random size-6 triangles checked for S(S(t)) = t"
    )
    random_seed: int = Field(default=0, description="Seed for randomized checks")

    # Families
    gogam_method: Literal["schutzenberger", "inequality"] = Field(
        default="schutzenberger",
        description="How GOGAm triangles are generated"
    )

    # Output
    log_level: str = Field(default="INFO", description="Logging level")
    report_format: Literal["table", "json", "yaml"] = Field(
        default="table",
        description="Default report rendering"
    )


# Global settings instance
settings = Settings()
