"""Configuration management using pydantic-settings for lazy loading."""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Run settings loaded from environment variables.

    All settings are lazily loaded when first accessed via get_settings().
    CLI flags take precedence over these values.
    """

    model_config = SettingsConfigDict(
        env_prefix="BLOTTO_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
    )

    # Monte Carlo
    samples: int = Field(
        default=100_000,
        ge=1,
        description="Samples drawn per triangle-family depth",
    )
    seed: int = Field(
        default=42,
        ge=0,
        description="Seed for the PCG64 sample stream",
    )
    ks_threshold: float = Field(
        default=0.02,
        gt=0.0,
        description="Maximum sup-distance between empirical and analytic marginals",
    )

    # Fictitious play
    fp_tolerance: float = Field(
        default=1e-4,
        gt=0.0,
        description="Half-width of the value bracket at which fictitious play stops",
    )
    fp_max_iterations: int = Field(
        default=1_000_000,
        ge=1,
        description="Iteration cap for fictitious play",
    )

    # Plot data
    plot_points: int = Field(
        default=1000,
        ge=2,
        description="Number of equal intervals on [0, 1] for plot-data curves",
    )

    # Logging
    log_level: str = Field(
        default="WARNING",
        description="Logging level (DEBUG, INFO, WARNING, ERROR)",
    )


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance.

    Uses lru_cache to ensure settings are only loaded once.
    """
    return Settings()
