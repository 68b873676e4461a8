"""
Configuration Management - Ambient settings, numeric defaults and logging setup
"""

import sys
from typing import Optional

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Ambient settings read from the environment (PHIBOUNDS_*)."""

    log_level: str = Field("WARNING", description="loguru level for the stderr sink")

    model_config = SettingsConfigDict(env_prefix="PHIBOUNDS_", extra="ignore")


class NumericDefaults(BaseModel):
    """Numeric defaults shared by the oracle, the analysis and the CLI.

    Not read from the environment: identical arguments
    must always produce identical output.
    """

    model_config = ConfigDict(frozen=True)

    # [0, x_max] is exhaustive at double precision: Q and every h underflow beyond ~38.6
    x_max: float = 40.0
    coarse_points: int = 4097
    x_tolerance: float = 1e-8
    slack: float = 1e-15
    tie_tolerance: float = 1e-18
    verify_points: int = 1_000_000

    # Oracle
    erf_switch: float = 3.0
    max_series_terms: int = 200
    max_cf_iterations: int = 500


_LOG_FORMAT = "<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | {name}:{function} - {message}"


def configure_logging(level: Optional[str] = None) -> None:
    """
    Route loguru output to a single stderr sink.

    Args:
        level: Level name; falls back to Settings.log_level
    """
    logger.remove()
    # sys.stderr is looked up per message
    logger.add(lambda message: sys.stderr.write(message), level=(level or settings.log_level).upper(), format=_LOG_FORMAT)


# Global instances
settings = Settings()
defaults = NumericDefaults()
