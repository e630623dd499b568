from functools import lru_cache
from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

BUNDLED_DATA_DIR = Path(__file__).parent / "data"


class Settings(BaseSettings):
    """Global application settings"""

    PROJECT_NAME: str = "artin-floor"

    # Quadrature Settings
    QUAD_TOL: float = Field(1e-11, gt=0)
    QUAD_MAX_DEPTH: int = Field(50, ge=1)

    # M(n, r, u) maximization
    SCAN_START: float = Field(0.05, gt=0)
    SCAN_RATIO: float = Field(1.1, gt=1)
    SCAN_PATIENCE: int = Field(40, ge=1)
    SCAN_Z_CAP: float = Field(5000.0, gt=0)
    GOLDEN_WIDTH: float = Field(1e-6, gt=0)

    # Bound search Settings
    VERTEX_CAP: int = Field(10**7, ge=0)
    TIE_TOLERANCE: float = Field(1e-9, ge=0)

    # Worker parallelism
    ARTIN_FLOOR_THREADS: int = Field(1, ge=1)

    # Data Settings
    DATA_DIR: Path = BUNDLED_DATA_DIR

    # Logfire Settings
    LOGFIRE_TOKEN: str | None = None

    # Logging Settings
    LOG_LEVEL: str = "INFO"

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",  # Allow extra fields in .env file
    )


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance"""
    return Settings()
