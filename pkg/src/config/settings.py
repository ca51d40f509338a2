"""Application settings using Pydantic."""

from functools import lru_cache
from pathlib import Path
from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Main application settings loaded from the environment (EDGELAB_*)."""

    # Parallelism; EDGELAB_THREADS overrides --workers
    threads: Optional[int] = Field(None, ge=1, description="Worker count override")
    block_size: int = Field(250, ge=1, description="Replicates per RNG substream block")

    # Regime guards
    s_min: float = Field(4.0, gt=1.0, description="Minimum edge scale n(2-y)^{3/2}")
    delta: float = Field(0.5, gt=0.0, lt=4.0, description="Bulk cutoff for edge windows")

    # Paths
    output_dir: Path = Field(Path("edgelab-out"), description="Default report directory")

    # Logging
    log_level: str = Field("INFO", description="Log level")
    log_format: str = Field("text", description="Log format (text, json)")
    log_file: Optional[Path] = Field(None, description="Log file path")

    # Logfire
    logfire_enabled: bool = True
    logfire_project: Optional[str] = None
    logfire_service_name: str = "edgelab"

    @field_validator('log_level')
    @classmethod
    def validate_level(cls, v: str) -> str:
        """Validate log level."""
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if v.upper() not in valid_levels:
            raise ValueError(f"Invalid log level: {v}")
        return v.upper()

    @field_validator('log_format')
    @classmethod
    def validate_format(cls, v: str) -> str:
        """Validate log format."""
        if v not in ("text", "json"):
            raise ValueError(f"Invalid log format: {v}")
        return v

    def resolve_workers(self, requested: int) -> int:
        """Worker count after applying the EDGELAB_THREADS override."""
        return self.threads if self.threads is not None else requested

    model_config = SettingsConfigDict(
        env_prefix="EDGELAB_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
