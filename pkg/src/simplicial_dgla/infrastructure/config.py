"""
Centralized configuration management using Pydantic Settings.

Handles environment variables, .env file loading, and configuration validation.
"""

import logging
from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

logger = logging.getLogger(__name__)


class LoggingSettings(BaseSettings):
    """Logging configuration."""

    level: str = Field(
        default="WARNING",
        description="Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)",
    )

    model_config = SettingsConfigDict(
        env_prefix="LOG_", case_sensitive=False, env_file=".env", extra="ignore"
    )

    @field_validator("level")
    @classmethod
    def validate_level(cls, v: str) -> str:
        """Validate logging level."""
        valid_levels = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}
        v_upper = v.upper()
        if v_upper not in valid_levels:
            raise ValueError(
                f"Invalid logging level: {v}. Must be one of: {', '.join(sorted(valid_levels))}"
            )
        return v_upper


class ComputationSettings(BaseSettings):
    """Pipeline configuration."""

    truncation_margin: int = Field(
        default=1,
        ge=1,
        description="Generators store K = k + margin levels above the Moore length k",
    )
    run_oracle: bool = Field(
        default=True,
        description="Compare the built DGLA with the superfield oracle in the dgla command",
    )
    max_oracle_level: int = Field(
        default=4,
        ge=0,
        description="Largest level the oracle is expanded at (cost grows like 4^n)",
    )

    model_config = SettingsConfigDict(
        env_prefix="SDGLA_", case_sensitive=False, env_file=".env", extra="ignore"
    )


class OutputSettings(BaseSettings):
    """Report output configuration."""

    format: str = Field(default="text", description="Output format: 'text' or 'json'")
    json_indent: int = Field(default=2, ge=0, description="Indentation of JSON documents")

    model_config = SettingsConfigDict(
        env_prefix="OUTPUT_", case_sensitive=False, env_file=".env", extra="ignore"
    )

    @field_validator("format")
    @classmethod
    def validate_format(cls, v: str) -> str:
        """Validate output format."""
        v_lower = v.lower()
        if v_lower not in {"text", "json"}:
            raise ValueError(f"Invalid output format: {v}. Must be 'text' or 'json'")
        return v_lower


class ApplicationConfig:
    """
    Facade for application configuration.

    Aggregates all configuration settings with automatic validation
    and .env file loading.

    Usage:
        >>> from simplicial_dgla.infrastructure.config import config
        >>> margin = config.computation.truncation_margin
        >>> fmt = config.output.format

    Environment Variables:
        LOG_LEVEL: Logging level (default: WARNING)
        SDGLA_TRUNCATION_MARGIN: Levels stored above the Moore length (default: 1, min: 1)
        SDGLA_RUN_ORACLE: Run the oracle comparison in dgla (default: true)
        SDGLA_MAX_ORACLE_LEVEL: Largest oracle level (default: 4)
        OUTPUT_FORMAT: text or json (default: text)
        OUTPUT_JSON_INDENT: JSON indentation (default: 2)
    """

    def __init__(self, _env_file: Optional[str] = ".env"):
        """
        Initialize configuration.

        Args:
            _env_file: Path to .env file (default: ".env").
                      Set to None to disable .env file loading (useful for testing).

        Raises:
            ValueError: If configuration validation fails
        """
        self.logging = LoggingSettings(_env_file=_env_file)
        self.computation = ComputationSettings(_env_file=_env_file)
        self.output = OutputSettings(_env_file=_env_file)

        logger.debug("Configuration loaded successfully")
        self._log_config()

    def _log_config(self) -> None:
        """Log configuration summary."""
        logger.debug(f"Log Level: {self.logging.level}")
        logger.debug(f"Truncation Margin: {self.computation.truncation_margin}")
        logger.debug(f"Run Oracle: {self.computation.run_oracle}")
        logger.debug(f"Max Oracle Level: {self.computation.max_oracle_level}")
        logger.debug(f"Output Format: {self.output.format} (indent {self.output.json_indent})")

    def __repr__(self) -> str:
        """Return string representation."""
        return (
            f"ApplicationConfig(\n"
            f"  logging.level={self.logging.level},\n"
            f"  computation.truncation_margin={self.computation.truncation_margin},\n"
            f"  computation.run_oracle={self.computation.run_oracle},\n"
            f"  computation.max_oracle_level={self.computation.max_oracle_level},\n"
            f"  output.format={self.output.format}\n"
            f")"
        )


# Singleton instance
config = ApplicationConfig()
