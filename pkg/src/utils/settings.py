"""
Runtime settings loaded from the environment.

Values come from process environment variables, optionally seeded from a
`.env` file in the working directory.
"""

import logging
import os
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

from .constants import DEFAULT_STATE_CAP, DEFAULT_VERIFY_N_MAX, MIN_PIPELINE_LENGTH


ENV_STATE_CAP = "PETRI_STATE_CAP"
ENV_VERIFY_N_MAX = "PETRI_VERIFY_N_MAX"
ENV_LOG_LEVEL = "PETRI_LOG_LEVEL"


class Settings(BaseModel):
    """
    Engine configuration.

    state_cap bounds every exploration; verify_n_max bounds the pipeline
    length accepted by the theorem verifier.
    """
    state_cap: int = Field(default=DEFAULT_STATE_CAP, ge=1)
    verify_n_max: int = Field(default=DEFAULT_VERIFY_N_MAX, ge=MIN_PIPELINE_LENGTH)
    log_level: str = "WARNING"

    model_config = {"frozen": True}

    @field_validator('log_level', mode='after')
    @classmethod
    def normalize_level(cls, v: str) -> str:
        """Log level must name a stdlib logging level"""
        level = v.strip().upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f"Unknown log level: {v!r}")
        return level

    @classmethod
    def from_env(cls, dotenv_path: Optional[str] = None) -> 'Settings':
        """
        Build settings from environment variables.

        Args:
            dotenv_path: Optional explicit .env file. Defaults to searching
                         the working directory.

        Returns:
            Settings with unset variables left at their defaults
        """
        load_dotenv(dotenv_path)
        values = {}
        if os.getenv(ENV_STATE_CAP):
            values['state_cap'] = int(os.environ[ENV_STATE_CAP])
        if os.getenv(ENV_VERIFY_N_MAX):
            values['verify_n_max'] = int(os.environ[ENV_VERIFY_N_MAX])
        if os.getenv(ENV_LOG_LEVEL):
            values['log_level'] = os.environ[ENV_LOG_LEVEL]
        return cls(**values)


_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Return process-wide settings, loading them on first use."""
    global _settings
    if _settings is None:
        _settings = Settings.from_env()
    return _settings


def reset_settings() -> None:
    """Forget cached settings so the next get_settings() re-reads the env."""
    global _settings
    _settings = None
