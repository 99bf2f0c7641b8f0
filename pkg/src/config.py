"""Runtime settings."""

import logging
import os
from typing import Mapping, Optional

from pydantic import BaseModel, Field, ValidationError, field_validator

from .constants import (
    DEFAULT_LOG_LEVEL,
    DEFAULT_QUADRATURE_ORDER,
    DEFAULT_SEED,
    DEFAULT_THREADS,
    FIXTURE_DIR,
    THREADS_ENV_VAR,
)
from .utils.errors import UsageError

logger = logging.getLogger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class Settings(BaseModel):
    """Worker count, seed, fixture location, logging and quadrature defaults."""

    threads: int = Field(default=DEFAULT_THREADS, ge=1)
    seed: int = DEFAULT_SEED
    fixture_dir: str = FIXTURE_DIR
    log_level: str = DEFAULT_LOG_LEVEL
    quadrature_order: int = Field(default=DEFAULT_QUADRATURE_ORDER, ge=2)

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, level: str) -> str:
        level = level.upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"log level must be one of {', '.join(LOG_LEVELS)}")
        return level


def load_settings(env: Optional[Mapping[str, str]] = None, **overrides: object) -> Settings:
    """
    Build Settings from defaults, the thread-count environment variable and overrides.

    Args:
        env: Environment mapping (defaults to os.environ)
        **overrides: Explicit field values; None entries are ignored

    Returns:
        Validated Settings

    Raises:
        UsageError: If a value fails validation
    """
    env = os.environ if env is None else env
    values = {}
    raw_threads = env.get(THREADS_ENV_VAR)
    if raw_threads:
        values["threads"] = raw_threads
    values.update({k: v for k, v in overrides.items() if v is not None})
    try:
        settings = Settings(**values)
    except ValidationError as e:
        raise UsageError("invalid settings", {"errors": [err["msg"] for err in e.errors()]})
    logger.debug("settings: %s", settings.model_dump())
    return settings
