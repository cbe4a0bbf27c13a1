"""
Configuration and logging setup for lcmfarey.

Every setting lives in one flat dict. Callers get their own copy from
create_config() so nothing here is mutated at runtime.
"""
import os
import sys
from typing import Any, Dict, Optional

from loguru import logger

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

DEFAULT_CONFIG = {
    "INITIAL_BITS_FLOOR": 64,
    "MAX_BITS_FACTOR": 16,          # max_bits = factor * initial_bits
    "WORKERS": 1,
    "OUTPUT_FORMAT": "text",
    "OEIS_BASE_URL": "https://oeis.org",
    "CACHE_DIR": "oeis_cache",      # relative to the project root
    "FIXTURE_DIR": os.path.join("src", "fixtures"),
    "HTTP_TIMEOUT": 30,
    "LOG_LEVEL": "WARNING",
}

# Environment variable -> config key
ENV_OVERRIDES = {
    "LCMFAREY_OEIS_BASE_URL": "OEIS_BASE_URL",
    "LCMFAREY_CACHE_DIR": "CACHE_DIR",
    "LCMFAREY_LOG_LEVEL": "LOG_LEVEL",
}

LOG_FORMAT = "<level>{level: <8}</level> | {name}:{function} - {message}"


def create_config(overrides: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """Defaults, then environment, then explicit overrides (None values skipped)."""
    config = dict(DEFAULT_CONFIG)
    for env_name, key in ENV_OVERRIDES.items():
        value = os.environ.get(env_name)
        if value:
            config[key] = value
    for key, value in (overrides or {}).items():
        if key not in DEFAULT_CONFIG:
            raise ValueError(f"Unknown configuration key: {key}")
        if value is not None:
            config[key] = value
    return config


def resolve_path(path: str) -> str:
    """Relative paths are taken relative to the project root."""
    if os.path.isabs(path):
        return path
    return os.path.join(PROJECT_ROOT, path)


def configure_logging(level: str = "WARNING") -> None:
    logger.remove()
    logger.add(sys.stderr, level=level.upper(), format=LOG_FORMAT)


def allow_big_int_text() -> None:
    """Lift the int <-> str digit limit (Python 3.10.7+); exact LCM values pass 4300 digits near n = 9900."""
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)


allow_big_int_text()
