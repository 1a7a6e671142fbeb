"""Configuration loading from .env file."""

import logging
import os
from pathlib import Path

from dotenv import load_dotenv

# Load .env file
load_dotenv()


def _env(key: str, default: str = "") -> str:
    """Get env value, stripping any inline comment."""
    return os.getenv(key, default).split("#")[0].strip()


class Config:
    """Application configuration."""

    # Logging
    LOG_LEVEL: str = _env("LOG_LEVEL", "INFO")
    LOG_DIR: str = _env("LOG_DIR", "")

    # Computation bounds
    ORACLE_MAX_DIM: int = int(_env("ORACLE_MAX_DIM", "60"))
    VERIFY_MAX_DIM: int = int(_env("VERIFY_MAX_DIM", "40"))
    STAIRCASE_DEPTH: int = int(_env("STAIRCASE_DEPTH", "8"))
    TUBE_DEPTH_FACTOR: int = int(_env("TUBE_DEPTH_FACTOR", "3"))
    WIDEST_DIM_FACTOR: int = int(_env("WIDEST_DIM_FACTOR", "4"))

    # Random orientation sweeps
    RANDOM_QUIVERS: int = int(_env("RANDOM_QUIVERS", "20"))
    RANDOM_MAX_VERTICES: int = int(_env("RANDOM_MAX_VERTICES", "7"))
    RANDOM_SEED: int = int(_env("RANDOM_SEED", "0"))

    # Rendering
    SVG_SCALE: int = int(_env("SVG_SCALE", "400"))
    SVG_ROTATE: bool = _env("SVG_ROTATE", "true").lower() == "true"

    @classmethod
    def validate(cls) -> list[str]:
        """Validate configuration. Returns list of errors."""
        errors = []

        if not isinstance(logging.getLevelName(cls.LOG_LEVEL.upper()), int):
            errors.append(f"LOG_LEVEL {cls.LOG_LEVEL!r} is not a logging level")
        if cls.ORACLE_MAX_DIM < 1:
            errors.append("ORACLE_MAX_DIM must be positive")
        if cls.VERIFY_MAX_DIM < 1:
            errors.append("VERIFY_MAX_DIM must be positive")
        if cls.STAIRCASE_DEPTH < 5:
            errors.append("STAIRCASE_DEPTH must be at least 5")
        if cls.TUBE_DEPTH_FACTOR < 1:
            errors.append("TUBE_DEPTH_FACTOR must be positive")
        if cls.WIDEST_DIM_FACTOR < 3:
            errors.append("WIDEST_DIM_FACTOR must be at least 3 (bound >= 3h)")
        if cls.RANDOM_MAX_VERTICES < 3:
            errors.append("RANDOM_MAX_VERTICES must be at least 3")
        if cls.SVG_SCALE <= 0:
            errors.append("SVG_SCALE must be positive")

        return errors

    @classmethod
    def ensure_directories(cls) -> None:
        """Create the log directory if one is configured."""
        if cls.LOG_DIR:
            Path(cls.LOG_DIR).mkdir(parents=True, exist_ok=True)
