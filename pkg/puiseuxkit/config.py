"""
Configuration management using simple class.
Loads environment variables and provides a singleton settings instance.
"""
import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

# .env is loaded once so that os.getenv() below sees its values
load_dotenv()

_REPO_ROOT = Path(__file__).resolve().parent.parent

ORDERING_KINDS = ("lex", "grlex", "grevlex")


class Settings:
    """Application settings loaded from environment variables."""

    def __init__(self):
        # Monomial ordering used when the caller does not pick one
        self.default_order = os.getenv("PUISEUX_DEFAULT_ORDER", "grlex").lower()
        if self.default_order not in ORDERING_KINDS:
            raise ValueError(
                f"PUISEUX_DEFAULT_ORDER must be one of {', '.join(ORDERING_KINDS)}, "
                f"got {self.default_order!r}"
            )

        # Explicit subgroup enumeration is refused above this many elements
        self.max_group_order = int(os.getenv("PUISEUX_MAX_GROUP_ORDER", "1000000"))

        # Root lifting
        self.default_trunc = int(os.getenv("PUISEUX_DEFAULT_TRUNC", "8"))
        self.prefer_rational_root = os.getenv("PUISEUX_PREFER_RATIONAL_ROOT", "true").lower() == "true"

        # Human-readable output templates
        self.templates_dir = os.getenv("PUISEUX_TEMPLATES_DIR", str(_REPO_ROOT / "templates"))

        # Logging
        self.log_level = os.getenv("PUISEUX_LOG_LEVEL", "WARNING").upper()


# Singleton instance
_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Get the singleton settings instance."""
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def reset_settings() -> None:
    """Drop the cached settings so the next get_settings() re-reads the environment."""
    global _settings
    _settings = None
