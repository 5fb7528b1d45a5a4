"""Configuration module for loading environment variables."""

import logging
import os

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


class Settings:
    """Application settings loaded from environment variables."""

    # Reporting
    APP_VERSION: str = os.getenv("APP_VERSION", "0.1.0")
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "WARNING")

    # Verification suite defaults (CLI flags override these)
    SUITE_MAX_GENUS: int = int(os.getenv("SUITE_MAX_GENUS", "3"))
    SUITE_MAX_N: int = int(os.getenv("SUITE_MAX_N", "10"))
    SUITE_RANDOM_SEED: int = int(os.getenv("SUITE_RANDOM_SEED", "0"))
    SUITE_RANDOM_DIM_BOUND: int = int(os.getenv("SUITE_RANDOM_DIM_BOUND", "9"))
    SUITE_DTOP: int = int(os.getenv("SUITE_DTOP", "0"))

    @property
    def log_level(self) -> str:
        """Normalized logging level name; unknown names fall back to WARNING."""
        name = self.LOG_LEVEL.strip().upper()
        return name if name in logging.getLevelNamesMapping() else "WARNING"


# Create a global settings instance
settings = Settings()
