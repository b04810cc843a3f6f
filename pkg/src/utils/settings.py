"""
Runtime settings
Reads caps and verbosity from the environment (or a .env file)
"""

import os
from dotenv import load_dotenv
from pydantic import BaseModel, Field

# Load environment variables
load_dotenv()


def _flag(value: str) -> bool:
    return value.strip().lower() in {"1", "true", "yes", "on"}


class Settings(BaseModel):
    """Caps that keep default runs desk-scale"""

    brute_force_cap: int = Field(default=24, ge=1)
    wsat_cap: int = Field(default=24, ge=0)
    resample_cap: int = Field(default=100_000, ge=1)
    verbose: bool = False

    @classmethod
    def from_env(cls) -> "Settings":
        """
        Build settings from SRCW_* environment variables

        Returns:
            Settings with defaults for anything unset
        """
        return cls(
            brute_force_cap=int(os.getenv("SRCW_BRUTE_FORCE_CAP", "24")),
            wsat_cap=int(os.getenv("SRCW_WSAT_CAP", "24")),
            resample_cap=int(os.getenv("SRCW_RESAMPLE_CAP", "100000")),
            verbose=_flag(os.getenv("SRCW_VERBOSE", "false")),
        )


# Global instance for easy access
_settings = None


def get_settings() -> Settings:
    """Get or create global settings instance"""
    global _settings
    if _settings is None:
        _settings = Settings.from_env()
    return _settings
