import os
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field

load_dotenv()


def _int_env(key: str, default: int) -> int:
    raw = os.getenv(key)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{key} must be an integer, got {raw!r}")


class Settings(BaseModel):
    """Runtime settings, read from the environment (and a .env file if present)."""

    cache_dir: Optional[str] = Field(default=None, description="Directory for the advisory k-Schur cache.")
    max_rank: int = Field(default=7, ge=2, description="Largest n accepted without --allow-large.")
    jobs: int = Field(default=1, ge=1, description="Worker processes for verification sweeps.")
    log_level: str = Field(default="INFO")


def get_settings() -> Settings:
    return Settings(
        cache_dir=os.getenv("QKSCHUR_CACHE_DIR") or None,
        max_rank=_int_env("QKSCHUR_MAX_RANK", 7),
        jobs=_int_env("QKSCHUR_JOBS", 1),
        log_level=os.getenv("QKSCHUR_LOG_LEVEL", "INFO"),
    )
