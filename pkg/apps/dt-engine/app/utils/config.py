"""
Central configuration management for the green-sequence / DT engine.

Key goals:
- Typed, validated configuration
- Engine defaults (degree, step budget, search bounds, seed) overridable
  from the environment and then from CLI flags
- Packaged sample data resolved the same way in a checkout and an install
"""

from __future__ import annotations

import os
from functools import lru_cache
from typing import Literal, Optional

from pydantic import BaseModel, Field, ValidationError


Environment = Literal["local", "dev", "prod"]


def _get_env(name: str, default: Optional[str] = None) -> str:
    value = os.getenv(name, default)
    if value is None:
        raise RuntimeError(f"Missing required environment variable: {name}")
    return value


def _env_bool(name: str, default: bool) -> bool:
    raw = os.getenv(name)
    if raw is None:
        return default
    return raw.strip().lower() in {"1", "true", "yes", "on"}


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise RuntimeError(f"{name} must be an integer, got {raw!r}") from exc


class EngineConfig(BaseModel):
    degree: int = Field(default=8, ge=0, description="Truncation degree D")
    budget: int = Field(default=1000, ge=1, description="Mutation method step budget")
    max_len: int = Field(default=20, ge=1, description="Maximal green sequence length bound")
    node_budget: int = Field(default=100_000, ge=1, description="DFS node budget")
    seed: int = Field(default=20130101, description="Seed for randomized drivers")

    class Config:
        frozen = True


class DataConfig(BaseModel):
    sample_dir: str = Field(default="data/sample")

    class Config:
        frozen = True


class FeatureFlags(BaseModel):
    strict_validation: bool = False

    class Config:
        frozen = True


class AppConfig(BaseModel):
    env: Environment = Field(default="local")
    service_name: str = "dt-engine"
    log_level: str = Field(default="WARNING")

    engine: EngineConfig
    data: DataConfig
    features: FeatureFlags

    class Config:
        frozen = True


@lru_cache(maxsize=1)
def load_config() -> AppConfig:
    """
    Load and validate runtime configuration.
    """

    try:
        env: Environment = _get_env("APP_ENV", "local")  # type: ignore

        engine = EngineConfig(
            degree=_env_int("DT_DEGREE", 8),
            budget=_env_int("DT_BUDGET", 1000),
            max_len=_env_int("DT_MAX_LEN", 20),
            node_budget=_env_int("DT_NODE_BUDGET", 100_000),
            seed=_env_int("DT_SEED", 20130101),
        )

        data = DataConfig(
            sample_dir=os.getenv("SAMPLE_DIR", "data/sample"),
        )

        features = FeatureFlags(
            strict_validation=_env_bool("FEATURE_STRICT_VALIDATION", env == "prod"),
        )

        return AppConfig(
            env=env,
            log_level=os.getenv("LOG_LEVEL", "WARNING"),
            engine=engine,
            data=data,
            features=features,
        )

    except ValidationError as exc:
        raise RuntimeError(f"Invalid configuration: {exc}") from exc
