# sync_search/utils/config.py

"""
Central configuration loader.
"""

import os
from pathlib import Path
from typing import Literal, Optional

import yaml
from pydantic import BaseModel, Field, ValidationError

from sync_search.errors import ConfigError
from sync_search.semigroup.closure import DEFAULT_CAP

DEFAULT_PATH = Path(__file__).resolve().parents[2] / "config" / "config.yaml"
ENV_VAR = "SYNC_SEARCH_CONFIG"


class SearchSection(BaseModel):
    # null means n^2 - 5n + 9
    threshold: Optional[int] = Field(None, ge=1)
    jobs: int = Field(1, ge=1)
    letter_permutations: bool = True


class ExclusionsSection(BaseModel):
    theorem2: bool = True
    theorem4: bool = True
    one_cluster: bool = True
    reducible_generators: bool = True
    twin_pairs: bool = True
    prop2: bool = True


class SieveSection(BaseModel):
    semigroup_cap: int = Field(DEFAULT_CAP, ge=1)
    assume_cerny_below: bool = False
    prop2_condition: Literal["idempotent_or_involution", "involution_only"] = "idempotent_or_involution"
    exclusions: ExclusionsSection = ExclusionsSection()


class OneClusterSection(BaseModel):
    m_max: int = Field(24, ge=2, le=24)


class LoggingSection(BaseModel):
    level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "INFO"
    format: str = "%(asctime)s | %(levelname)s | %(message)s"


class AppConfig(BaseModel):
    search: SearchSection = SearchSection()
    sieve: SieveSection = SieveSection()
    onecluster: OneClusterSection = OneClusterSection()
    logging: LoggingSection = LoggingSection()

    class Config:
        extra = "forbid"


def load_config(path=None) -> AppConfig:
    """
    Load configuration from config/config.yaml, or from `path`, or from the
    file named by SYNC_SEARCH_CONFIG.

    Returns:
        AppConfig: validated configuration
    """
    explicit = path or os.getenv(ENV_VAR)
    path = Path(explicit) if explicit else DEFAULT_PATH
    if not path.exists():
        if explicit:
            raise ConfigError(f"config file {path} not found")
        return AppConfig()

    try:
        with open(path, "r") as f:
            raw = yaml.safe_load(f) or {}
    except yaml.YAMLError as e:
        raise ConfigError(f"{path}: invalid YAML: {e}")

    try:
        return AppConfig.parse_obj(raw)
    except ValidationError as e:
        first = e.errors()[0]
        key = ".".join(str(part) for part in first["loc"])
        raise ConfigError(f"{path}: {key}: {first['msg']}")


# Global config object
_config = None


def get_config() -> AppConfig:
    """
    Get config (cached for performance).
    """
    global _config
    if _config is None:
        _config = load_config()
    return _config
