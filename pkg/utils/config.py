from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field

from utils.errors import InputError


class Tolerances(BaseModel):
    """Все числовые допуски в одном месте; печатаются в заголовке отчета"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    zero_eigenvalue: float = 1e-7
    inequality_slack: float = 1e-6
    residual: float = 1e-8
    strict_margin: float = 1e-9
    spot_equality: float = 1e-8
    interlacing: float = 1e-7
    multiplicity: float = 1e-6


class Limits(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    max_graph6_n: int = 62
    max_isomorphism_n: int = 12
    max_matching_n: int = 16
    max_charpoly_n: int = 40
    max_enumeration_n: int = 8
    max_tree_n: int = 10
    naive_oracle_n: int = 6
    coloring_node_budget: int = 2_000_000


class ToolkitConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    tolerances: Tolerances = Field(default_factory=Tolerances)
    limits: Limits = Field(default_factory=Limits)
    log_level: str = "WARNING"
    log_dir: Optional[str] = None
    jobs: int = Field(default=1, ge=1)


def load_config(path: Optional[Union[str, Path]] = None,
                overrides: Optional[Dict[str, Any]] = None) -> ToolkitConfig:
    """Загрузка YAML-конфигурации поверх значений по умолчанию"""
    data: Dict[str, Any] = {}
    if path is not None:
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f) or {}
        except OSError as e:
            raise InputError(f"cannot read config {path}: {e}") from e
        except yaml.YAMLError as e:
            raise InputError(f"invalid YAML in {path}: {e}") from e
        if not isinstance(data, dict):
            raise InputError(f"config {path} must be a mapping")
    if overrides:
        data.update({k: v for k, v in overrides.items() if v is not None})
    try:
        return ToolkitConfig.model_validate(data)
    except ValueError as e:
        raise InputError(f"invalid configuration: {e}") from e


_config: Optional[ToolkitConfig] = None


def get_config() -> ToolkitConfig:
    global _config
    if _config is None:
        _config = ToolkitConfig()
    return _config


def configure(config: ToolkitConfig) -> ToolkitConfig:
    global _config
    _config = config
    return _config


def get_tolerances() -> Tolerances:
    return get_config().tolerances


def get_limits() -> Limits:
    return get_config().limits
