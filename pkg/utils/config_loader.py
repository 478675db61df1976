"""
Config Loader - YAML settings, environment overrides and logging setup for the CLI
"""

import copy
import logging
import os
import sys
from pathlib import Path
from typing import Any, Dict, Literal, Optional

import yaml
from pydantic import BaseModel, ConfigDict, Field

from modules.search import ExhaustiveLimits, SearchBudget

DEFAULT_CONFIG_PATH = "config/config.yaml"
DB_ENV_VAR = "LCD_DB"
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

DEFAULTS: Dict[str, Any] = {
    "system": {"name": "LCD Code Lab", "version": "1.0.0"},
    "modules": {
        "search": {
            "seed": 20240601,
            "max_iterations": 1500,
            "restarts": 6,
            "workers": 1,
            "lcd_probe_limit": 48,
            "max_sideways": 40,
            "exhaustive": {"max_n_k3": 40, "max_n_k4": 20, "max_n_k5": 12},
        },
        "canonical": {"beam_cap": 4096},
        "theorems": {"workers": 1, "preflight_samples": 100},
        "database": {"path": "db"},
    },
    "output": {"format": "text"},
    "logging": {"level": "INFO", "format": LOG_FORMAT, "file": None},
}


class CliConfig(BaseModel):
    """Settings the CLI works with after defaults, file, environment and flags are merged."""

    model_config = ConfigDict(frozen=True)

    db_path: Path = Path("db")
    output_format: Literal["text", "json", "tsv"] = "text"
    seed: int = Field(default=20240601, gt=0, lt=1 << 64)
    budget: SearchBudget = SearchBudget()
    limits: ExhaustiveLimits = ExhaustiveLimits()
    beam_cap: int = Field(default=4096, gt=0)
    theorem_workers: int = Field(default=1, gt=0)
    preflight_samples: int = Field(default=100, gt=0)


def _merge(base: Dict, override: Dict) -> Dict:
    merged = copy.deepcopy(base)
    for key, value in (override or {}).items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_config(config_path: Optional[str] = None) -> Dict:
    """
    Load the YAML configuration on top of the built-in defaults

    Args:
        config_path: YAML file; a missing default file is not an error

    Returns:
        Merged configuration dictionary

    Raises:
        ValueError: an explicitly named file is missing or is not a mapping
    """
    path = Path(config_path or DEFAULT_CONFIG_PATH)
    if not path.exists():
        if config_path:
            raise ValueError(f"Config file not found: {config_path}")
        return copy.deepcopy(DEFAULTS)

    with open(path, "r", encoding="utf-8") as f:
        loaded = yaml.safe_load(f) or {}
    if not isinstance(loaded, dict):
        raise ValueError(f"Config file {path} must contain a mapping")
    return _merge(DEFAULTS, loaded)


def build_cli_config(
    config: Dict,
    db: Optional[str] = None,
    output_format: Optional[str] = None,
    seed: Optional[int] = None,
) -> CliConfig:
    """Defaults < config file < LCD_DB < flags."""
    modules = config.get("modules", {})
    search = modules.get("search", {})
    exhaustive = search.get("exhaustive", {})

    db_path = modules.get("database", {}).get("path", "db")
    if os.environ.get(DB_ENV_VAR):
        db_path = os.environ[DB_ENV_VAR]
    if db:
        db_path = db

    seed = seed if seed is not None else search.get("seed", 20240601)
    budget = SearchBudget(
        max_iterations=search.get("max_iterations", 1500),
        restarts=search.get("restarts", 6),
        seed=seed,
        workers=search.get("workers", 1),
        lcd_probe_limit=search.get("lcd_probe_limit", 48),
        max_sideways=search.get("max_sideways", 40),
    )
    limits = ExhaustiveLimits(workers=search.get("workers", 1), **exhaustive)
    return CliConfig(
        db_path=Path(db_path),
        output_format=output_format or config.get("output", {}).get("format", "text"),
        seed=seed,
        budget=budget,
        limits=limits,
        beam_cap=modules.get("canonical", {}).get("beam_cap", 4096),
        theorem_workers=modules.get("theorems", {}).get("workers", 1),
        preflight_samples=modules.get("theorems", {}).get("preflight_samples", 100),
    )


def setup_logging(config: Dict, verbose: bool = False) -> None:
    """Attach stderr (and optional file) handlers to the root logger, once."""
    settings = config.get("logging", {})
    root = logging.getLogger()
    if getattr(root, "_lcdlab_configured", False):
        return
    level = logging.DEBUG if verbose else getattr(logging, str(settings.get("level", "INFO")).upper(), logging.INFO)
    formatter = logging.Formatter(settings.get("format") or LOG_FORMAT)

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(formatter)
    handler.setLevel(level)
    root.addHandler(handler)

    log_file = settings.get("file")
    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_file, encoding="utf-8")
        file_handler.setFormatter(formatter)
        root.addHandler(file_handler)
    root._lcdlab_configured = True
