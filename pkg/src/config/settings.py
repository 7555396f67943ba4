#!/usr/bin/env python3
"""
Runtime settings for spinscreen.

Defaults live in config/defaults.json; the thread count can be capped through
the SPINSCREEN_THREADS environment variable (a project-root .env file is read
first). Command-line jobs are validated through the JobConfig model.
"""

import json
import logging
import os
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

from src.angular.half_int import HalfInt
from src.errors import LabelError

logger = logging.getLogger(__name__)

project_root = Path(__file__).parent.parent.parent
DEFAULTS_PATH = project_root / "config" / "defaults.json"
THREADS_ENV = "SPINSCREEN_THREADS"


@dataclass
class Tolerances:
    """Numerical tolerances shared by the checks and the CLI."""
    caustic_rel: float = 1e-9
    ridge_rel: float = 1e-6
    unitarity: float = 1e-10
    symmetry: float = 1e-12
    overflow_rescale: float = 1e250
    factorial_cap: int = 4000

    def __post_init__(self):
        for name, value in asdict(self).items():
            if not value > 0:
                raise ValueError(f"Tolerance '{name}' must be positive, got {value}")
        if int(self.factorial_cap) != self.factorial_cap:
            raise ValueError(f"factorial_cap must be an integer, got {self.factorial_cap}")
        self.factorial_cap = int(self.factorial_cap)

    @classmethod
    def from_dict(cls, values: Dict[str, Any]) -> "Tolerances":
        """Build from a mapping, rejecting unknown keys."""
        known = set(cls.__dataclass_fields__)
        unknown = set(values) - known
        if unknown:
            raise ValueError(f"Unknown tolerances {sorted(unknown)}. Valid: {sorted(known)}")
        return cls(**values)

    @classmethod
    def from_defaults(cls, overrides: Optional[Dict[str, Any]] = None,
                      defaults: Optional[Dict[str, Any]] = None) -> "Tolerances":
        """Tolerances of the defaults file with per-job overrides applied on top."""
        base = dict((defaults or load_defaults())["tolerances"])
        base.update(overrides or {})
        return cls.from_dict(base)


def load_defaults(path: Optional[Path] = None) -> Dict[str, Any]:
    """
    Load the defaults file.

    Args:
        path: Alternative JSON file; config/defaults.json when None

    Returns:
        Dictionary with sections sampling, tolerances, limit3j and output
    """
    path = Path(path) if path is not None else DEFAULTS_PATH
    with open(path, "r") as f:
        defaults = json.load(f)
    missing = {"sampling", "tolerances", "limit3j", "output"} - set(defaults)
    if missing:
        raise ValueError(f"Defaults file {path} lacks sections {sorted(missing)}")
    logger.debug(f"Loaded defaults from {path}")
    return defaults


def parse_tolerance_overrides(items: Optional[List[str]]) -> Dict[str, float]:
    """
    Parse repeated "key=value" command-line overrides.

    Raises:
        ValueError: On a missing "=" or a non-numeric value
    """
    overrides: Dict[str, float] = {}
    for item in items or []:
        key, sep, raw = item.partition("=")
        if not sep or not key.strip():
            raise ValueError(f"Malformed tolerance '{item}', expected key=value")
        try:
            overrides[key.strip()] = float(raw)
        except ValueError as e:
            raise ValueError(f"Tolerance '{key.strip()}' needs a number, got {raw!r}") from e
    return overrides


def resolve_threads(defaults: Optional[Dict[str, Any]] = None) -> int:
    """
    Worker thread count for screen building.

    Reads SPINSCREEN_THREADS; falls back to the defaults file when the variable
    is missing or not a positive integer.
    """
    load_dotenv(project_root / ".env")
    fallback = int((defaults or load_defaults())["output"].get("threads", 1))
    raw = os.getenv(THREADS_ENV)
    if raw is None:
        return fallback
    try:
        threads = int(raw)
    except ValueError:
        logger.warning(f"Ignoring {THREADS_ENV}={raw!r}: not an integer")
        return fallback
    if threads < 1:
        logger.warning(f"Ignoring {THREADS_ENV}={raw!r}: must be at least 1")
        return fallback
    return threads


class JobConfig(BaseModel):
    """A validated command-line job."""

    command: str = Field(..., description="Subcommand name")
    params: List[str] = Field(default_factory=list, description="Angular momentum labels as 'n' or 'n/2'")
    output: Optional[Path] = Field(None, description="Output file; stdout when omitted")
    format: str = Field("csv", description="Output format, csv or json")
    n_points: int = Field(400, description="Sampling density for curves")
    tolerances: Dict[str, float] = Field(default_factory=dict, description="Tolerance overrides")
    threads: int = Field(1, description="Worker threads for screen columns")
    mirror: bool = Field(False, description="Append reflected curve copies")
    stamp: bool = Field(False, description="Add a creation timestamp to headers")

    @field_validator("params")
    @classmethod
    def validate_params(cls, v: List[str]) -> List[str]:
        """Every label must parse as an integer or half-integer."""
        for text in v:
            try:
                HalfInt.parse(text)
            except LabelError as e:
                raise ValueError(str(e)) from e
        return v

    @field_validator("format")
    @classmethod
    def validate_format(cls, v: str) -> str:
        if v not in ("csv", "json"):
            raise ValueError(f"format must be 'csv' or 'json', got {v!r}")
        return v

    @field_validator("n_points")
    @classmethod
    def validate_n_points(cls, v: int) -> int:
        if v < 16:
            raise ValueError(f"n_points must be at least 16, got {v}")
        return v

    @field_validator("tolerances")
    @classmethod
    def validate_tolerances(cls, v: Dict[str, float]) -> Dict[str, float]:
        Tolerances.from_dict(v)
        return v

    @field_validator("threads")
    @classmethod
    def validate_threads(cls, v: int) -> int:
        if v < 1:
            raise ValueError(f"threads must be at least 1, got {v}")
        return v

    def labels(self) -> List[HalfInt]:
        return [HalfInt.parse(text) for text in self.params]

    def resolved_tolerances(self, defaults: Optional[Dict[str, Any]] = None) -> Tolerances:
        return Tolerances.from_defaults(self.tolerances, defaults)
