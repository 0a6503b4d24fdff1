"""config.py - run configuration

Environment first, CLI flags on top. Read at call time so tests can
monkeypatch the environment.

ZVIC-constrained module.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field, replace

DEFAULT_DEGREE_BOUND = 12
DEFAULT_FAMILY = (
    "1",
    "as + at",
    "as*at",
    "(as + at)^2",
    "(as + at)*as*at",
)

ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), "..", ".."))

# Use environment variable `FOLDSOERGEL_ZVIC_ENABLED` (default: "1").
try:
    if os.getenv("FOLDSOERGEL_ZVIC_ENABLED", "1") == "1":
        from zvic import constrain_this_module

        constrain_this_module()
except Exception:
    pass


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None


def degree_bound(default: "int[_ >= 0]" = DEFAULT_DEGREE_BOUND) -> "int[_ >= 0]":
    value = _env_int("FOLD_SOERGEL_DEGREE_BOUND", default)
    if value < 0:
        raise ValueError(f"degree bound must be >= 0, got {value}")
    return value


def worker_count(default: "int[_ >= 1]" = 1) -> "int[_ >= 1]":
    return max(1, _env_int("FOLDSOERGEL_WORKERS", default))


def schema_dir() -> str:
    return os.environ.get(
        "FOLDSOERGEL_SCHEMA_DIR", os.path.join(ROOT, "docs", "schemas")
    )


def log_level() -> str:
    return os.getenv("FOLDSOERGEL_LOG_LEVEL", "WARNING").upper()


@dataclass(frozen=True)
class RunConfig:
    """Settings shared by every CLI command."""

    degree_bound: int = DEFAULT_DEGREE_BOUND
    catalog_path: str | None = None
    output_format: str = "json"
    workers: int = 1
    family: tuple[str, ...] = field(default=DEFAULT_FAMILY)

    def __post_init__(self):
        if self.degree_bound < 0:
            raise ValueError(f"degree bound must be >= 0, got {self.degree_bound}")
        if self.output_format not in ("json", "text"):
            raise ValueError(f"unknown output format {self.output_format!r}")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")

    @classmethod
    def from_env(cls, **overrides) -> RunConfig:
        base = cls(degree_bound=degree_bound(), workers=worker_count())
        overrides = {k: v for k, v in overrides.items() if v is not None}
        return replace(base, **overrides)
