import os
import sys

# Ensure src is on sys.path for package imports during tests
ROOT = os.path.dirname(os.path.dirname(__file__))
SRC = os.path.join(ROOT, "src")
if SRC not in sys.path:
    sys.path.insert(0, SRC)

import pytest

from foldsoergel import equiv


@pytest.fixture
def indecomposables():
    """The five indecomposables by name."""
    return {name: equiv.indecomposable(name) for name in equiv.INDECOMPOSABLES}


@pytest.fixture
def clean_env(monkeypatch):
    """Drop every foldsoergel environment override for the duration of a test."""
    for name in (
        "FOLD_SOERGEL_DEGREE_BOUND",
        "FOLDSOERGEL_WORKERS",
        "FOLDSOERGEL_SCHEMA_DIR",
        "FOLDSOERGEL_LOG_LEVEL",
    ):
        monkeypatch.delenv(name, raising=False)
    return monkeypatch
