"""Shared pytest fixtures."""

from pathlib import Path

import pytest

from src.config import load_settings
from src.numeric import gauss_legendre
from src.shared.cache import clear_cache

REPO_ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture
def fixture_dir() -> Path:
    """The transcribed tables shipped with the repository."""
    return REPO_ROOT / "fixtures"


@pytest.fixture
def settings(fixture_dir):
    """Settings independent of the caller's environment."""
    return load_settings(env={}, fixture_dir=str(fixture_dir))


@pytest.fixture
def rule():
    return gauss_legendre()


@pytest.fixture
def fresh_cache():
    clear_cache()
    yield
    clear_cache()
