from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from towerbounds.catalog import load_bundled


@pytest.fixture(scope="session")
def corpus():
    """Bundled curve table keyed by label."""
    return load_bundled()


@pytest.fixture(scope="session")
def curve_11a2(corpus):
    return corpus["11a2"].curve


@pytest.fixture(scope="session")
def curve_11a3(corpus):
    return corpus["11a3"].curve


@pytest.fixture(scope="session")
def curve_37a1(corpus):
    return corpus["37a1"].curve
