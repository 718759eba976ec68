"""
Pytest configuration for the core tests
"""

import sys
from pathlib import Path

import numpy as np
import pytest

project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from core.gf2k import field_make


@pytest.fixture
def f2():
    return field_make(1)


@pytest.fixture
def f4():
    return field_make(2)


@pytest.fixture
def f16():
    return field_make(4)


@pytest.fixture
def f256():
    return field_make(8)


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)
