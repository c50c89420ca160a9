from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from orbifoldk3 import census, golden_table


@pytest.fixture(scope="session")
def census40():
    return census(40)


@pytest.fixture(scope="session")
def golden():
    return golden_table()
