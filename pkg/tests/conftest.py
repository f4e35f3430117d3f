from __future__ import annotations

from pathlib import Path

import pytest

from hive.store import Store

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def rdf_dir() -> Path:
    return FIXTURES / "rdf"


@pytest.fixture
def store(tmp_path) -> Store:
    s = Store.open(tmp_path / "store")
    yield s
    s.close()
