"""Shared fixtures: bundled character tables and test data paths"""

from pathlib import Path

import pytest

from app.characters.model import CharacterTable
from app.characters.parser import load_bundled

TEST_DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def tables() -> dict[str, CharacterTable]:
    """All bundled tables keyed by lower-case group name"""
    return {name: load_bundled(name) for name in ("c2", "c3", "c4", "c5", "s3", "a4", "a5", "s5", "a6", "q8")}


@pytest.fixture(scope="session")
def s5(tables: dict[str, CharacterTable]) -> CharacterTable:
    return tables["s5"]


@pytest.fixture(scope="session")
def a5(tables: dict[str, CharacterTable]) -> CharacterTable:
    return tables["a5"]
