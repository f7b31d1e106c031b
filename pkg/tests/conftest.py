import os
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from oneone import diagram as dg

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=500)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

DATA = Path(__file__).parent / "data"


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def pictured():
    """Transcriptions of the four pictured diagrams: two 5_2, then two T(2,7)."""
    return [dg.load(DATA / f"{n}.json") for n in ("five2", "five2_b", "t27", "t27_b")]


@pytest.fixture(scope="session")
def t27():
    return dg.load(DATA / "t27.json")


@pytest.fixture(scope="session")
def five2():
    return dg.load(DATA / "five2.json")
