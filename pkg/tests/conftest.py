import pathlib

import pytest

from matlislab.fixtures import parse_fixture

ROOT = pathlib.Path(__file__).resolve().parent.parent
FIXTURE_DIR = ROOT / "fixtures"

FIXTURE_NAMES = ["R3", "R4", "KXY", "V2"]


def load(name):
    return parse_fixture(str(FIXTURE_DIR / (name + ".json")))


@pytest.fixture(scope="session")
def fixtures():
    return {name: load(name) for name in FIXTURE_NAMES}


@pytest.fixture(scope="session")
def r3(fixtures):
    return fixtures["R3"]


@pytest.fixture(scope="session")
def r4(fixtures):
    return fixtures["R4"]


@pytest.fixture(scope="session")
def kxy(fixtures):
    return fixtures["KXY"]


@pytest.fixture(scope="session")
def v2(fixtures):
    return fixtures["V2"]
