import pathlib

import pytest

_TESTS = pathlib.Path(__file__).resolve().parent


@pytest.fixture(scope="session")
def data_dir() -> pathlib.Path:
    return _TESTS / "data"


@pytest.fixture(scope="session")
def golden_dir() -> pathlib.Path:
    return _TESTS / "golden"
