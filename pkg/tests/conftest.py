from importlib import resources

import pytest

from logictables import load_document


@pytest.fixture(scope="session")
def data_dir():
    return resources.files("logictables") / "data"


@pytest.fixture(scope="session")
def xor_path(data_dir):
    return str(data_dir / "xor.tables")


@pytest.fixture(scope="session")
def adder_path(data_dir):
    return str(data_dir / "adder.tables")


@pytest.fixture(scope="session")
def soccer_path(data_dir):
    return str(data_dir / "soccer.tables")


@pytest.fixture(scope="session")
def xor_table(xor_path):
    return load_document(xor_path).table("xor")


@pytest.fixture(scope="session")
def adder_doc(adder_path):
    return load_document(adder_path)


@pytest.fixture(scope="session")
def soccer_doc(soccer_path):
    return load_document(soccer_path)
