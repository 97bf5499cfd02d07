import pytest

from gfroots import build_field, default_spec


@pytest.fixture(scope="session")
def gf8_3():
    return build_field(default_spec(3))


@pytest.fixture(scope="session")
def gf16():
    return build_field(default_spec(4))


@pytest.fixture(scope="session")
def gf256():
    return build_field(default_spec(8))
