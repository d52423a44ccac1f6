import pytest

from config import NumericsConfig, set_numerics


@pytest.fixture(autouse=True)
def default_numerics():
    """Every test starts from the built-in numerics, whatever config.yaml says."""
    set_numerics(NumericsConfig())
    yield
    set_numerics(None)
