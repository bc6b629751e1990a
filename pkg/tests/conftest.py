import pytest
from hypothesis import HealthCheck, settings

from logsine import NumericConfig

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def cfg() -> NumericConfig:
    return NumericConfig()
