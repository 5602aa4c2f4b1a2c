import mpmath as mp
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture
def prec200():
    """Run the test body at 200 working bits."""
    with mp.workprec(200):
        yield
