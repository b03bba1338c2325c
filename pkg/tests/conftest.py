import pytest
from hypothesis import HealthCheck, settings

from polyfact import kernels

settings.register_profile(
    "default", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture(params=[k.NAME for k in kernels.available()])
def kernel(request):
    """Run a test once per importable kernel implementation."""
    before = kernels.impl
    kernels.use(request.param)
    yield kernels.impl
    kernels.impl = before
