import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("catk", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("catk")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long exhaustive sweeps, run with CATK_SLOW=1")


def pytest_collection_modifyitems(config, items):
    if os.environ.get("CATK_SLOW") == "1":
        return
    skip = pytest.mark.skip(reason="set CATK_SLOW=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)
