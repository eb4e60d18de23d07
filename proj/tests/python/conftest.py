import os

import pytest


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("TM_CLI")
    if not path or not os.path.exists(path):
        pytest.skip("TM_CLI does not point at the tm binary")
    return path
