import os
import shutil

import pytest


def pytest_addoption(parser):
    parser.addoption("--sclab", default=os.environ.get("SCLAB_BIN") or shutil.which("sclab"),
                     help="path to the sclab executable")


@pytest.fixture(scope="session")
def sclab(request):
    path = request.config.getoption("--sclab")
    if not path or not os.path.exists(path):
        pytest.skip("sclab executable not found")
    return path
