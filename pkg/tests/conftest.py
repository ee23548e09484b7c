import os
import sys

import pytest

# Mirror main.py: the repository root and src on the path
ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, ROOT)
sys.path.insert(0, os.path.join(ROOT, "src"))

from src.core.rmatrix import build_braiding  # noqa: E402


@pytest.fixture(scope="session")
def flip2():
    return build_braiding("flip", 2)


@pytest.fixture(scope="session")
def superflip2():
    return build_braiding("superflip", 2)


@pytest.fixture(scope="session")
def dj2():
    return build_braiding("dj", 2)
