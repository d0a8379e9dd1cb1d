from functools import lru_cache

import pytest
from hypothesis import settings

from kmlie.cartan import named_gcm
from kmlie.chevalley import build_algebra
from kmlie.loopalg import LoopAlgebra

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@lru_cache(maxsize=None)
def algebra(name):
    return build_algebra(named_gcm(name))


@lru_cache(maxsize=None)
def loop(name):
    return LoopAlgebra(algebra(name))


@pytest.fixture
def a2():
    return algebra("A2")


@pytest.fixture
def a3():
    return algebra("A3")


@pytest.fixture
def a3_loop():
    return loop("A3")
