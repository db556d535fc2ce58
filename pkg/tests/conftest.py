import pytest

from dualpoly.dual import DualRing
from dualpoly.rings import build_ring


@pytest.fixture(scope="session")
def ring():
    cache = {}

    def get(spec):
        if spec not in cache:
            cache[spec] = build_ring(spec)
        return cache[spec]

    return get


@pytest.fixture(scope="session")
def dual(ring):
    def get(spec, k=1):
        return DualRing(ring(spec), k)

    return get
