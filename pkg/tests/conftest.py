import pytest

from mixorient.graph import from_lists


def cycle(n: int):
    return from_lists(n, [(i, (i + 1) % n) for i in range(n)])


def directed_cycle(n: int):
    return from_lists(n, [], [(i, (i + 1) % n) for i in range(n)])


def complete(n: int):
    return from_lists(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


@pytest.fixture
def K():
    """u=0, p=1, v=2, q=3: arcs u->p, q->u; undirected uv, pv, vq."""
    return from_lists(4, [(0, 2), (1, 2), (2, 3)], [(0, 1), (3, 0)])


@pytest.fixture
def C4():
    return cycle(4)


@pytest.fixture
def C6():
    return cycle(6)
