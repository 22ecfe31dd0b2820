import pytest

from mixorient.errors import TooManyEdges
from mixorient.generators import gen_g_family
from mixorient.graph import from_lists
from mixorient.oracle import count_strong_orientations, find_orientation_within, oriented_diameter_exact, verify_lower_bound
from mixorient.reach import diameter

from conftest import complete, cycle


@pytest.mark.parametrize("n", range(3, 9))
def test_cycles(n):
    assert oriented_diameter_exact(cycle(n)).value == n - 1


def test_c4_and_k4(C4):
    r = oriented_diameter_exact(C4, count_strong=True)
    assert (r.value, r.strong_count) == (3, 2)
    assert diameter(r.witness.apply(C4)) == 3
    assert oriented_diameter_exact(complete(4)).value == 3


def test_no_strong_orientation():
    r = oriented_diameter_exact(from_lists(3, [(0, 1), (1, 2)]))
    assert r.value is None and not r.has_strong


def test_too_many_edges():
    with pytest.raises(TooManyEdges):
        oriented_diameter_exact(complete(9))


def test_verify_lower_bound(C4):
    assert verify_lower_bound(C4, 3)
    assert not verify_lower_bound(C4, 4)
    assert verify_lower_bound(C4, 0)
    assert verify_lower_bound(gen_g_family(9, 6).graph, 7)


def test_find_and_count(C4):
    assert find_orientation_within(C4, 2) is None
    assert find_orientation_within(C4, 3) is not None
    assert count_strong_orientations(cycle(5)) == 2
