import pytest

from brickforge import MultiGraph
from brickforge.families import c6bar, cubeplex, k4, moebius, petersen, prism
from brickforge.harness.sweep import run_sweep

ACCEPTANCE_MAX_N = 12


def cycle(n: int) -> MultiGraph:
    return MultiGraph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> MultiGraph:
    return MultiGraph(n, [(i, i + 1) for i in range(n - 1)])


def theta() -> MultiGraph:
    return MultiGraph(2, [(0, 1), (0, 1), (0, 1)])


def k33() -> MultiGraph:
    return MultiGraph(6, [(a, b) for a in (0, 1, 2) for b in (3, 4, 5)])


def dumbbell() -> MultiGraph:
    """Two squares joined by a bridge; the bridge lies in no perfect matching."""
    return MultiGraph(
        8,
        [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (3, 4)],
    )


def edge_multiset(g: MultiGraph):
    return sorted(g.live_pairs())


@pytest.fixture(scope="session")
def named_graphs():
    return {
        "k4": k4(),
        "c6": cycle(6),
        "c6bar": c6bar(),
        "k33": k33(),
        "theta": theta(),
        "petersen": petersen(),
        "prism6": prism(6),
        "prism10": prism(10),
        "prism14": prism(14),
        "moebius4": moebius(4),
        "moebius8": moebius(8),
        "moebius12": moebius(12),
        "cubeplex": cubeplex(),
    }


@pytest.fixture(scope="session")
def sweep_result():
    """The full acceptance sweep, shared by the property and acceptance tests."""
    return run_sweep(max_n=ACCEPTANCE_MAX_N, seed=0, jobs=1)
