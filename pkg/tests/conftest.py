import random

import pytest
from hypothesis import HealthCheck, settings

import kakimizu as kk

settings.register_profile(
    "suite",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def line10():
    return kk.line_model(0, 10)


@pytest.fixture(scope="session")
def lattice7():
    return kk.lattice_model(7, 7)


@pytest.fixture(scope="session")
def lattice5():
    return kk.lattice_model(5, 5)


@pytest.fixture(scope="session")
def hexagon_system():
    return kk.graph_to_system(6, [(i, (i + 1) % 6) for i in range(6)])


@pytest.fixture(scope="session")
def hexagon_complex(hexagon_system):
    return kk.build_complex(hexagon_system, max_dim=3)


def random_pattern(rng, allow_empty=True):
    """Random valid pattern: support window meeting {0, 1}, counts 1..5."""
    if allow_empty and rng.random() < 0.1:
        return kk.OffsetPattern()
    a = rng.randint(-6, 1)
    b = rng.randint(max(a, 0 if a <= 0 else 1), 6)
    counts = tuple(rng.randint(1, 5) for _ in range(b - a + 1))
    return kk.OffsetPattern(a, counts)


def random_system(rng):
    """Random small system with arbitrary (valid) patterns, for round trips."""
    n = rng.randint(2, 12)
    ids = sorted({f"s{rng.randint(0, 99)}" for _ in range(n)} | {"s0"})
    vertices = [(vid, kk.Complexity(rng.randint(0, 9), rng.randint(0, 9)))
                for vid in ids]
    patterns = {}
    for i in range(len(ids)):
        for j in range(i + 1, len(ids)):
            if rng.random() < 0.4:
                pat = random_pattern(rng, allow_empty=False)
                patterns[(ids[i], ids[j])] = pat
    return kk.SurfaceSystem(vertices, patterns)


def random_graph_systems(count, max_vertices, seed):
    rng = random.Random(seed)
    systems = []
    for _ in range(count):
        n = rng.randint(3, max_vertices)
        p = rng.uniform(0.1, 0.5)
        edges = kk.random_connected_graph(n, p, rng)
        systems.append(kk.graph_to_system(n, edges))
    return systems


def complex_to_nx(X):
    import networkx as nx

    g = nx.Graph()
    g.add_nodes_from(X.vertices)
    g.add_edges_from(X.edges)
    return g
