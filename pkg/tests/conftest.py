import random

import pytest
from hypothesis import settings

from oddcrit import ExtremalParams, Graph, extremal_gprime, proof_graph_g2, proof_graph_g3

settings.register_profile("deterministic", derandomize=True, max_examples=60)
settings.load_profile("deterministic")


def build_parameter_grid(max_n: int = 60) -> list[tuple[int, int, int, int, int]]:
    """30 valid (n, b, k, delta, s) tuples with k+1 <= s <= delta-1.

    Small orders near the feasibility minimum plus a few near the 60-vertex
    scale; every tuple admits all three families.
    """
    seen = {}
    extras = [(59, 1, 1, 3, 2), (58, 1, 2, 4, 3), (57, 3, 1, 3, 2), (60, 1, 2, 4, 3)]
    for tup in extras:
        seen[tup] = None
    for b in (1, 3, 5):
        for k in (1, 2, 3):
            for delta in (k + 2, k + 3):
                for s in sorted({k + 1, delta - 1}):
                    n = max(
                        (b + 1) * delta - b * k + 2,
                        (b + 1) * s - b * k + 2,
                        s + (delta + 1 - s) * (b * s - b * k + 1) + 1,
                        delta + 2,
                    ) + 4
                    if (n - k) % 2:
                        n += 1
                    if n <= max_n:
                        seen.setdefault((n, b, k, delta, s), None)
    grid = sorted(seen, key=lambda t: (t[1], t[2], t[3], t[4], t[0]))[:30]
    assert len(grid) == 30
    return grid


@pytest.fixture(scope="session")
def parameter_grid():
    grid = build_parameter_grid()
    for n, b, k, delta, s in grid:
        params = ExtremalParams(n, b, k, delta, s)
        extremal_gprime(params)
        proof_graph_g2(params)
        proof_graph_g3(params)
    return grid


def random_connected_graph(rng: random.Random, n: int, extra: float = 0.3) -> Graph:
    """Random spanning tree plus Bernoulli extra edges: connected by construction."""
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        j = rng.randrange(i)
        edges.add(tuple(sorted((order[i], order[j]))))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < extra:
                edges.add((u, v))
    return Graph(n, edges)


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph(n, (pairs[i] for i in range(len(pairs)) if mask >> i & 1))
