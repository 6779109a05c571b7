import random
from collections import deque

import pytest

from bundlelabel.graph import Graph


def bfs_all_pairs(G: Graph) -> dict[tuple[int, int], int]:
    """Shortest-path distances for every reachable pair ``u < v``; written independently of the package."""
    out = {}
    for s in range(G.vertex_count):
        dist = {s: 0}
        q = deque([s])
        while q:
            u = q.popleft()
            for w in G.adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    q.append(w)
        for v, r in dist.items():
            if v > s:
                out[s, v] = r
    return out


def random_graph(rng: random.Random, max_vertices: int) -> Graph:
    n = rng.randint(1, max_vertices)
    p = rng.choice([0.05, 0.1, 0.2, 0.4]) if n > 1 else 0
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


@pytest.fixture
def rng():
    return random.Random(20261016)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
