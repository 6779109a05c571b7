"""Cycles, paths, products and graph bundles of cycles over cycles.

Vertices are flat integer indices.  Product-like graphs on ``G`` and ``H``
place the pair ``(g, h)`` at index ``g * |V(H)| + h``, so for a bundle with
base ``C_m`` and fibre ``C_n`` the vertex ``(i, j)`` sits at ``i * n + j``.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable
from dataclasses import dataclass

__all__ = [
    "Graph",
    "Kind",
    "BundleSpec",
    "cycle",
    "path",
    "star",
    "direct_product",
    "cartesian_product",
    "build_bundle",
    "distance_two_pairs",
    "to_edgelist",
    "to_dot",
]


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph stored as sorted neighbour tuples."""

    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if vertex_count < 0:
            raise ValueError(f"vertex_count must be non-negative, got {vertex_count}")
        nbrs: list[set[int]] = [set() for _ in range(vertex_count)]
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u, nb in enumerate(self.adjacency) for v in nb if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]


class Kind(str, enum.Enum):
    DIRECT = "direct"
    CARTESIAN = "cartesian"


@dataclass(frozen=True)
class BundleSpec:
    """Bundle ``C_m`` (base) over ``C_n`` (fibre) twisted by the shift ``j -> j + ell``."""

    kind: Kind
    m: int
    n: int
    ell: int

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.m < 3:
            raise ValueError(f"base cycle order m must be >= 3, got {self.m}")
        if self.n < 3:
            raise ValueError(f"fibre cycle order n must be >= 3, got {self.n}")
        if not 0 <= self.ell < self.n:
            raise ValueError(f"shift ell must lie in [0, {self.n}), got {self.ell}")

    @property
    def vertex_count(self) -> int:
        return self.m * self.n

    def index(self, i: int, j: int) -> int:
        return i * self.n + j

    def coord(self, v: int) -> tuple[int, int]:
        return divmod(v, self.n)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"a path needs at least 1 vertex, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def star(leaves: int) -> Graph:
    """``K_{1,leaves}`` with the centre at index 0."""
    return Graph.from_edges(leaves + 1, ((0, k) for k in range(1, leaves + 1)))


def _check_nonempty(*graphs: Graph) -> None:
    for g in graphs:
        if g.vertex_count == 0:
            raise ValueError("product factors must be nonempty")


def direct_product(G: Graph, H: Graph) -> Graph:
    _check_nonempty(G, H)
    nh = H.vertex_count
    edges = [
        (g1 * nh + h1, g2 * nh + h2)
        for g1, g2 in G.edges()
        for h1, h2 in H.edges()
    ]
    # each pair of factor edges yields two product edges
    edges += [
        (g1 * nh + h2, g2 * nh + h1)
        for g1, g2 in G.edges()
        for h1, h2 in H.edges()
    ]
    return Graph.from_edges(G.vertex_count * nh, edges)


def cartesian_product(G: Graph, H: Graph) -> Graph:
    _check_nonempty(G, H)
    nh = H.vertex_count
    edges = [(g1 * nh + h, g2 * nh + h) for g1, g2 in G.edges() for h in range(nh)]
    edges += [(g * nh + h1, g * nh + h2) for g in range(G.vertex_count) for h1, h2 in H.edges()]
    return Graph.from_edges(G.vertex_count * nh, edges)


def build_bundle(spec: BundleSpec) -> Graph:
    """Construct ``C_m x^sigma C_n`` or ``C_m []^sigma C_n`` for a cyclic shift.

    Only the base edge ``(m-1, 0)`` carries the shift; every other base edge
    uses the identity.  The result is the path product ``P_m * C_n`` plus the
    twisted edges ``(m-1, u) -- (0, sigma(u'))`` where ``u'`` is ``u`` itself
    (Cartesian) or a fibre neighbour of ``u`` (direct).
    """
    m, n, ell = spec.m, spec.n, spec.ell
    idx = spec.index
    edges = []
    if spec.kind is Kind.DIRECT:
        for i in range(m - 1):
            for j in range(n):
                for step in (-1, 1):
                    edges.append((idx(i, j), idx(i + 1, (j + step) % n)))
        for u in range(n):
            for step in (-1, 1):
                edges.append((idx(m - 1, u), idx(0, (u + step + ell) % n)))
    else:
        for i in range(m):
            for j in range(n):
                edges.append((idx(i, j), idx(i, (j + 1) % n)))
        for i in range(m - 1):
            for j in range(n):
                edges.append((idx(i, j), idx(i + 1, j)))
        for u in range(n):
            edges.append((idx(m - 1, u), idx(0, (u + ell) % n)))
    return Graph.from_edges(m * n, edges)


def distance_two_pairs(G: Graph) -> set[tuple[int, int]]:
    """Pairs ``(u, v)``, ``u < v``, at shortest-path distance exactly 2."""
    pairs = set()
    adj = G.adjacency
    for u in range(G.vertex_count):
        near = adj[u]
        for w in near:
            for v in adj[w]:
                if v > u and v not in near:
                    pairs.add((u, v))
    return pairs


def to_edgelist(G: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in G.edges())


def to_dot(G: Graph, fibre_order: int | None = None) -> str:
    """DOT text; with ``fibre_order`` each node is labelled by its ``i,j`` coordinates."""
    lines = ["graph G {"]
    for v in range(G.vertex_count):
        if fibre_order:
            i, j = divmod(v, fibre_order)
            lines.append(f'  {v} [label="{i},{j}"];')
        else:
            lines.append(f"  {v};")
    lines.extend(f"  {u} -- {v};" for u, v in G.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
