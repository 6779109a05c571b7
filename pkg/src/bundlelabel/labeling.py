"""L(d,1)-labelings: representation, verification and the degree lower bound."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .graph import Graph, distance_two_pairs

__all__ = [
    "Labeling",
    "Violation",
    "ValidityReport",
    "LabelCountMismatch",
    "verify_labeling",
    "naive_verify",
    "lemma1_lower_bound",
]


class LabelCountMismatch(ValueError):
    """The labeling does not have one label per vertex of the graph."""


@dataclass(frozen=True)
class Labeling:
    labels: tuple[int, ...]
    d: int

    def __init__(self, labels: Sequence[int], d: int):
        labels = tuple(int(x) for x in labels)
        if d < 1:
            raise ValueError(f"separation d must be >= 1, got {d}")
        if any(x < 0 for x in labels):
            raise ValueError("labels must be non-negative")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "d", d)

    def __len__(self) -> int:
        return len(self.labels)

    def __getitem__(self, v: int) -> int:
        return self.labels[v]

    @property
    def span(self) -> int:
        if not self.labels:
            return 0
        return max(self.labels) - min(self.labels)


class Violation(NamedTuple):
    u: int
    v: int
    distance: int
    gap: int


@dataclass(frozen=True)
class ValidityReport:
    violations: tuple[Violation, ...]
    span: int

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid


def _check_size(G: Graph, L: Labeling) -> None:
    if len(L) != G.vertex_count:
        raise LabelCountMismatch(
            f"labeling has {len(L)} labels but the graph has {G.vertex_count} vertices"
        )


def verify_labeling(G: Graph, L: Labeling) -> ValidityReport:
    """Check both L(d,1) conditions and collect every violating pair.

    Adjacent vertices need labels at least ``L.d`` apart; vertices at
    distance two need distinct labels.  Violations are sorted by
    ``(u, v)`` with ``u < v``.

    Raises
    ------
    LabelCountMismatch
        If ``L`` does not carry exactly one label per vertex of ``G``.
    """
    _check_size(G, L)
    f = L.labels
    bad = []
    for u, v in G.edges():
        gap = abs(f[u] - f[v])
        if gap < L.d:
            bad.append(Violation(u, v, 1, gap))
    for u, v in distance_two_pairs(G):
        if f[u] == f[v]:
            bad.append(Violation(u, v, 2, 0))
    bad.sort()
    return ValidityReport(tuple(bad), L.span)


def _bfs_distances(G: Graph, source: int) -> list[int | None]:
    dist: list[int | None] = [None] * G.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in G.adjacency[u]:
            if dist[w] is None:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def naive_verify(G: Graph, L: Labeling) -> ValidityReport:
    """Slow reference verifier built on all-pairs BFS; used only as a cross-check."""
    _check_size(G, L)
    f = L.labels
    need = {1: L.d, 2: 1}
    bad = []
    for u in range(G.vertex_count):
        dist = _bfs_distances(G, u)
        for v in range(u + 1, G.vertex_count):
            r = dist[v]
            if r in need and abs(f[u] - f[v]) < need[r]:
                bad.append(Violation(u, v, r, abs(f[u] - f[v])))
    bad.sort()
    return ValidityReport(tuple(bad), L.span)


def lemma1_lower_bound(G: Graph, d: int) -> int | None:
    """Return ``Delta + 2d - 2`` when the degree lower bound applies, else ``None``.

    The bound needs ``1 <= d <= Delta`` and a vertex of maximum degree whose
    neighbours all have maximum degree too.
    """
    if d < 1:
        raise ValueError(f"separation d must be >= 1, got {d}")
    delta = G.max_degree()
    if d > delta:
        return None
    for v in range(G.vertex_count):
        nb = G.adjacency[v]
        if len(nb) == delta and all(len(G.adjacency[w]) == delta for w in nb):
            return delta + 2 * d - 2
    return None
