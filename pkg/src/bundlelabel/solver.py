"""Exact lambda-number of small graphs by backtracking with forward checking.

The search answers the decision question "is there an L(d,1)-labeling with
labels in ``[0, lam]``?" and :func:`lambda_exact` raises ``lam`` from a
lower bound until the answer is yes.  Each unlabeled vertex carries a
bitmask of labels ruled out by its labeled neighbours (gap ``< d``) and
labeled distance-2 vertices (equal label).  Masks are saved on a trail and
restored on backtrack.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .graph import Graph, distance_two_pairs
from .labeling import Labeling, lemma1_lower_bound, verify_labeling

__all__ = [
    "DEFAULT_BUDGET",
    "BudgetExceeded",
    "SolveResult",
    "is_labelable",
    "lambda_exact",
    "greedy_labeling",
]

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**8
PROGRESS_EVERY = 10**6


class BudgetExceeded(Exception):
    def __init__(self, nodes: int):
        super().__init__(f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes


@dataclass(frozen=True)
class SolveResult:
    lam: int | None
    witness: Labeling | None
    nodes_explored: int
    timed_out: bool
    lower: int
    upper: int | None


def _second_neighbours(G: Graph) -> list[list[int]]:
    out: list[list[int]] = [[] for _ in range(G.vertex_count)]
    for u, v in sorted(distance_two_pairs(G)):
        out[u].append(v)
        out[v].append(u)
    return out


class _Search:
    def __init__(self, G: Graph, d: int, lam: int, budget: int, reflect_root: bool, nodes: int = 0):
        self.G = G
        self.d = d
        self.lam = lam
        self.budget = budget
        self.reflect_root = reflect_root
        self.nodes = nodes
        self.n = G.vertex_count
        self.adj = G.adjacency
        self.dist2 = _second_neighbours(G)
        self.deg = [len(a) for a in self.adj]
        full = (1 << (lam + 1)) - 1
        self.full = full
        # labels a neighbour of a vertex labelled c may no longer use
        self.near_mask = []
        for c in range(lam + 1):
            lo, hi = max(0, c - d + 1), min(lam, c + d - 1)
            self.near_mask.append(((1 << (hi - lo + 1)) - 1) << lo)
        self.blocked = [0] * self.n
        self.label = [-1] * self.n

    def _pick(self) -> int:
        best, key = -1, None
        label, blocked, deg = self.label, self.blocked, self.deg
        for v in range(self.n):
            if label[v] < 0:
                k = (blocked[v].bit_count(), deg[v], -v)
                if key is None or k > key:
                    best, key = v, k
        return best

    def _assign(self, v: int, c: int, trail: list) -> bool:
        """Label ``v`` with ``c``; False as soon as an unlabeled vertex runs out of labels."""
        self.label[v] = c
        label, blocked, full = self.label, self.blocked, self.full
        ok = True
        for targets, mask in ((self.adj[v], self.near_mask[c]), (self.dist2[v], 1 << c)):
            for w in targets:
                if label[w] >= 0:
                    continue
                old = blocked[w]
                new = old | mask
                if new != old:
                    trail.append((w, old))
                    blocked[w] = new
                    if new == full:
                        ok = False
        return ok

    def _undo(self, v: int, trail: list) -> None:
        blocked = self.blocked
        for w, old in reversed(trail):
            blocked[w] = old
        self.label[v] = -1

    def run(self) -> list[int] | None:
        if self.n == 0:
            return []
        return self._descend(0, root=True)

    def _descend(self, depth: int, root: bool = False) -> list[int] | None:
        if depth == self.n:
            return list(self.label)
        v = self._pick()
        free = ~self.blocked[v] & self.full
        top = self.lam
        if root and self.reflect_root:
            top = (self.lam + 1) // 2
        for c in range(top + 1):
            if not free >> c & 1:
                continue
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExceeded(self.nodes)
            if self.nodes % PROGRESS_EVERY == 0:
                log.info("lam=%d: %d nodes explored, depth %d", self.lam, self.nodes, depth)
            trail: list = []
            if self._assign(v, c, trail):
                found = self._descend(depth + 1)
                if found is not None:
                    return found
            self._undo(v, trail)
        return None


def is_labelable(
    G: Graph,
    d: int,
    lam: int,
    budget: int = DEFAULT_BUDGET,
    reflect_root: bool = False,
) -> Labeling | None:
    """Find an L(d,1)-labeling of ``G`` using labels ``0 .. lam``.

    Returns the labeling, or ``None`` when the exhaustive search proves none
    exists.  Raises :class:`BudgetExceeded` after ``budget`` search nodes.

    Vertices are branched on in order of most blocked labels, then highest
    degree, then lowest index; labels are tried in ascending order.  With
    ``reflect_root`` the first vertex only tries labels up to
    ``ceil(lam / 2)``, which is lossless because ``x -> lam - x`` preserves
    validity.
    """
    labels, _ = _decide(G, d, lam, budget, reflect_root, 0)
    return labels


def _decide(G, d, lam, budget, reflect_root, nodes):
    if d < 1:
        raise ValueError(f"separation d must be >= 1, got {d}")
    if lam < 0:
        raise ValueError(f"lam must be >= 0, got {lam}")
    search = _Search(G, d, lam, budget, reflect_root, nodes)
    found = search.run()
    return (None if found is None else Labeling(found, d)), search.nodes


def greedy_labeling(G: Graph, d: int) -> Labeling:
    """First-fit labeling in vertex order; a cheap valid upper bound."""
    dist2 = _second_neighbours(G)
    f = [-1] * G.vertex_count
    for v in range(G.vertex_count):
        c = 0
        while True:
            if all(f[w] < 0 or abs(f[w] - c) >= d for w in G.adjacency[v]) and all(
                f[w] != c for w in dist2[v]
            ):
                break
            c += 1
        f[v] = c
    return Labeling(f, d)


def lambda_exact(
    G: Graph,
    d: int,
    budget: int = DEFAULT_BUDGET,
    reflect_root: bool = False,
) -> SolveResult:
    """Exact ``lambda_1^d(G)`` by solving decision problems for increasing spans.

    The first span tried is the degree lower bound when it applies, otherwise
    ``d`` (any edge forces a gap of ``d``), or 0 for an edgeless graph.  The
    budget counts nodes across all spans.  On exhaustion the result carries
    ``timed_out=True``, ``lam=None`` and the bracket ``[lower, upper]`` where
    ``upper`` comes from a greedy labeling.
    """
    if d < 1:
        raise ValueError(f"separation d must be >= 1, got {d}")
    bound = lemma1_lower_bound(G, d)
    if bound is not None:
        lam = bound
    else:
        lam = d if G.edge_count else 0
    nodes = 0
    while True:
        try:
            witness, nodes = _decide(G, d, lam, budget, reflect_root, nodes)
        except BudgetExceeded as exc:
            greedy = greedy_labeling(G, d)
            return SolveResult(None, greedy, exc.nodes, True, lam, greedy.span)
        if witness is not None:
            report = verify_labeling(G, witness)
            if not report.valid or report.span > lam:
                raise RuntimeError(f"solver produced an invalid witness for lam={lam}")
            return SolveResult(report.span, witness, nodes, False, report.span, report.span)
        log.debug("no labeling with span %d (%d nodes so far)", lam, nodes)
        lam += 1
