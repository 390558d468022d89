"""Bipartite double cover of a simple graph.

Every base vertex x gets a twin x' = x + n; every base edge (x, y) becomes
the two cover edges (x, y') and (x', y).  The cover is bipartite between
originals [0, n) and copies [n, 2n), has 2m edges and the same maximum
degree as the base graph.  Each non-induced biclique of the base graph
appears in the cover as exactly two mirrored bicliques; keep_copy picks a
single canonical one of the pair.
"""

from __future__ import annotations

from typing import Iterable

from .graph import Biclique, Graph, Ordering


class DoubleCover:
    """The cover graph plus the projection back to base vertex ids."""

    __slots__ = ("graph", "n_base")

    def __init__(self, graph: Graph, n_base: int):
        self.graph = graph
        self.n_base = n_base

    def is_original(self, u: int) -> bool:
        return u < self.n_base

    def to_copy(self, x: int) -> int:
        """Cover id of the twin x' of base vertex x."""
        return x + self.n_base

    def project_vertex(self, u: int) -> int:
        """f(u): both x and x' map back to x."""
        return u - self.n_base if u >= self.n_base else u

    def __repr__(self) -> str:
        return f"DoubleCover(n_base={self.n_base}, {self.graph!r})"


def build_double_cover(g: Graph) -> DoubleCover:
    """Construct the bipartite double cover of g."""
    n = g.n
    adjacency: list[frozenset[int]] = [frozenset()] * (2 * n)
    for x in range(n):
        nb = g.adj(x)
        adjacency[x] = frozenset(y + n for y in nb)
        adjacency[x + n] = nb
    return DoubleCover(Graph._from_adjacency(adjacency), n)


def project(dc: DoubleCover, s: Iterable[int]) -> set[int]:
    """Project a set of cover vertices to base vertices: {f(u) for u in s}."""
    n = dc.n_base
    return {u - n if u >= n else u for u in s}


def keep_copy(dc: DoubleCover, ordering: Ordering, k: Biclique) -> bool:
    """Accept exactly one of the two mirrored cover copies of a biclique.

    Project the biclique's vertices to the base graph, take the projected
    vertex of smallest rank, and accept iff the cover vertex carrying it
    lies on the original side.  Should both cover twins of that vertex ever
    appear (no such biclique can arise from a loop-free base graph), the
    lexicographically smaller cover id decides, which lands on the original
    side.
    """
    n = dc.n_base
    ranks = ordering.ranks()
    verts = k.X + k.Y
    best = min((v - n if v >= n else v for v in verts), key=lambda b: ranks[b])
    carrier = min(v for v in verts if (v - n if v >= n else v) == best)
    return carrier < n


__all__ = ["DoubleCover", "build_double_cover", "project", "keep_copy"]
