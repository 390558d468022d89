"""Immutable simple undirected graphs, vertex orderings and bicliques.

Vertices are dense integer ids 0..n-1.  A biclique is an unordered pair of
disjoint nonempty vertex sets that is complete between the sides; edges
inside a side are allowed (non-induced semantics).  All objects here are
immutable after construction and safe to share between threads.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for structurally invalid graph input (self-loops, bad ids)."""


class Graph:
    """Simple undirected graph with per-vertex sorted adjacency.

    Build one with :meth:`from_edge_list`.  Duplicate edges collapse,
    self-loops are rejected.
    """

    __slots__ = ("n", "m", "_nbr", "_sorted")

    def __init__(self, n: int, adjacency: Sequence[frozenset[int]], m: int):
        # Internal constructor; callers go through from_edge_list /
        # _from_adjacency which establish the invariants.
        self.n = n
        self.m = m
        self._nbr = tuple(adjacency)
        self._sorted = tuple(tuple(sorted(s)) for s in adjacency)

    @classmethod
    def from_edge_list(cls, edges: Iterable[tuple[int, int]], n: int) -> "Graph":
        """Build a graph on n vertices from (u, v) pairs.

        Duplicate and reversed duplicates collapse to one edge.  A
        self-loop or an endpoint outside [0, n) raises GraphError naming
        the offending entry.
        """
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        sets: list[set[int]] = [set() for _ in range(n)]
        for idx, (u, v) in enumerate(edges):
            u = int(u)
            v = int(v)
            if u == v:
                raise GraphError(f"self-loop ({u},{v}) at edge #{idx}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(
                    f"edge #{idx} ({u},{v}) has an endpoint outside [0,{n})"
                )
            sets[u].add(v)
            sets[v].add(u)
        m = sum(len(s) for s in sets) // 2
        return cls(n, [frozenset(s) for s in sets], m)

    @classmethod
    def _from_adjacency(cls, adjacency: Sequence[frozenset[int]]) -> "Graph":
        """Trusted fast path: adjacency already symmetric and loop-free."""
        m = sum(len(s) for s in adjacency) // 2
        return cls(len(adjacency), adjacency, m)

    def adj(self, v: int) -> frozenset[int]:
        """Neighbor set of v."""
        return self._nbr[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbors of v as an ascending tuple."""
        return self._sorted[v]

    def degree(self, v: int) -> int:
        return len(self._nbr[v])

    def max_degree(self) -> int:
        return max((len(s) for s in self._nbr), default=0)

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in ascending order."""
        for u in range(self.n):
            for v in self._sorted[u]:
                if v > u:
                    yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr[u]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._nbr == other._nbr

    __hash__ = None  # mutable-container style: compare by value, don't hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class Ordering:
    """A permutation of the vertices with 1-based ranks.

    rank(v) is the position of v (1..n); vertex_at(pos) is its inverse.
    """

    __slots__ = ("_rank", "_seq")

    def __init__(self, sequence: Sequence[int]):
        seq = tuple(int(v) for v in sequence)
        n = len(seq)
        rank = [0] * n
        for pos, v in enumerate(seq, start=1):
            if not (0 <= v < n) or rank[v]:
                raise ValueError(f"sequence is not a permutation of 0..{n - 1}")
            rank[v] = pos
        self._seq = seq
        self._rank = tuple(rank)

    @classmethod
    def identity(cls, n: int) -> "Ordering":
        """Ascending vertex id order."""
        return cls(range(n))

    @classmethod
    def degeneracy(cls, g: Graph) -> "Ordering":
        """Repeatedly remove a minimum-degree vertex (ties: smallest id).

        Each vertex then has few neighbors later in the order, which keeps
        the anchored local subgraphs small on sparse graphs.
        """
        n = g.n
        cur = [g.degree(v) for v in range(n)]
        heap = [(cur[v], v) for v in range(n)]
        heapq.heapify(heap)
        removed = [False] * n
        seq = []
        while heap:
            d, v = heapq.heappop(heap)
            if removed[v] or d != cur[v]:
                continue  # stale entry
            removed[v] = True
            seq.append(v)
            for w in g.adj(v):
                if not removed[w]:
                    cur[w] -= 1
                    heapq.heappush(heap, (cur[w], w))
        return cls(seq)

    @classmethod
    def from_sequence(cls, sequence: Iterable[int]) -> "Ordering":
        return cls(tuple(sequence))

    @property
    def n(self) -> int:
        return len(self._seq)

    def rank(self, v: int) -> int:
        """1-based position of vertex v."""
        return self._rank[v]

    def vertex_at(self, pos: int) -> int:
        """Vertex at 1-based position pos."""
        if not (1 <= pos <= len(self._seq)):
            raise IndexError(f"rank {pos} outside [1,{len(self._seq)}]")
        return self._seq[pos - 1]

    @property
    def sequence(self) -> tuple[int, ...]:
        return self._seq

    def ranks(self) -> tuple[int, ...]:
        """Rank array indexed by vertex id (internal hot loops use this)."""
        return self._rank

    def __len__(self) -> int:
        return len(self._seq)

    def __repr__(self) -> str:
        return f"Ordering({list(self._seq)!r})"


class Biclique:
    """Canonical unordered biclique: two disjoint nonempty vertex tuples.

    The side containing the globally smallest vertex id is stored as X and
    both sides are ascending, so equal bicliques compare and hash equal.
    """

    __slots__ = ("X", "Y")

    def __init__(self, side_a: Iterable[int], side_b: Iterable[int]):
        a = tuple(sorted(set(side_a)))
        b = tuple(sorted(set(side_b)))
        if not a or not b:
            raise ValueError("biclique sides must be nonempty")
        if set(a) & set(b):
            raise ValueError("biclique sides must be disjoint")
        if b[0] < a[0]:
            a, b = b, a
        self.X = a
        self.Y = b

    @property
    def size(self) -> int:
        return len(self.X) + len(self.Y)

    def vertices(self) -> frozenset[int]:
        return frozenset(self.X) | frozenset(self.Y)

    def sort_key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Lexicographic key over the canonical form."""
        return (self.X, self.Y)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Biclique):
            return NotImplemented
        return self.X == other.X and self.Y == other.Y

    def __hash__(self) -> int:
        return hash((self.X, self.Y))

    def __repr__(self) -> str:
        return f"Biclique(X={self.X}, Y={self.Y})"


class LocalSubgraph:
    """An induced subgraph together with its local-to-global id mapping."""

    __slots__ = ("graph", "vertices", "_to_local")

    def __init__(self, graph: Graph, vertices: tuple[int, ...]):
        self.graph = graph
        self.vertices = vertices
        self._to_local = {v: i for i, v in enumerate(vertices)}

    def to_global(self, local_id: int) -> int:
        return self.vertices[local_id]

    def to_local(self, global_id: int) -> int:
        return self._to_local[global_id]

    def global_biclique(self, b: Biclique) -> Biclique:
        """Map a biclique over local ids back to global ids."""
        vs = self.vertices
        return Biclique((vs[i] for i in b.X), (vs[i] for i in b.Y))

    def __repr__(self) -> str:
        return f"LocalSubgraph(n={self.graph.n}, vertices={self.vertices})"


def later_neighbors(g: Graph, ordering: Ordering, v: int) -> set[int]:
    """Neighbors of v whose rank is at least the rank of v."""
    rank = ordering.ranks()
    rv = rank[v]
    return {u for u in g.adj(v) if rank[u] >= rv}


def later_second_neighbors(g: Graph, ordering: Ordering, v: int) -> set[int]:
    """Vertices at distance exactly 2 from v with rank at least rank(v).

    Distance is measured in the full graph; the rank condition only filters
    the result.
    """
    rank = ordering.ranks()
    rv = rank[v]
    nb = g.adj(v)
    out: set[int] = set()
    for w in nb:
        for u in g.adj(w):
            if u != v and u not in nb and rank[u] >= rv:
                out.add(u)
    return out


def induced_subgraph(g: Graph, s: Iterable[int]) -> LocalSubgraph:
    """Induced subgraph of g on vertex set s, with id mapping."""
    verts = tuple(sorted(set(s)))
    for v in verts:
        if not (0 <= v < g.n):
            raise GraphError(f"vertex {v} outside [0,{g.n})")
    vset = set(verts)
    idx = {v: i for i, v in enumerate(verts)}
    adjacency = [
        frozenset(idx[w] for w in g.adj(v) if w in vset) for v in verts
    ]
    return LocalSubgraph(Graph._from_adjacency(adjacency), verts)


def is_biclique(g: Graph, side_a: Iterable[int], side_b: Iterable[int]) -> bool:
    """True iff the two sets form a biclique of g.

    Both sides nonempty, disjoint, and every cross pair is an edge.  Edges
    inside a side do not matter.  Symmetric in its set arguments.
    """
    a = set(side_a)
    b = set(side_b)
    for v in a | b:
        if not (0 <= v < g.n):
            raise GraphError(f"vertex {v} outside [0,{g.n})")
    if not a or not b or a & b:
        return False
    if len(a) > len(b):
        a, b = b, a
    return all(b <= g.adj(x) for x in a)
