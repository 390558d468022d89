"""Duplicate-free enumeration of maximal bicliques.

For a bipartite graph, maximal bicliques are exactly the pairs (A, B) with
B the common neighborhood of A and A the common neighborhood of B, both
nonempty.  They are generated by walking the fixed points of the closure
operator h(S) = common-neighbors(common-neighbors(S)) in lectic
(next-closure) order.  To keep the total cost proportional to the output
on bounded-degree graphs, the walk runs inside per-vertex slices: a pair
(A, B) is produced once, inside the slice of the smallest vertex of A,
whose ground set N(u) has at most max-degree elements.  No emitted
solution is ever stored, so auxiliary space stays polynomial in the graph
size.

General graphs are handled through the bipartite double cover: each
maximal non-induced biclique of the base graph corresponds to exactly two
mirrored cover bicliques, and the keep_copy filter forwards one of them.
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator, Optional

from .cover import build_double_cover, keep_copy
from .graph import Biclique, Graph, Ordering


class EnumerationSink:
    """Counts emissions and forwards each biclique to an optional callback.

    The enumerators never retain previously emitted solutions; whatever the
    callback does with them is the only storage.
    """

    __slots__ = ("count", "_callback")

    def __init__(self, callback: Optional[Callable[[Biclique], None]] = None):
        self.count = 0
        self._callback = callback

    def emit(self, biclique: Biclique) -> None:
        self.count += 1
        if self._callback is not None:
            self._callback(biclique)


def _as_emit(sink) -> Optional[Callable[[Biclique], None]]:
    if sink is None:
        return None
    if isinstance(sink, EnumerationSink):
        return sink.emit
    if callable(sink):
        return sink
    raise TypeError("sink must be an EnumerationSink, a callable, or None")


def _common(adj, vs) -> set[int]:
    """Intersection of the neighbor sets of a nonempty vertex collection."""
    it = iter(vs)
    acc = set(adj[next(it)])
    for v in it:
        acc &= adj[v]
        if not acc:
            break
    return acc


def closure(g: Graph, side: Iterable[int], opposite: Iterable[int], subset: Iterable[int]) -> set[int]:
    """h(A) = Γ(Γ(A)) for A ⊆ side, where Γ takes common neighbors.

    Γ(∅) is the full opposite collection by convention, so closure(∅) is
    the set of side vertices adjacent to everything on the other side.
    The operator is extensive, monotone and idempotent.
    """
    sideset = frozenset(side)
    sub = set(subset)
    if not sub <= sideset:
        raise ValueError("subset must be contained in its side")
    mid = _common(g._nbr, sub) if sub else set(opposite)
    return _common(g._nbr, mid) if mid else set(sideset)


def _next_closed(adj, ground, pos, current):
    """Lectic successor of a closed set within the slice ground set.

    Returns (closed set, its common neighborhood).  The standard
    next-closure step: strip ground elements from the top, try adding each
    absent element, accept the first closure that introduces nothing below
    the added position.
    """
    work = set(current)
    for i in range(len(ground) - 1, -1, -1):
        v = ground[i]
        if v in work:
            work.discard(v)
        else:
            work.add(v)
            mid = _common(adj, work)
            out = _common(adj, mid)
            work.discard(v)
            ok = True
            for w in out:
                if w not in work and pos[w] < i:
                    ok = False
                    break
            if ok:
                return frozenset(out), mid
    raise AssertionError("closed set has no lectic successor")


def _concepts(
    g: Graph,
    anchor_side,
    other_side,
    floor: Optional[Callable[[], int]] = None,
) -> Iterator[tuple[set[int], frozenset[int]]]:
    """Yield every maximal biclique (A, B) of a bipartite graph once.

    A lies in the anchor side, B = Γ(A) in the other; the pair appears in
    the slice of u = min(A) and nowhere else.  With a floor callback,
    slices whose size upper bound cannot exceed the floor are skipped
    (used by the branch-and-bound maximum search).
    """
    adj = g._nbr
    anchor_len = len(anchor_side)
    # Bottom of every slice: vertices adjacent to the whole anchor side.
    bottom = frozenset(w for w in other_side if len(adj[w]) == anchor_len)
    for u in anchor_side:
        ground = g.neighbors(u)
        if not ground:
            continue
        if floor is not None:
            # any biclique from this slice has |B| <= |ground| and
            # |A| <= max degree over ground
            limit = floor()
            if limit > 0:
                bound = len(ground) + max(len(adj[w]) for w in ground)
                if bound <= limit:
                    continue
        groundset = frozenset(ground)
        pos = {v: i for i, v in enumerate(ground)}
        current = bottom
        if current:
            a = _common(adj, current)
            if min(a) == u:
                yield a, current
        while current != groundset:
            current, a = _next_closed(adj, ground, pos, current)
            if min(a) == u:
                yield a, current


def _check_bipartition(g: Graph, left: tuple[int, ...], right: tuple[int, ...]) -> None:
    if len(left) + len(right) != g.n or set(left) & set(right):
        raise ValueError("left and right must partition the vertex set")
    leftset = frozenset(left)
    for u in left:
        if not g.adj(u).isdisjoint(leftset):
            raise ValueError("graph has an edge inside one side; not bipartite")


def enumerate_bipartite_maximal(
    g: Graph,
    left: Iterable[int],
    right: Optional[Iterable[int]] = None,
    sink=None,
) -> int:
    """Emit every maximal biclique of a bipartite graph exactly once.

    left/right are the two vertex classes (right defaults to the
    complement of left).  Emission order is deterministic: slices in
    ascending anchor order, lectic order inside a slice.  Returns the
    number of emissions; zero for edgeless graphs.
    """
    left_t = tuple(sorted(set(left)))
    if right is None:
        ls = set(left_t)
        right_t = tuple(v for v in range(g.n) if v not in ls)
    else:
        right_t = tuple(sorted(set(right)))
    _check_bipartition(g, left_t, right_t)
    if g.m == 0:
        return 0
    # Anchor over the smaller side; ties keep the given left side.
    if len(right_t) < len(left_t):
        anchor, other = right_t, left_t
    else:
        anchor, other = left_t, right_t
    emit = _as_emit(sink)
    count = 0
    for a, b in _concepts(g, anchor, other):
        count += 1
        if emit is not None:
            emit(Biclique(a, b))
    return count


def enumerate_maximal_bicliques(
    g: Graph,
    ordering: Optional[Ordering] = None,
    sink=None,
) -> int:
    """Emit every maximal non-induced biclique of g exactly once.

    Runs the bipartite enumeration on the double cover, forwards the
    bicliques accepted by keep_copy, and projects them back to base
    vertex ids in canonical form.  Returns the emission count.
    """
    if ordering is None:
        ordering = Ordering.identity(g.n)
    elif ordering.n != g.n:
        raise ValueError("ordering size does not match the graph")
    if g.m == 0:
        return 0
    dc = build_double_cover(g)
    n = g.n
    emit = _as_emit(sink)
    count = 0
    originals = tuple(range(n))
    copies = tuple(range(n, 2 * n))
    for a, b in _concepts(dc.graph, originals, copies):
        k = Biclique(a, b)
        if keep_copy(dc, ordering, k):
            count += 1
            if emit is not None:
                emit(Biclique(a, (w - n for w in b)))
    return count


__all__ = [
    "EnumerationSink",
    "closure",
    "enumerate_bipartite_maximal",
    "enumerate_maximal_bicliques",
]
