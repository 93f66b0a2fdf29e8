"""Loopless undirected multigraphs on vertices 0..n-1 with stable edge indices.

Edges are stored as an indexed sequence of unordered pairs; parallel edges
are distinct entries. Deleting an edge tombstones its index, so surviving
indices never shift and classifications can refer to edges of derived
graphs by the original index. Graphs are immutable after construction;
every operation in this module is a pure function of its inputs, so values
can be shared freely between concurrent workers.

Vertex subsets ("shores") are accepted either as an integer bitmask or as
any iterable of vertices, and are returned as frozensets. Routines that
enumerate all subsets are guarded to n <= 24; the BRICKFORGE_SIZE_LIMIT
environment variable overrides the guard (at your own risk).
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .errors import (
    BadParameter,
    DeadEdge,
    Disconnected,
    EmptyShore,
    FullShore,
    LoopEdge,
    NotCubic,
    SizeLimit,
    VertexOutOfRange,
)

DEFAULT_SIZE_LIMIT = 24
SIZE_LIMIT_ENV = "BRICKFORGE_SIZE_LIMIT"

ShoreLike = "int | Iterable[int]"


def size_limit() -> int:
    raw = os.environ.get(SIZE_LIMIT_ENV)
    if raw is None:
        return DEFAULT_SIZE_LIMIT
    try:
        return int(raw)
    except ValueError as exc:
        raise BadParameter(f"{SIZE_LIMIT_ENV} must be an integer, got {raw!r}") from exc


class MultiGraph:
    """A loopless undirected multigraph.

    Vertices are 0..n-1. ``pairs`` is the full edge table including
    tombstoned entries; only indices listed in ``live_edges()`` are part of
    the graph. The ``_cache`` dict memoizes derived data (adjacency,
    perfect-matching catalogs, ...) keyed per graph identity; it never
    affects observable semantics.
    """

    __slots__ = ("n", "_pairs", "_alive", "_cache")

    def __init__(self, n: int, pairs: Iterable[tuple[int, int]], _alive: tuple[bool, ...] | None = None):
        if n < 1:
            raise BadParameter(f"vertex count must be >= 1, got {n}")
        norm: list[tuple[int, int]] = []
        for u, v in pairs:
            if not (0 <= u < n) or not (0 <= v < n):
                raise VertexOutOfRange(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            norm.append((u, v) if u <= v else (v, u))
        self.n = n
        self._pairs = tuple(norm)
        if _alive is None:
            _alive = (True,) * len(norm)
        self._alive = _alive
        self._cache: dict = {}

    # -- pickling (drop the cache; workers rebuild it) --
    def __getstate__(self):
        return (self.n, self._pairs, self._alive)

    def __setstate__(self, state):
        self.n, self._pairs, self._alive = state
        self._cache = {}

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.n}, m={self.edge_count})"

    def memo(self, key, producer: Callable):
        """Per-identity memoization hook used by the other modules."""
        try:
            return self._cache[key]
        except KeyError:
            value = producer()
            self._cache[key] = value
            return value

    @property
    def edge_count(self) -> int:
        return len(self.live_edges())

    def is_live(self, e: int) -> bool:
        return 0 <= e < len(self._pairs) and self._alive[e]

    def edge(self, e: int) -> tuple[int, int]:
        if not self.is_live(e):
            raise DeadEdge(f"edge {e} is deleted or does not exist")
        return self._pairs[e]

    def live_edges(self) -> tuple[int, ...]:
        return self.memo(
            "live", lambda: tuple(i for i, a in enumerate(self._alive) if a)
        )

    def live_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(self._pairs[i] for i in self.live_edges())

    def delete_edges(self, edges: Iterable[int]) -> "MultiGraph":
        """Return a copy with the given edges tombstoned; indices are preserved."""
        doomed = set(edges)
        for e in doomed:
            if not self.is_live(e):
                raise DeadEdge(f"edge {e} is deleted or does not exist")
        alive = tuple(a and i not in doomed for i, a in enumerate(self._alive))
        g = MultiGraph.__new__(MultiGraph)
        g.n = self.n
        g._pairs = self._pairs
        g._alive = alive
        g._cache = {}
        return g

    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the incident live (edge_index, other_end) pairs."""

        def build():
            adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
            for i in self.live_edges():
                u, v = self._pairs[i]
                adj[u].append((i, v))
                adj[v].append((i, u))
            return tuple(tuple(a) for a in adj)

        return self.memo("adj", build)

    def degree(self, v: int) -> int:
        return len(self.adjacency()[v])

    def degrees(self) -> tuple[int, ...]:
        return self.memo("degs", lambda: tuple(len(a) for a in self.adjacency()))

    def incident_edge_masks(self) -> tuple[int, ...]:
        """Per vertex, a bitmask over edge indices of the incident live edges."""

        def build():
            masks = [0] * self.n
            for i in self.live_edges():
                u, v = self._pairs[i]
                masks[u] |= 1 << i
                masks[v] |= 1 << i
            return tuple(masks)

        return self.memo("emask", build)

    def neighbor_masks(self) -> tuple[int, ...]:
        """Per vertex, a bitmask of distinct neighbours (multiplicity ignored)."""

        def build():
            masks = [0] * self.n
            for i in self.live_edges():
                u, v = self._pairs[i]
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            return tuple(masks)

        return self.memo("nmask", build)

    def mult_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Adjacency multiplicity matrix."""

        def build():
            m = [[0] * self.n for _ in range(self.n)]
            for i in self.live_edges():
                u, v = self._pairs[i]
                m[u][v] += 1
                m[v][u] += 1
            return tuple(tuple(row) for row in m)

        return self.memo("mult", build)


@dataclass(frozen=True)
class Bipartition:
    """The two colour classes of a bipartite graph; every edge crosses."""

    a: frozenset[int]
    b: frozenset[int]


def validate_multigraph(n: int, pairs: Iterable[tuple[int, int]]) -> MultiGraph:
    """Build a multigraph, rejecting loops and out-of-range endpoints."""
    return MultiGraph(n, pairs)


def _shore_mask(g: MultiGraph, shore) -> int:
    """Normalize a shore to a bitmask and validate it is nonempty and proper."""
    if isinstance(shore, int):
        mask = shore
        if mask < 0 or mask >> g.n:
            raise VertexOutOfRange(f"shore mask {mask:#x} out of range for n={g.n}")
    else:
        mask = 0
        for v in shore:
            if not (0 <= v < g.n):
                raise VertexOutOfRange(f"shore vertex {v} out of range for n={g.n}")
            mask |= 1 << v
    if mask == 0:
        raise EmptyShore("shore must be nonempty")
    if mask == (1 << g.n) - 1:
        raise FullShore("shore must be a proper subset")
    return mask


def mask_to_vertices(mask: int) -> frozenset[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


def _guard_size(g: MultiGraph) -> None:
    limit = size_limit()
    if g.n > limit:
        raise SizeLimit(
            f"n={g.n} exceeds the subset-enumeration guard ({limit}); "
            f"set {SIZE_LIMIT_ENV} to override"
        )


def cut_edge_mask(g: MultiGraph, mask: int) -> int:
    """Bitmask of edges with exactly one end in the shore.

    XOR of the incident-edge masks over the shore: edges inside cancel,
    crossing edges survive.
    """
    emasks = g.incident_edge_masks()
    out = 0
    m = mask
    while m:
        low = m & -m
        out ^= emasks[low.bit_length() - 1]
        m ^= low
    return out


def cut_edges(g: MultiGraph, shore) -> frozenset[int]:
    """Edge indices of the cut determined by the shore, with multiplicity."""
    mask = _shore_mask(g, shore)
    return mask_to_vertices(cut_edge_mask(g, mask))


def is_connected(g: MultiGraph) -> bool:
    def compute():
        seen = 1
        stack = [0]
        nmask = g.neighbor_masks()
        while stack:
            v = stack.pop()
            new = nmask[v] & ~seen
            seen |= new
            while new:
                low = new & -new
                stack.append(low.bit_length() - 1)
                new ^= low
        return seen == (1 << g.n) - 1

    return g.memo("connected", compute)


def connected_components(g: MultiGraph, skip_edges: frozenset[int] = frozenset()) -> list[tuple[int, ...]]:
    """Vertex sets of the components, optionally ignoring some edges."""
    adj = g.adjacency()
    seen = [False] * g.n
    comps: list[tuple[int, ...]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for ei, u in adj[v]:
                if ei in skip_edges or seen[u]:
                    continue
                seen[u] = True
                comp.append(u)
                stack.append(u)
        comps.append(tuple(sorted(comp)))
    return comps


def edge_connectivity(g: MultiGraph) -> int:
    """Minimum cut size over all shores, by full shore enumeration."""
    if not is_connected(g):
        raise Disconnected("edge connectivity requires a connected graph")
    if g.n == 1:
        return 0
    _guard_size(g)
    best = g.edge_count + 1
    # vertex n-1 stays in the complement; complementary shores give equal cuts
    for mask in range(1, 1 << (g.n - 1)):
        size = cut_edge_mask(g, mask).bit_count()
        if size < best:
            best = size
    return best


def is_cubic(g: MultiGraph) -> bool:
    return all(d == 3 for d in g.degrees())


def is_essentially_4ec_cubic(g: MultiGraph) -> bool:
    """True iff the cubic graph is 2-edge-connected and every 3-cut is trivial."""
    if not is_cubic(g):
        raise NotCubic("essential 4-edge-connectivity is defined for cubic graphs")
    if not is_connected(g):
        return False
    _guard_size(g)
    n = g.n
    for mask in range(1, 1 << (n - 1)):
        size = cut_edge_mask(g, mask).bit_count()
        if size < 2:
            return False
        if size == 3:
            pc = mask.bit_count()
            if pc != 1 and pc != n - 1:
                return False
    return True


def two_coloring(g: MultiGraph) -> list[int] | None:
    """2-colour every component; None if some component has an odd cycle."""
    color = [-1] * g.n
    adj = g.adjacency()
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for _ei, u in adj[v]:
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return None
    return color


def bipartition(g: MultiGraph) -> Bipartition | None:
    """The 2-colouring of a connected graph, or None if non-bipartite."""
    if not is_connected(g):
        raise Disconnected("bipartition requires a connected graph")

    def compute():
        color = two_coloring(g)
        if color is None:
            return None
        return Bipartition(
            a=frozenset(v for v in range(g.n) if color[v] == 0),
            b=frozenset(v for v in range(g.n) if color[v] == 1),
        )

    return g.memo("bipartition", compute)


def contract_shore(g: MultiGraph, shore) -> MultiGraph:
    """Collapse the shore to one new vertex, dropping the edges inside it.

    Vertices outside the shore are renumbered in increasing order; the new
    vertex gets the last index. Parallel edges arising from the cut are
    retained, and no loops can appear because edges inside the shore are
    removed.
    """
    mask = _shore_mask(g, shore)
    keep = [v for v in range(g.n) if not (mask >> v) & 1]
    remap = {v: i for i, v in enumerate(keep)}
    new_vertex = len(keep)
    pairs = []
    for i in g.live_edges():
        u, v = g.edge(i)
        inu = (mask >> u) & 1
        inv = (mask >> v) & 1
        if inu and inv:
            continue
        if inu:
            pairs.append((new_vertex, remap[v]))
        elif inv:
            pairs.append((remap[u], new_vertex))
        else:
            pairs.append((remap[u], remap[v]))
    return MultiGraph(new_vertex + 1, pairs)


def underlying_simple(g: MultiGraph) -> MultiGraph:
    """The simple graph obtained by collapsing parallel edges."""
    return MultiGraph(g.n, sorted(set(g.live_pairs())))


def _vertex_invariants(g: MultiGraph) -> list[tuple]:
    def build():
        mm = g.mult_matrix()
        degs = g.degrees()
        nmask = g.neighbor_masks()
        inv = []
        for v in range(g.n):
            row = mm[v]
            mults = tuple(sorted(m for m in row if m))
            tri = 0
            ndegs = []
            for u in range(g.n):
                if row[u]:
                    tri += (nmask[v] & nmask[u]).bit_count()
                    ndegs.append(degs[u])
            inv.append((degs[v], mults, tri, tuple(sorted(ndegs))))
        return inv

    return g.memo("vinv", build)


def _matching_order(g: MultiGraph, inv: list[tuple]) -> list[int]:
    # BFS from the rarest invariant so most vertices are placed next to a
    # mapped neighbour, which makes the row checks prune early.
    def build():
        freq = Counter(inv)
        nmask = g.neighbor_masks()
        order: list[int] = []
        seen = [False] * g.n
        while len(order) < g.n:
            start = min(
                (v for v in range(g.n) if not seen[v]), key=lambda v: (freq[inv[v]], v)
            )
            seen[start] = True
            queue = [start]
            while queue:
                v = queue.pop(0)
                order.append(v)
                m = nmask[v]
                while m:
                    low = m & -m
                    u = low.bit_length() - 1
                    m ^= low
                    if not seen[u]:
                        seen[u] = True
                        queue.append(u)
        return order

    return g.memo("match_order", build)


def invariant_key(g: MultiGraph) -> tuple:
    """A cheap isomorphism-invariant fingerprint, used to bucket candidates."""

    def build():
        nmask = g.neighbor_masks()
        inv = _vertex_invariants(g)
        codegs = []
        for u in range(g.n):
            for v in range(u + 1, g.n):
                codegs.append((nmask[u] & nmask[v]).bit_count())
        return (g.n, g.edge_count, tuple(sorted(inv)), tuple(sorted(codegs)))

    return g.memo("inv_key", build)


def is_isomorphic(g1: MultiGraph, g2: MultiGraph, respect_multiplicity: bool = True) -> bool:
    """Backtracking isomorphism test with degree and neighbourhood pruning.

    With ``respect_multiplicity`` unset, the underlying simple graphs are
    compared instead, so graphs equal up to multiple edges are identified.
    Intended for the n <= 16 range this library targets.
    """
    if not respect_multiplicity:
        g1 = underlying_simple(g1)
        g2 = underlying_simple(g2)
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    n = g1.n
    inv1 = _vertex_invariants(g1)
    inv2 = _vertex_invariants(g2)
    if sorted(inv1) != sorted(inv2):
        return False
    cands = [tuple(w for w in range(n) if inv2[w] == inv1[v]) for v in range(n)]
    order = _matching_order(g1, inv1)
    m1 = g1.mult_matrix()
    m2 = g2.mult_matrix()
    mapping = [-1] * n
    used = [False] * n

    def rec(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        row1 = m1[v]
        for w in cands[v]:
            if used[w]:
                continue
            row2 = m2[w]
            ok = True
            for j in range(i):
                u = order[j]
                if row1[u] != row2[mapping[u]]:
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if rec(i + 1):
                    return True
                used[w] = False
                mapping[v] = -1
        return False

    return rec(0)


def vertex_connectivity_at_least(g: MultiGraph, k: int) -> bool:
    """Standard k-connectivity for k in {1, 2, 3}: every removal of k-1
    vertices leaves a connected graph on at least 2 vertices."""
    if k not in (1, 2, 3):
        raise BadParameter(f"k must be 1, 2 or 3, got {k}")
    if g.n < k + 1:
        return False
    nmask = g.neighbor_masks()
    full = (1 << g.n) - 1

    def connected_without(removed: int) -> bool:
        avail = full & ~removed
        start = (avail & -avail).bit_length() - 1
        seen = 1 << start
        stack = [start]
        while stack:
            v = stack.pop()
            new = nmask[v] & avail & ~seen
            seen |= new
            while new:
                low = new & -new
                stack.append(low.bit_length() - 1)
                new ^= low
        return seen == avail

    if k == 1:
        return connected_without(0)
    if k == 2:
        return all(connected_without(1 << x) for x in range(g.n))
    return all(
        connected_without((1 << x) | (1 << y))
        for x in range(g.n)
        for y in range(x + 1, g.n)
    )


def iter_shore_masks(g: MultiGraph, parity: int | None = None, min_size: int = 1, max_size: int | None = None) -> Iterator[int]:
    """Ascending enumeration of shore bitmasks avoiding vertex n-1.

    Every cut appears exactly once because complementary shores determine
    the same cut and exactly one of them avoids the top vertex; ascending
    mask order makes "first hit" the lexicographically least shore overall.
    """
    _guard_size(g)
    n = g.n
    if max_size is None:
        max_size = n - 1
    for mask in range(1, 1 << (n - 1)):
        pc = mask.bit_count()
        if pc < min_size or pc > max_size:
            continue
        if parity is not None and pc % 2 != parity:
            continue
        yield mask
