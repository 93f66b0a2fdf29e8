"""Generators for named cubic graphs and exhaustive small-cubic enumeration.

The ladder is the Cartesian product of a path with a single edge; closing
its four degree-2 corners with two extra edges inside the colour classes
yields a prism when the path is odd and a Moebius ladder when it is even
(closing across the colour classes would instead give bipartite braces,
which nothing here needs, so those variants are not generated).

``enumerate_cubic`` lists the connected simple cubic graphs on n vertices
up to isomorphism. It grows connected loopless cubic multigraphs from the
2-vertex triple edge by two operations, deduplicating each level by
isomorphism, and keeps the simple graphs of the target order:

* edge insertion: subdivide two edges and join the new vertices;
* balloon insertion: subdivide an edge and hang a balloon (an apex over a
  digon) off the new vertex.

Edge insertion alone is not complete: a balloon admits no edge reduction,
since deleting any of its edges either disconnects the graph or forces a
loop when suppressing the degree-2 ends. If a graph has no edge reduction
then every digon lies in a balloon and removing a balloon (suppressing its
attachment vertex) is always valid, so the two operations together reach
every connected loopless cubic multigraph. Restricting the output to
simple graphs is sound for the sweep: a cubic graph with a parallel pair
has a nontrivial 2-cut around it, so no multigraph can be a 3-connected
brick. The published class counts (1, 2, 5, 19, 85, 509 for n = 4..14)
are re-derived in the test suite from a brute-force oracle at small
orders.
"""

from __future__ import annotations

from itertools import combinations

from .errors import BadParameter
from .graphcore import MultiGraph, invariant_key, is_isomorphic

FAMILY_NAMES = ("k4", "c6bar", "ladder", "prism", "moebius", "petersen", "cubeplex")


def k4() -> MultiGraph:
    return MultiGraph(4, list(combinations(range(4), 2)))


def c6bar() -> MultiGraph:
    """Complement of the 6-cycle: two triangles joined by a perfect matching."""
    cycle = {(i, (i + 1) % 6) for i in range(6)}
    cycle |= {(b, a) for a, b in cycle}
    pairs = [(u, v) for u, v in combinations(range(6), 2) if (u, v) not in cycle]
    return MultiGraph(6, pairs)


def ladder(k: int) -> MultiGraph:
    """Path of k rungs times an edge; vertex (i, s) is numbered 2*i + s."""
    if k < 2:
        raise BadParameter(f"ladder needs k >= 2, got {k}")
    pairs = [(2 * i, 2 * i + 1) for i in range(k)]
    for i in range(k - 1):
        pairs.append((2 * i, 2 * i + 2))
        pairs.append((2 * i + 1, 2 * i + 3))
    return MultiGraph(2 * k, pairs)


def _closed_ladder(order: int) -> MultiGraph:
    k = order // 2
    g = ladder(k)
    # corners 0, 1 and 2k-2, 2k-1; (i, s) has colour (i + s) mod 2, so 0 pairs
    # with the far corner of equal colour
    far_same = 2 * (k - 1) if (k - 1) % 2 == 0 else 2 * (k - 1) + 1
    far_other = 2 * (k - 1) + 1 if far_same == 2 * (k - 1) else 2 * (k - 1)
    pairs = list(g.live_pairs()) + [(0, far_same), (1, far_other)]
    return MultiGraph(2 * k, pairs)


def prism(order: int) -> MultiGraph:
    """Two concentric odd cycles joined by rungs; order 2k with k odd."""
    if order < 6 or order % 2 or (order // 2) % 2 == 0:
        raise BadParameter(f"prism order must be 2k with k >= 3 odd, got {order}")
    return _closed_ladder(order)


def moebius(order: int) -> MultiGraph:
    """Moebius ladder; order 2k with k even."""
    if order < 4 or order % 2 or (order // 2) % 2:
        raise BadParameter(f"moebius order must be 2k with k >= 2 even, got {order}")
    return _closed_ladder(order)


def petersen() -> MultiGraph:
    """Kneser graph on the 2-subsets of a 5-set: disjoint pairs are adjacent."""
    subsets = list(combinations(range(5), 2))
    index = {s: i for i, s in enumerate(subsets)}
    pairs = [
        (index[s], index[t])
        for s, t in combinations(subsets, 2)
        if not (set(s) & set(t))
    ]
    return MultiGraph(10, pairs)


# The unique 12-vertex essentially 4-edge-connected cubic near-bipartite
# brick with two adjacent quasi-b-invariant edges, found by exhausting the
# 85 cubic graphs of order 12; presented as a Hamiltonian cycle plus six
# chords. The test suite re-checks every gate condition (brick, essential
# 4-edge-connectivity, near-bipartite witness, 14 b-invariant edges,
# adjacent quasi pair).
_CUBEPLEX_CHORDS = ((0, 8), (1, 4), (2, 9), (3, 7), (5, 11), (6, 10))


def cubeplex() -> MultiGraph:
    pairs = [(i, (i + 1) % 12) for i in range(12)]
    pairs.extend(_CUBEPLEX_CHORDS)
    return MultiGraph(12, pairs)


def generate(name: str, size: int | None = None) -> MultiGraph:
    """Build a named family member; ladder/prism/moebius take a size."""
    if name not in FAMILY_NAMES:
        raise BadParameter(f"unknown family {name!r}; expected one of {FAMILY_NAMES}")
    sized = {"ladder": ladder, "prism": prism, "moebius": moebius}
    if name in sized:
        if size is None:
            raise BadParameter(f"family {name!r} needs a size parameter")
        return sized[name](size)
    if size is not None:
        raise BadParameter(f"family {name!r} takes no size parameter")
    return {"k4": k4, "c6bar": c6bar, "petersen": petersen, "cubeplex": cubeplex}[name]()


def _theta() -> MultiGraph:
    return MultiGraph(2, [(0, 1), (0, 1), (0, 1)])


def _edge_insertions(g: MultiGraph):
    """Subdivide edges i <= j and join the new vertices (+2 vertices)."""
    n = g.n
    x, y = n, n + 1
    edges = g.live_edges()
    for a, i in enumerate(edges):
        u1, v1 = g.edge(i)
        base = [g.edge(e) for e in edges if e != i]
        # same edge twice: a path u-x-y-v plus the joining edge makes a digon
        yield MultiGraph(n + 2, base + [(u1, x), (x, y), (y, v1), (x, y)])
        for j in edges[a + 1 :]:
            u2, v2 = g.edge(j)
            rest = [p for e in edges if e not in (i, j) for p in [g.edge(e)]]
            yield MultiGraph(
                n + 2, rest + [(u1, x), (x, v1), (u2, y), (y, v2), (x, y)]
            )


def _balloon_insertions(g: MultiGraph):
    """Subdivide an edge at t and hang an apex w over a digon (+4 vertices)."""
    n = g.n
    t, w, bu, bv = n, n + 1, n + 2, n + 3
    edges = g.live_edges()
    for i in edges:
        u1, v1 = g.edge(i)
        base = [g.edge(e) for e in edges if e != i]
        yield MultiGraph(
            n + 4,
            base + [(u1, t), (t, v1), (t, w), (w, bu), (w, bv), (bu, bv), (bu, bv)],
        )


def _dedupe(graphs) -> list[MultiGraph]:
    buckets: dict[tuple, list[MultiGraph]] = {}
    out: list[MultiGraph] = []
    for g in graphs:
        key = invariant_key(g)
        reps = buckets.setdefault(key, [])
        # duplicates cluster temporally, so compare against recent reps first
        if any(is_isomorphic(g, r) for r in reversed(reps)):
            continue
        reps.append(g)
        out.append(g)
    return out


_levels: dict[int, list[MultiGraph]] = {}


def _cubic_multigraphs(n: int) -> list[MultiGraph]:
    """Connected loopless cubic multigraphs on n vertices, one per class."""
    if n == 2:
        return [_theta()]
    cached = _levels.get(n)
    if cached is None:

        def candidates():
            for parent in _cubic_multigraphs(n - 2):
                yield from _edge_insertions(parent)
            if n >= 6:
                for parent in _cubic_multigraphs(n - 4):
                    yield from _balloon_insertions(parent)

        cached = _dedupe(candidates())
        _levels[n] = cached
    return cached


def enumerate_cubic(n: int) -> list[MultiGraph]:
    """All connected simple cubic graphs on n vertices, one per isomorphism
    class, in a deterministic order."""
    if n % 2 or not (4 <= n <= 14):
        raise BadParameter(f"n must be even with 4 <= n <= 14, got {n}")
    simple = []
    for g in _cubic_multigraphs(n):
        if len(set(g.live_pairs())) == g.edge_count:
            simple.append(g)
    return simple
