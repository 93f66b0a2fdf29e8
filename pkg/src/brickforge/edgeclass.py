"""Edge taxonomy of matching covered graphs.

Covers removability, mutual-dependence equivalence classes, removable
doubletons, the b-invariant / quasi-b-invariant labels on brick edges,
near-bipartite recognition, the chain decomposition into balanced
bipartite pieces linked cyclically by doubletons, and the shared-vertex
doubleton structure check.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import (
    BipartiteInput,
    DeadEdge,
    NotAClass,
    NotBrick,
    NotCubic,
    TooFewDoubletons,
    ValidationFailed,
)
from .graphcore import (
    MultiGraph,
    connected_components,
    is_cubic,
    is_essentially_4ec_cubic,
    two_coloring,
)
from .matching import (
    enumerate_perfect_matchings,
    is_matching_covered,
    require_matching_covered,
)
from .tightcut import brick_number, is_brick

EquivalenceClasses = tuple[frozenset[int], ...]


def is_removable(g: MultiGraph, e: int) -> bool:
    """True iff deleting the edge leaves a matching covered graph."""
    require_matching_covered(g)
    if not g.is_live(e):
        raise DeadEdge(f"edge {e} is deleted or does not exist")

    def compute():
        return is_matching_covered(g.delete_edges([e]))

    return g.memo(("removable", e), compute)


def equivalence_classes(g: MultiGraph) -> EquivalenceClasses:
    """Partition of the live edges by mutual dependence.

    Two edges are mutually dependent when every perfect matching contains
    both or neither, i.e. when their matching-incidence sets coincide.
    """
    require_matching_covered(g)

    def compute():
        cat = enumerate_perfect_matchings(g)
        groups: dict[int, list[int]] = {}
        for e in g.live_edges():
            groups.setdefault(cat.incidence[e], []).append(e)
        return tuple(
            sorted((frozenset(members) for members in groups.values()), key=min)
        )

    return g.memo("equivalence_classes", compute)


def mutually_exclusive(g: MultiGraph, c1, c2) -> bool:
    """True iff no perfect matching intersects both classes."""
    c1 = frozenset(c1)
    c2 = frozenset(c2)
    classes = set(equivalence_classes(g))
    if c1 not in classes or c2 not in classes or c1 == c2:
        raise NotAClass("arguments must be two distinct mutual-dependence classes")
    cat = enumerate_perfect_matchings(g)
    inc1 = 0
    for e in c1:
        inc1 |= cat.incidence[e]
    inc2 = 0
    for e in c2:
        inc2 |= cat.incidence[e]
    return inc1 & inc2 == 0


def removable_doubletons(g: MultiGraph) -> tuple[frozenset[int], ...]:
    """All pairs {e1, e2} with neither edge removable and g - {e1, e2}
    matching covered, sorted by smallest member."""
    require_matching_covered(g)

    def compute():
        stuck = [e for e in g.live_edges() if not is_removable(g, e)]
        out = []
        for i, e1 in enumerate(stuck):
            for e2 in stuck[i + 1 :]:
                if is_matching_covered(g.delete_edges([e1, e2])):
                    out.append(frozenset((e1, e2)))
        return tuple(sorted(out, key=min))

    return g.memo("removable_doubletons", compute)


def is_near_bipartite(g: MultiGraph) -> tuple[int, int] | None:
    """A pair of edges whose removal leaves a bipartite matching covered
    graph, or None.

    Pairs are scanned in index order, so the returned witness is the
    lexicographically least one. For cubic bricks a bipartite remainder is
    already matching covered, so that check is skipped.
    """
    require_matching_covered(g)
    if two_coloring(g) is not None:
        raise BipartiteInput("graph is already bipartite")

    def compute():
        shortcut = is_cubic(g) and is_brick(g)
        edges = g.live_edges()
        for i, e1 in enumerate(edges):
            for e2 in edges[i + 1 :]:
                h = g.delete_edges([e1, e2])
                if two_coloring(h) is None:
                    continue
                if shortcut or is_matching_covered(h):
                    return (e1, e2)
        return None

    return g.memo("near_bipartite", compute)


class EdgeKind(Enum):
    DOUBLETON_MEMBER = "doubleton_member"
    B_INVARIANT = "b_invariant"
    QUASI_B_INVARIANT = "quasi_b_invariant"
    NON_REMOVABLE_OTHER = "non_removable_other"


@dataclass(frozen=True)
class EdgeLabel:
    kind: EdgeKind
    partner: int | None = None  # doubleton members: the other edge of the pair
    b_after: int | None = None  # removable edges: brick number after deletion


@dataclass(frozen=True)
class EdgeClassification:
    """Per-edge labels of a brick under the removability taxonomy."""

    labels: dict[int, EdgeLabel]

    def edges_of_kind(self, kind: EdgeKind) -> frozenset[int]:
        return frozenset(e for e, lab in self.labels.items() if lab.kind is kind)

    @property
    def e1(self) -> frozenset[int]:
        return self.edges_of_kind(EdgeKind.DOUBLETON_MEMBER)

    @property
    def e2(self) -> frozenset[int]:
        return self.edges_of_kind(EdgeKind.B_INVARIANT)

    @property
    def e3(self) -> frozenset[int]:
        return self.edges_of_kind(EdgeKind.QUASI_B_INVARIANT)

    @property
    def unclassified(self) -> frozenset[int]:
        return self.edges_of_kind(EdgeKind.NON_REMOVABLE_OTHER)


def classify_edges(g: MultiGraph) -> EdgeClassification:
    """Label every live edge of a brick.

    Doubleton members carry their partner; removable edges carry the brick
    number of the deletion, 1 meaning b-invariant and 2 quasi-b-invariant.
    Non-removable edges outside every doubleton are labelled as such (they
    cannot occur in an essentially 4-edge-connected cubic brick).
    """
    if not is_brick(g):
        raise NotBrick("edge classification is defined on bricks")

    def compute():
        partner: dict[int, int] = {}
        for pair in removable_doubletons(g):
            e1, e2 = sorted(pair)
            if e1 in partner or e2 in partner:
                raise ValidationFailed("doubletons overlap; not a brick?")
            partner[e1] = e2
            partner[e2] = e1
        labels: dict[int, EdgeLabel] = {}
        for e in g.live_edges():
            if e in partner:
                labels[e] = EdgeLabel(EdgeKind.DOUBLETON_MEMBER, partner=partner[e])
            elif is_removable(g, e):
                b_after = brick_number(g.delete_edges([e]))
                if b_after == 1:
                    labels[e] = EdgeLabel(EdgeKind.B_INVARIANT, b_after=1)
                elif b_after == 2:
                    labels[e] = EdgeLabel(EdgeKind.QUASI_B_INVARIANT, b_after=2)
                else:
                    raise ValidationFailed(
                        f"removable edge {e} has brick number {b_after} after "
                        "deletion, outside the taxonomy"
                    )
            else:
                labels[e] = EdgeLabel(EdgeKind.NON_REMOVABLE_OTHER)
        return EdgeClassification(labels=labels)

    return g.memo("classification", compute)


def b_invariant_count(g: MultiGraph) -> int:
    """Number of removable edges whose deletion preserves the brick number."""
    return len(classify_edges(g).e2)


@dataclass(frozen=True)
class ChainPiece:
    vertices: tuple[int, ...]
    part_a: tuple[int, ...]
    part_b: tuple[int, ...]


@dataclass(frozen=True)
class ChainDecomposition:
    """Cyclic sequence of balanced bipartite pieces; ``links[i]`` is the
    doubleton joining ``pieces[i]`` to ``pieces[(i+1) % s]``."""

    pieces: tuple[ChainPiece, ...]
    links: tuple[frozenset[int], ...]


def _piece_bipartition(g: MultiGraph, vertices: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """2-colour the subgraph induced by the vertex set; balanced, or fail."""
    vset = set(vertices)
    color = {vertices[0]: 0}
    stack = [vertices[0]]
    adj = g.adjacency()
    while stack:
        v = stack.pop()
        for _ei, u in adj[v]:
            if u not in vset:
                continue
            if u not in color:
                color[u] = 1 - color[v]
                stack.append(u)
            elif color[u] == color[v]:
                raise ValidationFailed(f"piece {vertices} is not bipartite")
    if len(color) != len(vertices):
        raise ValidationFailed(f"piece {vertices} is not connected")
    part_a = tuple(v for v in vertices if color[v] == 0)
    part_b = tuple(v for v in vertices if color[v] == 1)
    if len(part_a) != len(part_b):
        raise ValidationFailed(f"piece {vertices} is not balanced")
    if vertices[0] in part_b:
        part_a, part_b = part_b, part_a
    return part_a, part_b


def chain_decomposition(g: MultiGraph, doubletons) -> ChainDecomposition:
    """Split an essentially 4-edge-connected cubic brick along doubletons.

    The pieces are the connected components of the graph minus all the
    given doubleton edges; the doubletons must link them into a single
    cycle, each joining one consecutive pair of pieces (with two pieces the
    two doubletons form the two links of a 2-cycle). The result is fully
    validated; a failure indicates a bug or a non-conforming input. When
    the input is the set of all removable doubletons, no piece may have
    exactly four vertices.
    """
    if not is_cubic(g):
        raise NotCubic("chain decomposition is defined on cubic bricks")
    if not is_brick(g):
        raise NotBrick("chain decomposition is defined on cubic bricks")
    if not is_essentially_4ec_cubic(g):
        raise ValidationFailed("graph is not essentially 4-edge-connected")
    dbls = sorted((frozenset(d) for d in doubletons), key=min)
    if len(dbls) < 2:
        raise TooFewDoubletons("need at least two removable doubletons")
    removed = set()
    for d in dbls:
        if len(d) != 2 or not all(g.is_live(e) for e in d):
            raise ValidationFailed(f"{sorted(d)} is not a pair of live edges")
        removed |= d

    comps = connected_components(g, skip_edges=frozenset(removed))
    if len(comps) != len(dbls):
        raise ValidationFailed(
            f"{len(dbls)} doubletons produced {len(comps)} pieces; expected equality"
        )
    piece_of = {}
    for idx, comp in enumerate(comps):
        for v in comp:
            piece_of[v] = idx

    # each doubleton must join one pair of distinct pieces with both edges
    link_ends: list[tuple[int, int]] = []
    for d in dbls:
        ends = set()
        for e in d:
            u, v = g.edge(e)
            pu, pv = piece_of[u], piece_of[v]
            if pu == pv:
                raise ValidationFailed(f"doubleton edge {e} lies inside a piece")
            ends.add((min(pu, pv), max(pu, pv)))
        if len(ends) != 1:
            raise ValidationFailed(f"doubleton {sorted(d)} does not join one piece pair")
        link_ends.append(ends.pop())

    # the piece-level multigraph must be a single cycle: 2-regular, connected
    deg = [0] * len(comps)
    nbrs: list[list[tuple[int, int]]] = [[] for _ in comps]  # (piece, link index)
    for li, (p, q) in enumerate(link_ends):
        deg[p] += 1
        deg[q] += 1
        nbrs[p].append((q, li))
        nbrs[q].append((p, li))
    if any(d != 2 for d in deg):
        raise ValidationFailed("doubletons do not link the pieces into a cycle")

    # walk the cycle from the lexicographically least piece, ties by vertex id
    start = min(range(len(comps)), key=lambda i: comps[i])
    first = min(nbrs[start], key=lambda t: (comps[t[0]], t[1]))
    order = [start]
    links = [dbls[first[1]]]
    prev_link = first[1]
    cur = first[0]
    while cur != start:
        order.append(cur)
        nxt = next(t for t in nbrs[cur] if t[1] != prev_link)
        links.append(dbls[nxt[1]])
        prev_link = nxt[1]
        cur = nxt[0]
    if len(order) != len(comps):
        raise ValidationFailed("pieces are not linked into a single cycle")

    pieces = []
    for idx in order:
        part_a, part_b = _piece_bipartition(g, comps[idx])
        pieces.append(ChainPiece(vertices=comps[idx], part_a=part_a, part_b=part_b))

    if tuple(dbls) == tuple(removable_doubletons(g)):
        for piece in pieces:
            if len(piece.vertices) == 4:
                raise ValidationFailed(
                    "a 4-vertex piece implies a doubleton outside the input set"
                )
    return ChainDecomposition(pieces=tuple(pieces), links=tuple(links))


@dataclass(frozen=True)
class SharedVertexViolation:
    vertex: int
    edge1: int
    edge2: int
    reason: str


def shared_vertex_doubleton_check(g: MultiGraph) -> list[SharedVertexViolation]:
    """Check the partner structure of doubletons meeting at a vertex.

    For every vertex incident with two edges from distinct removable
    doubletons, the partner edges must share an endpoint that is adjacent
    to the vertex. Returns the violations found (expected empty on cubic
    bricks).
    """
    if not is_cubic(g):
        raise NotCubic("shared-vertex check is defined on cubic bricks")
    if not is_brick(g):
        raise NotBrick("shared-vertex check is defined on cubic bricks")
    partner: dict[int, int] = {}
    for pair in removable_doubletons(g):
        e1, e2 = sorted(pair)
        partner[e1] = e2
        partner[e2] = e1
    nmask = g.neighbor_masks()
    violations = []
    for v0 in range(g.n):
        incident = [e for e, _u in g.adjacency()[v0] if e in partner]
        for i, e1 in enumerate(incident):
            for e2 in incident[i + 1 :]:
                if partner[e1] == e2:
                    continue  # same doubleton
                p1 = set(g.edge(partner[e1]))
                p2 = set(g.edge(partner[e2]))
                common = p1 & p2
                if not common:
                    violations.append(
                        SharedVertexViolation(v0, e1, e2, "partners share no vertex")
                    )
                elif not any((nmask[v0] >> u0) & 1 for u0 in common):
                    violations.append(
                        SharedVertexViolation(v0, e1, e2, "shared vertex not adjacent")
                    )
    return violations
