"""Perfect matching enumeration and the matching covered predicates.

The enumerator branches on which edge matches a minimum-degree unmatched
vertex and prunes as soon as some vertex has no available partner. That is
exponential in the worst case, which is irrelevant at the n <= 16 sizes
this library sweeps; the catalog is memoized per graph identity, and
derived graphs (deletions, contractions) build their own catalogs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DeadEdge, NoPerfectMatching, NotMatchingCovered
from .graphcore import Bipartition, MultiGraph, _guard_size, is_connected


@dataclass(frozen=True)
class PMCatalog:
    """The complete set of perfect matchings of one graph.

    ``matchings`` lists each perfect matching as a frozenset of edge
    indices; ``masks`` holds the same matchings as edge bitmasks; and
    ``incidence`` maps every live edge to a bitmask over matching indices
    recording which matchings contain it.
    """

    matchings: tuple[frozenset[int], ...]
    masks: tuple[int, ...]
    incidence: dict[int, int]

    def __len__(self) -> int:
        return len(self.matchings)

    def matchings_with(self, e: int) -> tuple[int, ...]:
        inc = self.incidence[e]
        out = []
        while inc:
            low = inc & -inc
            out.append(low.bit_length() - 1)
            inc ^= low
        return tuple(out)


def _search(g: MultiGraph, pre_matched: int = 0, first_only: bool = False) -> list[frozenset[int]]:
    """Enumerate perfect matchings of the graph minus the pre-matched vertices."""
    n = g.n
    adj = g.adjacency()
    matched = [False] * n
    remaining = n
    m = pre_matched
    while m:
        low = m & -m
        matched[low.bit_length() - 1] = True
        remaining -= 1
        m ^= low
    if remaining % 2:
        return []
    chosen: list[int] = []
    out: list[frozenset[int]] = []
    # parallel edges can push a degree past n, so bound by the edge count
    max_deg = len(g.live_edges()) + 1

    def rec(remaining: int) -> bool:
        if remaining == 0:
            out.append(frozenset(chosen))
            return first_only
        best_v = -1
        best_deg = max_deg
        for v in range(n):
            if matched[v]:
                continue
            d = 0
            for _ei, u in adj[v]:
                if not matched[u]:
                    d += 1
            if d < best_deg:
                best_deg = d
                best_v = v
                if d == 0:
                    break
        if best_deg == 0:
            return False
        v = best_v
        for ei, u in adj[v]:
            if matched[u]:
                continue
            matched[v] = matched[u] = True
            chosen.append(ei)
            stop = rec(remaining - 2)
            chosen.pop()
            matched[v] = matched[u] = False
            if stop:
                return True
        return False

    rec(remaining)
    return out


def enumerate_perfect_matchings(g: MultiGraph) -> PMCatalog:
    """The complete, duplicate-free catalog of perfect matchings."""

    def build():
        _guard_size(g)
        matchings = tuple(_search(g))
        masks = []
        incidence = {e: 0 for e in g.live_edges()}
        for i, match in enumerate(matchings):
            mask = 0
            for e in match:
                mask |= 1 << e
                incidence[e] |= 1 << i
            masks.append(mask)
        return PMCatalog(matchings=matchings, masks=tuple(masks), incidence=incidence)

    return g.memo("pm_catalog", build)


def has_perfect_matching(g: MultiGraph) -> bool:
    def compute():
        if "pm_catalog" in g._cache:
            return len(g._cache["pm_catalog"]) > 0
        _guard_size(g)
        return bool(_search(g, first_only=True))

    return g.memo("has_pm", compute)


def allowed_edges(g: MultiGraph) -> frozenset[int]:
    """Edges lying in at least one perfect matching."""
    cat = enumerate_perfect_matchings(g)
    return frozenset(e for e, inc in cat.incidence.items() if inc)


def is_matching_covered(g: MultiGraph) -> bool:
    """Connected, at least one edge, and every live edge in some perfect matching."""

    def compute():
        if g.edge_count == 0 or not is_connected(g):
            return False
        return len(allowed_edges(g)) == g.edge_count

    return g.memo("matching_covered", compute)


def require_matching_covered(g: MultiGraph) -> None:
    if not is_matching_covered(g):
        raise NotMatchingCovered("operation requires a matching covered graph")


def is_bicritical(g: MultiGraph) -> bool:
    """G - {x, y} has a perfect matching for every pair of distinct vertices."""
    if g.n % 2 or g.n < 2:
        return False
    _guard_size(g)
    for x in range(g.n):
        for y in range(x + 1, g.n):
            if not _search(g, pre_matched=(1 << x) | (1 << y), first_only=True):
                return False
    return True


@dataclass(frozen=True)
class DMWitness:
    """Certificate that an edge of a bipartite graph lies in no perfect matching.

    The partitions satisfy |a1| = |b1|, the offending edge runs from a2 to
    b1, and there are no edges from a1 to b2.
    """

    a1: frozenset[int]
    a2: frozenset[int]
    b1: frozenset[int]
    b2: frozenset[int]
    edge: int


def _validate_dm(g: MultiGraph, w: DMWitness) -> None:
    assert len(w.a1) == len(w.b1)
    u, v = g.edge(w.edge)
    assert (u in w.a2 and v in w.b1) or (v in w.a2 and u in w.b1)
    for i in g.live_edges():
        x, y = g.edge(i)
        assert not (x in w.a1 and y in w.b2) and not (y in w.a1 and x in w.b2)


def dm_witness(g: MultiGraph, bip: Bipartition, e: int) -> DMWitness | None:
    """Dulmage-Mendelsohn certificate for a non-allowed edge, or None.

    Fix a perfect matching and orient matched edges B->A and unmatched
    edges A->B. The edge ab (a in A, b in B) lies in some perfect matching
    exactly when a is reachable from b, i.e. an alternating cycle closes
    through it; otherwise the reachable set of b supplies the partitions.
    """
    if not g.is_live(e):
        raise DeadEdge(f"edge {e} is deleted or does not exist")
    cat = enumerate_perfect_matchings(g)
    if not cat.matchings:
        raise NoPerfectMatching("Dulmage-Mendelsohn needs a perfect matching")
    if cat.incidence[e]:
        return None
    u, v = g.edge(e)
    a_end, b_end = (u, v) if u in bip.a else (v, u)
    partner = {}
    for i in cat.matchings[0]:
        x, y = g.edge(i)
        partner[x] = y
        partner[y] = x
    adj = g.adjacency()
    reach = {b_end}
    stack = [b_end]
    while stack:
        x = stack.pop()
        if x in bip.b:
            y = partner[x]
            if y not in reach:
                reach.add(y)
                stack.append(y)
        else:
            for _ei, y in adj[x]:
                if y != partner[x] and y not in reach:
                    reach.add(y)
                    stack.append(y)
    a1 = frozenset(reach & bip.a)
    b1 = frozenset(reach & bip.b)
    witness = DMWitness(
        a1=a1, a2=frozenset(bip.a - a1), b1=b1, b2=frozenset(bip.b - b1), edge=e
    )
    _validate_dm(g, witness)
    return witness
