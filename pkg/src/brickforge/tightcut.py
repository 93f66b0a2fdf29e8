"""Tight and separating cuts, tight cut decomposition, bricks and braces.

Tightness is decided by scanning the perfect-matching catalog rather than
by polyhedral arguments: a cut is tight when every perfect matching meets
it exactly once. Shores of even size are skipped during search because a
perfect matching meets a cut with the parity of the shore, so an even
shore can never give a tight cut in a graph with a perfect matching.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterator

from .graphcore import (
    MultiGraph,
    _shore_mask,
    bipartition,
    contract_shore,
    cut_edge_mask,
    is_isomorphic,
    iter_shore_masks,
    mask_to_vertices,
    vertex_connectivity_at_least,
)
from .matching import (
    enumerate_perfect_matchings,
    is_bicritical,
    is_matching_covered,
    require_matching_covered,
)

CutPolicy = Callable[[list[frozenset[int]], MultiGraph], frozenset[int]]


def _is_tight_mask(g: MultiGraph, mask: int) -> bool:
    cut = cut_edge_mask(g, mask)
    for m in enumerate_perfect_matchings(g).masks:
        if (m & cut).bit_count() != 1:
            return False
    return True


def is_tight_cut(g: MultiGraph, shore) -> bool:
    """True iff every perfect matching meets the cut exactly once."""
    require_matching_covered(g)
    return _is_tight_mask(g, _shore_mask(g, shore))


def is_separating_cut(g: MultiGraph, shore) -> bool:
    """True iff every edge has a perfect matching through it meeting the cut once."""
    require_matching_covered(g)
    cut = cut_edge_mask(g, _shore_mask(g, shore))
    cat = enumerate_perfect_matchings(g)
    for e in g.live_edges():
        inc = cat.incidence[e]
        ok = False
        while inc:
            low = inc & -inc
            if (cat.masks[low.bit_length() - 1] & cut).bit_count() == 1:
                ok = True
                break
            inc ^= low
        if not ok:
            return False
    return True


def iter_nontrivial_tight_shores(g: MultiGraph) -> Iterator[frozenset[int]]:
    """All shores of nontrivial tight cuts, in ascending bitmask order.

    Only odd shores of size 3..n-3 avoiding the top vertex are scanned;
    the complement of any other qualifying shore appears in this range.
    """
    require_matching_covered(g)
    for mask in iter_shore_masks(g, parity=1, min_size=3, max_size=g.n - 3):
        if _is_tight_mask(g, mask):
            yield mask_to_vertices(mask)


def find_nontrivial_tight_cut(g: MultiGraph) -> frozenset[int] | None:
    """The lexicographically least nontrivial tight shore, or None."""
    return next(iter_nontrivial_tight_shores(g), None)


def seeded_policy(seed: int) -> CutPolicy:
    """A cut-selection policy drawing uniformly from the qualifying shores.

    Exists solely to exercise the uniqueness of the decomposition; the
    default policy (lexicographically least shore) is the reproducible one.
    """
    rng = random.Random(seed)

    def policy(shores: list[frozenset[int]], _g: MultiGraph) -> frozenset[int]:
        return shores[rng.randrange(len(shores))]

    return policy


@dataclass(frozen=True)
class Piece:
    graph: MultiGraph
    tag: str  # "brick" or "brace"


@dataclass(frozen=True)
class CutTree:
    """One node of the decomposition tree.

    Leaves carry a tag; internal nodes record the shore that was contracted
    (in the vertex numbering of ``graph``) and the two children, the first
    keeping the shore side and the second keeping its complement.
    """

    graph: MultiGraph
    shore: frozenset[int] | None
    children: tuple["CutTree", "CutTree"] | None
    tag: str | None


@dataclass(frozen=True)
class DecompositionResult:
    """Terminal pieces of a tight cut decomposition plus the cut tree."""

    pieces: tuple[Piece, ...]
    b: int
    p: int
    tree: CutTree


def _piece_tag(g: MultiGraph) -> str:
    return "brace" if bipartition(g) is not None else "brick"


def tight_cut_decomposition(g: MultiGraph, policy: CutPolicy | None = None) -> DecompositionResult:
    """Recursively split on nontrivial tight cuts until none remains.

    Each split contracts one side of the cut to a single vertex, keeping
    parallel edges; both children of a tight cut are matching covered, so
    the recursion is total. Terminal pieces are tagged brick when
    non-bipartite and brace otherwise. With no policy the lexicographically
    least shore is contracted, giving reproducible output.
    """
    require_matching_covered(g)
    pieces: list[Piece] = []

    def rec(h: MultiGraph) -> CutTree:
        if policy is None:
            shore = find_nontrivial_tight_cut(h)
        else:
            shores = list(iter_nontrivial_tight_shores(h))
            shore = policy(shores, h) if shores else None
        if shore is None:
            tag = _piece_tag(h)
            pieces.append(Piece(graph=h, tag=tag))
            return CutTree(graph=h, shore=None, children=None, tag=tag)
        complement = frozenset(range(h.n)) - shore
        keep_shore = contract_shore(h, complement)
        keep_complement = contract_shore(h, shore)
        assert is_matching_covered(keep_shore) and is_matching_covered(keep_complement)
        return CutTree(
            graph=h,
            shore=shore,
            children=(rec(keep_shore), rec(keep_complement)),
            tag=None,
        )

    tree = rec(g)
    b = sum(1 for piece in pieces if piece.tag == "brick")
    p = sum(1 for piece in pieces if piece.tag == "brick" and _is_petersen(piece.graph))
    return DecompositionResult(pieces=tuple(pieces), b=b, p=p, tree=tree)


def _is_petersen(g: MultiGraph) -> bool:
    if g.n != 10:
        return False
    from .families import petersen

    return is_isomorphic(g, petersen(), respect_multiplicity=False)


def brick_number(g: MultiGraph) -> int:
    """Number of bricks in the tight cut decomposition."""
    return g.memo("brick_number", lambda: tight_cut_decomposition(g).b)


def petersen_count(g: MultiGraph) -> int:
    """Number of bricks whose underlying simple graph is the Petersen graph."""
    return tight_cut_decomposition(g).p


def is_brick(g: MultiGraph) -> bool:
    """3-connected and bicritical.

    Equivalent to being matching covered, non-bipartite and free of
    nontrivial tight cuts; the equivalence is exercised by the test suite
    on every sweep graph.
    """

    def compute():
        return vertex_connectivity_at_least(g, 3) and is_bicritical(g)

    return g.memo("is_brick", compute)


def is_brace(g: MultiGraph) -> bool:
    """Matching covered, bipartite, and free of nontrivial tight cuts.

    A 2-vertex multigraph of parallel edges qualifies: it is bipartite and
    admits only trivial cuts.
    """
    if not is_matching_covered(g):
        return False
    if bipartition(g) is None:
        return False
    return find_nontrivial_tight_cut(g) is None
