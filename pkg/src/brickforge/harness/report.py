"""Per-graph report records, serialized one JSON object per line.

A record carries the order, the cubic/brick/connectivity flags, the edge
taxonomy sizes, the main bound and equality flags, and which extremal
family (prism or Moebius ladder) the graph belongs to. Fields that do not
apply (e.g. the taxonomy of a non-brick) are null. The stream format is
pinned by the versioned JSON schema shipped with the package.
"""

from __future__ import annotations

import json
from importlib import resources

from ..edgeclass import classify_edges, is_near_bipartite, removable_doubletons
from ..errors import BipartiteInput
from ..families import moebius, prism
from ..graphcore import MultiGraph, is_cubic, is_essentially_4ec_cubic, is_isomorphic, two_coloring
from ..matching import is_matching_covered
from ..tightcut import is_brick
from .io import emit_sparse6

SCHEMA_NAME = "report-v1.json"


def load_report_schema() -> dict:
    text = resources.files("brickforge.schema").joinpath(SCHEMA_NAME).read_text()
    return json.loads(text)


def identify_family(g: MultiGraph) -> str:
    """Which closed-ladder family the graph belongs to: prism, moebius, other."""
    if not is_cubic(g):
        return "other"
    n = g.n
    if n >= 6 and (n // 2) % 2 == 1 and is_isomorphic(g, prism(n)):
        return "prism"
    if n >= 4 and (n // 2) % 2 == 0 and is_isomorphic(g, moebius(n)):
        return "moebius"
    return "other"


def classify_record(g: MultiGraph, index: int | None = None) -> dict:
    """The full per-graph record; inapplicable fields are null."""
    cubic = is_cubic(g)
    covered = is_matching_covered(g)
    brick = is_brick(g)
    record: dict = {
        "type": "record",
        "index": index,
        "s6": emit_sparse6(g),
        "order": g.n,
        "cubic": cubic,
        "brick": brick,
        "essentially_4ec": is_essentially_4ec_cubic(g) if cubic else None,
        "near_bipartite": None,
        "doubletons": None,
        "e1": None,
        "e2": None,
        "e3": None,
        "bound_satisfied": None,
        "equality": None,
        "family": identify_family(g) if cubic else None,
    }
    if covered:
        record["doubletons"] = len(removable_doubletons(g))
        if two_coloring(g) is not None:
            record["near_bipartite"] = None  # defined for non-bipartite graphs
        else:
            try:
                record["near_bipartite"] = is_near_bipartite(g) is not None
            except BipartiteInput:  # pragma: no cover - guarded above
                record["near_bipartite"] = None
    if brick:
        cls = classify_edges(g)
        record["e1"] = len(cls.e1)
        record["e2"] = len(cls.e2)
        record["e3"] = len(cls.e3)
        if record["cubic"] and record["essentially_4ec"] and record["near_bipartite"]:
            record["bound_satisfied"] = record["e2"] >= g.n // 2
            record["equality"] = record["e2"] == g.n // 2
    return record


def dump_line(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


_RECORD_COLUMNS = (
    "index", "order", "cubic", "brick", "essentially_4ec", "near_bipartite",
    "doubletons", "e1", "e2", "e3", "bound_satisfied", "equality", "family",
)


def format_pretty(records: list[dict]) -> str:
    """Human-readable table of records (the --pretty rendering)."""

    def cell(value) -> str:
        if value is None:
            return "-"
        if value is True:
            return "yes"
        if value is False:
            return "no"
        return str(value)

    rows = [[cell(r.get(c)) for c in _RECORD_COLUMNS] for r in records]
    widths = [
        max(len(name), *(len(row[i]) for row in rows)) if rows else len(name)
        for i, name in enumerate(_RECORD_COLUMNS)
    ]
    lines = ["  ".join(name.ljust(widths[i]) for i, name in enumerate(_RECORD_COLUMNS))]
    for row in rows:
        lines.append("  ".join(row[i].ljust(widths[i]) for i in range(len(row))))
    return "\n".join(lines) + "\n"
