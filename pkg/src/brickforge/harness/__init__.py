"""CLI, file formats, report records and the verification sweep."""

from .io import emit_edge_list, emit_sparse6, parse_edge_list, parse_graph, parse_sparse6
from .report import classify_record, load_report_schema
from .sweep import SweepResult, run_sweep

__all__ = [
    "SweepResult",
    "classify_record",
    "emit_edge_list",
    "emit_sparse6",
    "load_report_schema",
    "parse_edge_list",
    "parse_graph",
    "parse_sparse6",
    "run_sweep",
]
