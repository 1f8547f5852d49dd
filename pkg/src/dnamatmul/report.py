"""Trace rendering: console text, JSON, and Graphviz DOT."""

from __future__ import annotations

import json

from .graph import LayeredGraph, VertexId
from .pipeline import TraceReport
from .readout import render_labels

TRACE_FORMAT = "dnamatmul-trace/1"


def _path_line(report: TraceReport, path) -> str:
    enc = report.encoding
    line = f"\t{path.strand_text(enc)} ({render_labels(path.labels(enc))})"
    if report.path_counts is not None:
        line += f" x{report.path_counts[path]}"
    return line


def format_text(report: TraceReport) -> str:
    out = ["Vertex Strands:"]
    out += [f"\t{label} : {strand}" for label, strand in report.vertex_strands()]
    out += ["", "Edge Strands:"]
    out += [f"\t({u},{v}) : {strand}" for (u, v), strand in report.edge_strands()]
    out += ["", "Path Strands:"]
    out += [_path_line(report, p) for p in report.paths]
    out += ["", "Complete Paths:"]
    out += [_path_line(report, p) for p in report.complete_paths]
    out += ["", "Product Matrix:", f"\t{report.product}"]

    ver = report.verification
    out += ["", "Verification:"]
    out.append(f"\tmatch : {str(ver.match).lower()}")
    out.append(f"\tfalse_positive_only : {str(ver.false_positive_only).lower()}")
    out.append(f"\texpected : {ver.expected}")
    for row, col, sim, exp in ver.mismatched_entries:
        out.append(f"\tmismatch ({row},{col}) : simulated {sim}, expected {exp}")
    return "\n".join(out) + "\n"


def format_quiet(report: TraceReport) -> str:
    return f"{report.product}\n"


def _path_record(report: TraceReport, path) -> dict:
    enc = report.encoding
    rec = {
        "strand": path.strand_text(enc),
        "labels": path.labels(enc),
        "vertices": [list(v) for v in path.vertices],
    }
    if report.path_counts is not None:
        rec["count"] = report.path_counts[path]
    return rec


def to_document(report: TraceReport) -> dict:
    cfg = report.config
    enc = report.encoding
    ver = report.verification
    return {
        "format": TRACE_FORMAT,
        "config": {
            "strand_length": enc.strand_length,
            "seed": cfg.seed,
            "mode": cfg.mode.value,
            "trials": cfg.trials,
            "collision_policy": enc.policy.value,
            "path_cap": cfg.path_cap,
        },
        "layer_sizes": list(report.graph.layer_sizes),
        "vertex_strands": [
            {"label": enc.labels[v], "layer": v.layer, "index": v.index,
             "strand": enc.vertex_to_strand[v]}
            for v in report.graph.vertices()
        ],
        "edge_strands": [
            {"source": u, "target": v, "strand": strand}
            for (u, v), strand in report.edge_strands()
        ],
        "path_strands": [_path_record(report, p) for p in report.paths],
        "complete_paths": [_path_record(report, p) for p in report.complete_paths],
        "product": report.product,
        "verification": {
            "match": ver.match,
            "false_positive_only": ver.false_positive_only,
            "mismatched_entries": [
                {"row": r, "col": c, "simulated": s, "expected": e}
                for r, c, s, e in ver.mismatched_entries
            ],
            "expected": ver.expected,
        },
    }


def format_machine(report: TraceReport) -> str:
    return json.dumps(to_document(report), indent=2) + "\n"


def read_machine_product(text: str) -> list[list[int]]:
    """Product matrix stored in a machine-format trace."""
    doc = json.loads(text)
    if doc.get("format") != TRACE_FORMAT:
        raise ValueError(f"not a {TRACE_FORMAT} document")
    return [[int(x) for x in row] for row in doc["product"]]


def _quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(graph: LayeredGraph, labels: dict[VertexId, str]) -> str:
    """Graphviz description of the layered graph, one rank per layer."""
    lines = ["digraph layered {", "    rankdir=LR;"]
    for layer, size in enumerate(graph.layer_sizes):
        nodes = " ".join(_quote(labels[VertexId(layer, i)]) + ";" for i in range(size))
        lines.append(f"    {{ rank=same; {nodes} }}")
    for u, v in sorted(graph.edges):
        lines.append(f"    {_quote(labels[u])} -> {_quote(labels[v])};")
    lines.append("}")
    return "\n".join(lines) + "\n"
