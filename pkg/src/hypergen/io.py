"""Reading and writing edge lists, sequence files and sample reports.

Edge-list format: one edge per line, vertex labels separated by commas
and/or whitespace. Blank lines and lines starting with ``#`` are skipped.
A label repeated within a line is kept once (edges are loopless) and
counted in ``ParsedHypergraph.n_duplicates``. Labels get dense ids in order
of first appearance.

Sequence format: non-negative integers separated by whitespace.

Sample reports are JSON documents with ``metadata``, ``samples`` and
``estimate`` keys; see :func:`write_samples_report`.
"""

from __future__ import annotations

import csv
import json
import re
from collections.abc import Sequence
from pathlib import Path
from typing import NamedTuple

from .core import Hypergraph
from .errors import EmptyInput, ParseError

__all__ = [
    "ParsedHypergraph",
    "parse_hypergraph_edgelist",
    "format_hypergraph_edgelist",
    "parse_sequence_file",
    "format_sequence",
    "pseudofractal_sequences",
    "REPORT_SCHEMA",
    "CSV_HEADER",
    "samples_report_json",
    "write_samples_report",
    "read_samples_report",
    "write_samples_csv",
]

REPORT_SCHEMA = "hypergen.samples/1"
CSV_HEADER = ("sample_index", "log_prob", "log_multiplicity", "cc")

_SEP = re.compile(r"[\s,]+")
_LABEL = re.compile(r"[^\s,#]+")


class ParsedHypergraph(NamedTuple):
    hypergraph: Hypergraph
    labels: tuple[str, ...]
    n_duplicates: int


def parse_hypergraph_edgelist(text: str) -> ParsedHypergraph:
    """Parse an edge list into a hypergraph over dense vertex ids.

    Raises:
        ParseError: on an empty field (e.g. ``a,,b``) or a ``#`` inside a label.
        EmptyInput: if no edge is found.
    """
    ids: dict[str, int] = {}
    edges = []
    duplicates = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = _SEP.split(line)
        if re.search(r",\s*,", line) or line.startswith(",") or line.endswith(","):
            raise ParseError("empty label between separators", lineno)
        edge = []
        seen = set()
        for tok in tokens:
            if not _LABEL.fullmatch(tok):
                raise ParseError(f"malformed label {tok!r}", lineno)
            if tok in seen:
                duplicates += 1
                continue
            seen.add(tok)
            edge.append(ids.setdefault(tok, len(ids)))
        edges.append(edge)
    if not edges:
        raise EmptyInput("no edges found")
    labels = tuple(sorted(ids, key=ids.__getitem__))
    return ParsedHypergraph(Hypergraph.from_edges(len(ids), edges), labels, duplicates)


def format_hypergraph_edgelist(h: Hypergraph, labels: Sequence[str] | None = None) -> str:
    """Serialise ``h`` in edge-list format (one line per edge).

    Empty edges cannot be represented and raise ``ValueError``.
    """
    lines = []
    for e in h.edges:
        if not e:
            raise ValueError("empty edges have no edge-list representation")
        lines.append(" ".join(str(v) if labels is None else labels[v] for v in e))
    return "\n".join(lines) + "\n" if lines else ""


def parse_sequence_file(text: str) -> tuple[int, ...]:
    """Parse whitespace-separated non-negative ints, returned non-increasing."""
    values = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        for tok in line.split():
            try:
                x = int(tok)
            except ValueError:
                raise ParseError(f"not an integer: {tok!r}", lineno) from None
            if x < 0:
                raise ParseError(f"negative entry {x}", lineno)
            values.append(x)
    return tuple(sorted(values, reverse=True))


def format_sequence(values: Sequence[int]) -> str:
    return "\n".join(str(int(x)) for x in values) + "\n"


def pseudofractal_sequences(t: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Degree and dimension sequences of the pseudo-fractal graph ``G_t``.

    ``G_t`` has ``3**(t - s + 1)`` vertices of degree ``2**s`` for
    ``s = 1 .. t`` and three vertices of degree ``2**(t + 1)``; every edge has
    dimension 2.
    """
    if not 1 <= t <= 8:
        raise ValueError(f"t must be in 1..8, got {t}")
    degrees = [2 ** (t + 1)] * 3
    for s in range(t, 0, -1):
        degrees += [2 ** s] * 3 ** (t - s + 1)
    return tuple(degrees), (2,) * (sum(degrees) // 2)


def samples_report_json(metadata: dict, samples: Sequence[dict], estimate: dict | None) -> str:
    """Render a sample report; see :func:`write_samples_report` for the fields."""
    doc = {
        "schema": REPORT_SCHEMA,
        "metadata": metadata,
        "n_samples": len(samples),
        "samples": [{"sample_index": i, **s} for i, s in enumerate(samples)],
        "estimate": estimate,
    }
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def write_samples_report(path, metadata: dict, samples: Sequence[dict], estimate: dict | None) -> Path:
    """Write a JSON sample report.

    ``samples`` holds one dict per sample with keys ``log_prob``,
    ``log_multiplicity``, ``cc`` and optionally ``edges``; ``sample_index`` is
    added. ``estimate`` is ``None`` for an empty run. Output is
    deterministic: keys are sorted and no timestamps are written.
    """
    path = Path(path)
    try:
        path.write_text(samples_report_json(metadata, samples, estimate), encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write report to {path}: {exc}") from exc
    return path


def read_samples_report(path) -> dict:
    path = Path(path)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise OSError(f"cannot read report {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg})", exc.lineno) from None
    if doc.get("schema") != REPORT_SCHEMA:
        raise ParseError(f"{path}: not a {REPORT_SCHEMA} document")
    return doc


def write_samples_csv(path, samples: Sequence[dict]) -> Path:
    """One row per sample with columns :data:`CSV_HEADER`."""
    path = Path(path)
    try:
        with path.open("w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(CSV_HEADER)
            for i, s in enumerate(samples):
                writer.writerow([i, _csv_num(s.get("log_prob")), _csv_num(s.get("log_multiplicity")),
                                 _csv_num(s.get("cc"))])
    except OSError as exc:
        raise OSError(f"cannot write CSV to {path}: {exc}") from exc
    return path


def _csv_num(x):
    return "" if x is None else repr(float(x))
