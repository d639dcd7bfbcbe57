"""
Certificates: a coloring of K_n on disk.

Text format (docs/certificate_schema.md): one JSON object header line, then
one JSON array [u, v, color] per edge in canonical (lexicographic) order.
Writing is deterministic, so write -> read -> write is byte-identical.

CSV export carries the same header as a leading '#' line, so it re-imports to
the identical Certificate. DOT export gives each color class one pen color.
"""
from __future__ import annotations

import io
import json
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from pathlib import Path

import numpy as np
import pandas as pd

from colorings.constructions import ColorPartition, EdgeColoring
from errors import CertificateParseError

SCHEMA_VERSION = 1
EXPORT_FORMATS = ("dot", "csv")


@dataclass
class Certificate:
    n: int
    k: int
    construction: str
    edges: list[tuple[int, int, int]]
    q: int | None = None
    metadata: dict = field(default_factory=dict)
    schema_version: int = SCHEMA_VERSION

    @classmethod
    def from_coloring(cls, coloring: EdgeColoring) -> "Certificate":
        prov = dict(coloring.provenance)
        construction = str(prov.pop("construction", "unknown"))
        q = prov.pop("q", None)
        meta = dict(prov)
        if coloring.partition is not None:
            meta["partition"] = {"classes": [list(c) for c in coloring.partition.classes],
                                 "owner_lines": list(coloring.partition.owner_lines)}
        return cls(n=coloring.n, k=coloring.k, construction=construction, q=q,
                   edges=coloring.edges(), metadata=meta)

    def to_coloring(self) -> EdgeColoring:
        meta = dict(self.metadata)
        part = meta.pop("partition", None)
        partition = None
        if part is not None:
            partition = ColorPartition(classes=tuple(tuple(c) for c in part["classes"]),
                                       owner_lines=tuple(part["owner_lines"]))
        prov = dict(meta, construction=self.construction)
        if self.q is not None:
            prov["q"] = self.q
        return EdgeColoring(n=self.n, k=self.k, color_of={(u, v): c for u, v, c in self.edges},
                            provenance=prov, partition=partition)

    def header(self) -> dict:
        return {"schema_version": self.schema_version, "n": self.n, "q": self.q, "k": self.k,
                "construction": self.construction, "metadata": self.metadata}


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def dumps(cert: Certificate) -> str:
    lines = [_dumps(cert.header())]
    lines += [_dumps([u, v, c]) for u, v, c in cert.edges]
    return "\n".join(lines) + "\n"


def write(cert: Certificate, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(cert))
    return path


def _parse_header(text: str, line_no: int = 1) -> dict:
    try:
        head = json.loads(text)
    except json.JSONDecodeError as e:
        raise CertificateParseError(f"bad header: {e.msg}", line_no, e.colno) from None
    if not isinstance(head, dict):
        raise CertificateParseError("header must be a JSON object", line_no, 1)
    for key in ("schema_version", "n", "k", "construction"):
        if key not in head:
            raise CertificateParseError(f"header is missing {key!r}", line_no, 1)
    if head["schema_version"] != SCHEMA_VERSION:
        raise CertificateParseError(
            f"schema_version {head['schema_version']} is not supported (expected {SCHEMA_VERSION})", line_no, 1)
    if not isinstance(head["n"], int) or head["n"] < 2 or not isinstance(head["k"], int) or head["k"] < 1:
        raise CertificateParseError(f"bad n={head['n']!r} / k={head['k']!r}", line_no, 1)
    return head


def _check_edges(head: dict, edges: list[tuple[int, int, int]], line_nos: list[int]) -> None:
    n, k = head["n"], head["k"]
    expected = list(combinations(range(n), 2))
    for i, (u, v, c) in enumerate(edges):
        if i >= len(expected) or (u, v) != expected[i]:
            want = expected[i] if i < len(expected) else "end of file"
            raise CertificateParseError(f"edge {(u, v)} out of canonical order, expected {want}", line_nos[i], 1)
        if not 1 <= c <= k:
            raise CertificateParseError(f"color {c} outside [1, {k}]", line_nos[i], 1)
    if len(edges) != comb(n, 2):
        last = line_nos[-1] + 1 if line_nos else 2
        raise CertificateParseError(f"truncated: {len(edges)} of {comb(n, 2)} edges", last, 1)


def _certificate(head: dict, edges) -> Certificate:
    return Certificate(n=head["n"], k=head["k"], construction=head["construction"], edges=edges,
                       q=head.get("q"), metadata=head.get("metadata") or {},
                       schema_version=head["schema_version"])


def loads(text: str) -> Certificate:
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise CertificateParseError("empty certificate", 1, 1)
    head = _parse_header(lines[0])
    edges, line_nos = [], []
    for no, raw in enumerate(lines[1:], start=2):
        if not raw.strip():
            continue
        try:
            row = json.loads(raw)
        except json.JSONDecodeError as e:
            raise CertificateParseError(e.msg, no, e.colno) from None
        if not (isinstance(row, list) and len(row) == 3 and all(isinstance(x, int) for x in row)):
            raise CertificateParseError(f"expected [u, v, color], got {raw.strip()!r}", no, 1)
        edges.append(tuple(row))
        line_nos.append(no)
    _check_edges(head, edges, line_nos)
    return _certificate(head, edges)


def read(path: str | Path) -> Certificate:
    return loads(Path(path).read_text())


# ---------------------------------------------------------------------------
# Exports
# ---------------------------------------------------------------------------

def to_csv(cert: Certificate) -> str:
    df = pd.DataFrame(cert.edges, columns=["u", "v", "color"])
    return "# " + _dumps(cert.header()) + "\n" + df.to_csv(index=False)


def from_csv(text: str) -> Certificate:
    first, _, body = text.partition("\n")
    if not first.startswith("# "):
        raise CertificateParseError("CSV export must start with a '# {header}' line", 1, 1)
    head = _parse_header(first[2:])
    try:
        df = pd.read_csv(io.StringIO(body), dtype="int64")
    except (ValueError, pd.errors.ParserError) as e:
        raise CertificateParseError(f"bad CSV body: {e}", 2, 1) from None
    if list(df.columns) != ["u", "v", "color"]:
        raise CertificateParseError(f"CSV columns must be u,v,color, got {list(df.columns)}", 2, 1)
    edges = [tuple(int(x) for x in row) for row in df.itertuples(index=False)]
    # line 1 is the header, line 2 the column names
    _check_edges(head, edges, list(range(3, 3 + len(edges))))
    return _certificate(head, edges)


def pen_colors(k: int) -> list[str]:
    """k distinct Graphviz HSV colors, evenly spaced in hue."""
    hues = np.linspace(0.0, 1.0, k, endpoint=False)
    return [f"{h:.6f} 0.850 0.800" for h in hues]


def to_dot(cert: Certificate) -> str:
    pens = pen_colors(cert.k)
    out = [f"graph K{cert.n} {{", f'  label="{cert.construction}: n={cert.n}, k={cert.k}";']
    out += [f"  {v};" for v in range(cert.n)]
    for u, v, c in cert.edges:
        out.append(f'  {u} -- {v} [color="{pens[c - 1]}", label="{c}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def export(cert: Certificate, fmt: str) -> str:
    if fmt == "dot":
        return to_dot(cert)
    if fmt == "csv":
        return to_csv(cert)
    raise ValueError(f"unknown export format {fmt!r}, expected one of {EXPORT_FORMATS}")
