"""Table documents, the four output formats, and the on-disk cache.

A ``TableDocument`` is the portable form of any table this package
produces.  JSON is the schema of record (versioned, lossless); CSV,
LaTeX, and the pretty grid render exactly the same integers.  The cache
stores one JSON file per (group, n, kind) and treats anything it cannot
validate as a miss.
"""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile
import warnings
from dataclasses import dataclass
from pathlib import Path

SCHEMA_VERSION = 1

GROUPS = ("sym", "hyperoct")
KINDS = (
    "induced",
    "irreducible",
    "modified-induced",
    "modified-irreducible",
    "fchar",
    "branching",
    "transition",
)


class CacheWarning(UserWarning):
    """Non-fatal cache trouble; computation proceeds without the cache."""


@dataclass(frozen=True)
class TableDocument:
    group: str
    n: int
    kind: str
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    col_class_orders: tuple[int, ...] | None
    entries: tuple[tuple[int, ...], ...]
    schema_version: int = SCHEMA_VERSION

    def __post_init__(self):
        object.__setattr__(self, "row_labels", tuple(str(v) for v in self.row_labels))
        object.__setattr__(self, "col_labels", tuple(str(v) for v in self.col_labels))
        if self.col_class_orders is not None:
            object.__setattr__(
                self, "col_class_orders", tuple(int(v) for v in self.col_class_orders)
            )
        object.__setattr__(self, "entries", tuple(tuple(r) for r in self.entries))
        if self.group not in GROUPS:
            raise ValueError(f"unknown group tag {self.group!r}")
        if self.kind not in KINDS:
            raise ValueError(f"unknown table kind {self.kind!r}")
        if len(self.entries) != len(self.row_labels):
            raise ValueError("entry rows do not match row labels")
        for row in self.entries:
            if len(row) != len(self.col_labels):
                raise ValueError("entry columns do not match column labels")
            if any(not isinstance(v, int) for v in row):
                raise ValueError("entries must be integers")
        if self.col_class_orders is not None and len(self.col_class_orders) != len(
            self.col_labels
        ):
            raise ValueError("class orders do not match column labels")

    def to_json_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "group": self.group,
            "n": self.n,
            "kind": self.kind,
            "row_labels": list(self.row_labels),
            "col_labels": list(self.col_labels),
            "col_class_orders": (
                list(self.col_class_orders) if self.col_class_orders is not None else None
            ),
            "entries": [list(r) for r in self.entries],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "TableDocument":
        if not isinstance(data, dict):
            raise ValueError("document must be a JSON object")
        if data.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema version {data.get('schema_version')!r}")
        try:
            return cls(
                group=data["group"],
                n=int(data["n"]),
                kind=data["kind"],
                row_labels=tuple(data["row_labels"]),
                col_labels=tuple(data["col_labels"]),
                col_class_orders=(
                    tuple(data["col_class_orders"])
                    if data["col_class_orders"] is not None
                    else None
                ),
                entries=tuple(tuple(int(v) for v in row) for row in data["entries"]),
            )
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed document: {exc}") from exc


def document_from_character_table(table, group, n, kind) -> TableDocument:
    return TableDocument(
        group=group,
        n=n,
        kind=kind,
        row_labels=tuple(str(l) for l in table.row_labels),
        col_labels=tuple(str(l) for l in table.col_labels),
        col_class_orders=table.col_class_orders,
        entries=table.entries,
    )


def document_from_transition(trans, group, n) -> TableDocument:
    return TableDocument(
        group=group,
        n=n,
        kind="transition",
        row_labels=tuple(str(l) for l in trans.labels),
        col_labels=tuple(str(l) for l in trans.labels),
        col_class_orders=None,
        entries=trans.entries,
    )


def document_from_branching(matrix, n) -> TableDocument:
    return TableDocument(
        group="sym",
        n=2 * n,
        kind="branching",
        row_labels=tuple(str(l) for l in matrix.row_labels),
        col_labels=tuple(str(l) for l in matrix.col_labels),
        col_class_orders=None,
        entries=matrix.entries,
    )


def to_json(doc: TableDocument) -> str:
    return json.dumps(doc.to_json_dict(), indent=2) + "\n"


def from_json(text: str) -> TableDocument:
    return TableDocument.from_json_dict(json.loads(text))


def to_csv(doc: TableDocument) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([""] + list(doc.col_labels))
    if doc.col_class_orders is not None:
        writer.writerow(["#order"] + list(doc.col_class_orders))
    for label, row in zip(doc.row_labels, doc.entries):
        writer.writerow([label] + list(row))
    return buf.getvalue()


def parse_csv(text: str):
    """Inverse of :func:`to_csv` for the label/entry payload: returns
    (row_labels, col_labels, col_class_orders, entries)."""
    rows = list(csv.reader(io.StringIO(text)))
    col_labels = tuple(rows[0][1:])
    body = rows[1:]
    orders = None
    if body and body[0] and body[0][0] == "#order":
        orders = tuple(int(v) for v in body[0][1:])
        body = body[1:]
    row_labels = tuple(r[0] for r in body)
    entries = tuple(tuple(int(v) for v in r[1:]) for r in body)
    return row_labels, col_labels, orders, entries


def to_latex(doc: TableDocument) -> str:
    """A tabular with row and column labels outside the numeric grid."""
    ncols = len(doc.col_labels)
    lines = [
        r"\begin{tabular}{r|" + "r" * ncols + "}",
        " & " + " & ".join(doc.col_labels) + r" \\",
        r"\hline",
    ]
    if doc.col_class_orders is not None:
        lines.append(
            r"order & " + " & ".join(str(v) for v in doc.col_class_orders) + r" \\"
        )
        lines.append(r"\hline")
    for label, row in zip(doc.row_labels, doc.entries):
        lines.append(f"{label} & " + " & ".join(str(v) for v in row) + r" \\")
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"


def to_pretty(doc: TableDocument) -> str:
    header = [""] + list(doc.col_labels)
    body = []
    if doc.col_class_orders is not None:
        body.append(["order"] + [str(v) for v in doc.col_class_orders])
    for label, row in zip(doc.row_labels, doc.entries):
        body.append([label] + [str(v) for v in row])
    widths = [
        max(len(line[c]) for line in [header] + body) for c in range(len(header))
    ]
    out = []
    for line in [header] + body:
        out.append("  ".join(cell.rjust(w) for cell, w in zip(line, widths)).rstrip())
    return "\n".join(out) + "\n"


def render(doc: TableDocument, fmt: str) -> str:
    if fmt == "json":
        return to_json(doc)
    if fmt == "csv":
        return to_csv(doc)
    if fmt == "latex":
        return to_latex(doc)
    if fmt == "pretty":
        return to_pretty(doc)
    raise ValueError(f"unknown format {fmt!r}")


CACHE_ENV_VAR = "HOBCHAR_CACHE_DIR"


class TableCache:
    """One JSON file per (group, n, kind); corruption counts as a miss."""

    def __init__(self, root):
        self.root = Path(root)

    def path(self, group: str, n: int, kind: str) -> Path:
        return self.root / f"{group}-{n}-{kind}.json"

    def lookup(self, group: str, n: int, kind: str) -> TableDocument | None:
        path = self.path(group, n, kind)
        try:
            text = path.read_text()
        except FileNotFoundError:
            return None
        except OSError as exc:
            warnings.warn(f"cache read failed for {path}: {exc}", CacheWarning)
            return None
        try:
            doc = from_json(text)
        except (ValueError, json.JSONDecodeError) as exc:
            warnings.warn(f"ignoring corrupt cache file {path}: {exc}", CacheWarning)
            return None
        if (doc.group, doc.n, doc.kind) != (group, n, kind):
            warnings.warn(
                f"cache file {path} does not match its key; ignoring", CacheWarning
            )
            return None
        return doc

    def store(self, doc: TableDocument) -> None:
        path = self.path(doc.group, doc.n, doc.kind)
        try:
            self.root.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
            try:
                with os.fdopen(fd, "w") as fh:
                    fh.write(to_json(doc))
                os.replace(tmp, path)
            except BaseException:
                try:
                    os.unlink(tmp)
                except OSError:
                    pass
                raise
        except OSError as exc:
            warnings.warn(f"cache write failed for {path}: {exc}", CacheWarning)
