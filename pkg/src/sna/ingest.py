"""SNAP edge-list parsing and external/internal node id mapping."""

from __future__ import annotations

import gzip
import io
import os
from dataclasses import dataclass, field
from typing import Iterable, Iterator, TextIO

import numpy as np

SELF_LOOP = "self-loop-dropped"
DUPLICATE = "duplicate-dropped"
MALFORMED = "malformed"


class IngestError(ValueError):
    """Raised for unreadable or invalid edge-list input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class ParseWarning:
    line: int
    kind: str


@dataclass(frozen=True)
class EdgeList:
    arcs: np.ndarray  # shape (m, 2), int64, input order
    warnings: tuple[ParseWarning, ...] = ()
    distinct_nodes: int = 0

    def __len__(self) -> int:
        return len(self.arcs)

    def arc_set(self) -> set[tuple[int, int]]:
        return {(int(a), int(b)) for a, b in self.arcs}


@dataclass(frozen=True)
class NodeIdMap:
    internal_to_external: np.ndarray
    external_to_internal: dict[int, int] = field(repr=False)

    def __len__(self) -> int:
        return len(self.internal_to_external)

    def internal(self, external_id: int) -> int:
        try:
            return self.external_to_internal[int(external_id)]
        except KeyError:
            raise KeyError(f"unknown node id {external_id}") from None

    def external(self, internal_id: int) -> int:
        return int(self.internal_to_external[internal_id])


def _iter_lines(source: str | os.PathLike | TextIO | Iterable[str]) -> Iterator[str]:
    if isinstance(source, str) and ("\n" in source or not source):
        yield from io.StringIO(source)
        return
    if isinstance(source, (str, os.PathLike)):
        path = os.fspath(source)
        opener = gzip.open if path.endswith(".gz") else open
        try:
            with opener(path, "rt", encoding="utf-8", newline=None) as fh:
                yield from fh
        except FileNotFoundError:
            raise IngestError(f"file not found: {path}") from None
        except OSError as exc:
            raise IngestError(f"cannot read {path}: {exc}") from None
        return
    yield from source


def parse_edge_list(source, lenient: bool = False) -> EdgeList:
    """Parse ``FromNodeId<ws>ToNodeId`` lines into a simple arc list.

    ``source`` may be the text itself (anything containing a newline), a
    path, an open text file or any iterable of lines. Lines starting with
    ``#`` and blank lines are ignored. Self-loops and repeated arcs are
    dropped and recorded as warnings. Malformed lines raise
    :class:`IngestError` unless ``lenient`` is set.
    """
    seen: set[tuple[int, int]] = set()
    arcs: list[tuple[int, int]] = []
    warnings: list[ParseWarning] = []
    for lineno, raw in enumerate(_iter_lines(source), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            if len(fields) != 2:
                raise ValueError(f"expected 2 fields, got {len(fields)}")
            a, b = int(fields[0]), int(fields[1])
            if a < 0 or b < 0:
                raise ValueError("node ids must be non-negative")
        except ValueError as exc:
            if not lenient:
                raise IngestError(f"malformed line {line!r}: {exc}", lineno) from None
            warnings.append(ParseWarning(lineno, MALFORMED))
            continue
        if a == b:
            warnings.append(ParseWarning(lineno, SELF_LOOP))
            continue
        if (a, b) in seen:
            warnings.append(ParseWarning(lineno, DUPLICATE))
            continue
        seen.add((a, b))
        arcs.append((a, b))
    if not arcs:
        raise IngestError("input contains zero arcs")
    arr = np.asarray(arcs, dtype=np.int64).reshape(-1, 2)
    return EdgeList(arr, tuple(warnings), int(len(np.unique(arr))))


def build_id_map(edges: EdgeList) -> NodeIdMap:
    """Dense internal ids assigned in ascending external-id order."""
    if len(edges) == 0:
        raise IngestError("input contains zero arcs")
    ids = np.unique(edges.arcs)
    return NodeIdMap(ids, {int(x): i for i, x in enumerate(ids)})


def format_edge_list(arcs: Iterable[tuple[int, int]], header: str | None = None) -> str:
    out = io.StringIO()
    if header:
        for line in header.splitlines():
            out.write(f"# {line}\n")
    for a, b in arcs:
        out.write(f"{int(a)}\t{int(b)}\n")
    return out.getvalue()
