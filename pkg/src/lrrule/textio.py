"""Text forms of partitions, skew shapes, tableaux, words and traces.

Tableau grammar: rows separated by ``|``, each row ``o:e1,e2,...`` where
``o`` is the number of skipped (inner) columns, e.g.
``4:0,0|2:0,1,1|1:0,1,2,2|0:0,1,3|0:2,4``.  The empty string is the empty
tableau.
"""

from __future__ import annotations

import re

from .errors import LRError, ParseError
from .shapes import SkewShape, format_partition, format_skew_shape, partition
from .tableaux import ChainTableau, SkewTableau, as_tableau

__all__ = [
    "parse_partition", "format_partition", "parse_skew_shape", "format_skew_shape",
    "parse_tableau", "format_tableau", "parse_word", "format_word",
    "parse_chain", "format_trace", "parse_weight",
]

_INT = re.compile(r"\s*(\d+)\s*")


def _ints(text: str, offset: int, sep: str = ",") -> list:
    if not text.strip():
        return []
    out = []
    pos = 0
    for piece in text.split(sep):
        m = _INT.fullmatch(piece)
        if not m:
            raise ParseError(f"expected a non-negative integer, got {piece.strip()!r}", offset + pos)
        out.append(int(m.group(1)))
        pos += len(piece) + 1
    return out


def parse_partition(text: str) -> tuple:
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ParseError(f"partition must look like [4,2,1], got {text!r}", 0)
    parts = _ints(s[1:-1], 1)
    try:
        return partition(parts)
    except LRError as exc:
        raise ParseError(str(exc), 0) from None


def parse_weight(text: str) -> tuple:
    """A weight vector such as ``[1,0,2]``; need not be decreasing."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ParseError(f"weight must look like [1,0,2], got {text!r}", 0)
    return tuple(_ints(s[1:-1], 1))


def parse_skew_shape(text: str) -> SkewShape:
    outer, sep, inner = text.partition("/")
    lam = parse_partition(outer)
    mu = parse_partition(inner) if sep else ()
    try:
        return SkewShape(lam, mu)
    except LRError as exc:
        raise ParseError(str(exc), len(outer)) from None


def parse_tableau(text: str) -> SkewTableau:
    """Parse the row grammar; semistandardness is validated."""
    text = text.strip()
    if not text:
        return SkewTableau(SkewShape((), ()), ())
    inner, outer, rows = [], [], []
    pos = 0
    for raw in text.split("|"):
        head, colon, body = raw.partition(":")
        if not colon:
            raise ParseError(f"row {raw!r} lacks ':'", pos)
        m = _INT.fullmatch(head)
        if not m:
            raise ParseError(f"bad row offset {head!r}", pos)
        o = int(m.group(1))
        entries = _ints(body, pos + len(head) + 1)
        inner.append(o)
        outer.append(o + len(entries))
        rows.append(tuple(entries))
        pos += len(raw) + 1
    try:
        shape = SkewShape(tuple(outer), tuple(inner))
    except LRError as exc:
        raise ParseError(f"rows do not form a skew shape: {exc}", 0) from None
    rows = rows[:shape.rows]
    return SkewTableau(shape, tuple(rows))


def format_tableau(T) -> str:
    T = as_tableau(T)
    out = []
    for i, r in enumerate(T.rows):
        o = T.inner[i] if i < len(T.inner) else 0
        out.append(f"{o}:" + ",".join(str(x) for x in r))
    return "|".join(out)


def parse_chain(text: str) -> ChainTableau:
    """A standard tableau given by its labels (distinct entries)."""
    return ChainTableau.from_labels(parse_tableau(text))


def parse_word(text: str) -> tuple:
    pieces = text.replace(",", " ").split()
    out = []
    pos = 0
    for p in pieces:
        if not p.isdigit():
            raise ParseError(f"bad letter {p!r}", pos)
        out.append(int(p))
        pos += len(p) + 1
    return tuple(out)


def format_word(word) -> str:
    return " ".join(str(x) for x in word)


def format_trace(trace) -> str:
    return " ".join(f"{kind}_{i}@{pos}" for kind, i, pos in trace.steps)
