"""Partitions, skew shapes and the shape constructions used throughout.

Partitions are plain tuples of positive integers in weakly decreasing order
(trailing zeros trimmed); out of range parts read as zero.  Coordinates are
0-based, ``(row, column)`` in matrix orientation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import zip_longest
from typing import Iterable, Iterator, NamedTuple

from .errors import PreconditionError

Partition = tuple


def partition(parts: Iterable[int] = ()) -> tuple:
    """Normalise ``parts`` to a trimmed partition tuple, validating it."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise PreconditionError(f"negative part in {list(parts)}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise PreconditionError(f"{list(parts)} is not weakly decreasing")
    end = len(parts)
    while end and parts[end - 1] == 0:
        end -= 1
    return parts[:end]


def is_partition(parts: Iterable[int]) -> bool:
    parts = tuple(parts)
    return all(p >= 0 for p in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


def part(lam, i: int) -> int:
    return lam[i] if i < len(lam) else 0


def size(lam) -> int:
    return sum(lam)


def partitions(d: int, max_parts: int | None = None, max_part: int | None = None) -> Iterator[tuple]:
    """Partitions of ``d`` in decreasing lexicographic order."""
    if max_part is None:
        max_part = d
    if d == 0:
        yield ()
        return
    if max_parts == 0:
        return
    rest = None if max_parts is None else max_parts - 1
    for first in range(min(d, max_part), 0, -1):
        for tail in partitions(d - first, rest, first):
            yield (first,) + tail


class Cell(NamedTuple):
    row: int
    col: int

    @property
    def diagonal(self) -> int:
        return self.col - self.row


@dataclass(frozen=True)
class SkewShape:
    outer: tuple
    inner: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "outer", partition(self.outer))
        object.__setattr__(self, "inner", partition(self.inner))
        if not contains(self.outer, self.inner):
            raise PreconditionError(
                f"{list(self.inner)} is not contained in {list(self.outer)}")

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def __len__(self):
        return self.size

    @property
    def rows(self) -> int:
        return len(self.outer)

    def row_range(self, i: int) -> range:
        return range(part(self.inner, i), part(self.outer, i))

    def __contains__(self, cell) -> bool:
        i, j = cell
        return i >= 0 and part(self.inner, i) <= j < part(self.outer, i)

    def cells(self) -> list:
        return cells(self)

    def is_partition_shape(self) -> bool:
        return not self.inner

    def column_lengths(self) -> dict:
        counts: dict = {}
        for _, j in cells(self):
            counts[j] = counts.get(j, 0) + 1
        return counts

    def __str__(self):
        return format_skew_shape(self)


def as_shape(chi) -> SkewShape:
    """Accept a SkewShape or a bare partition (read as ``λ/0``)."""
    if isinstance(chi, SkewShape):
        return chi
    return SkewShape(tuple(chi), ())


def contains(outer, inner) -> bool:
    """Young-lattice order: ``inner ⊂ outer`` cell-wise."""
    return all(a >= b for a, b in zip_longest(outer, inner, fillvalue=0))


def dominance_leq(a, b) -> bool:
    """``a ⪯ b``: equal totals and every prefix sum of ``a`` at most that of ``b``."""
    if sum(a) != sum(b):
        return False
    sa = sb = 0
    for x, y in zip_longest(a, b, fillvalue=0):
        sa += x
        sb += y
        if sa > sb:
            return False
    return True


def cells(chi) -> list:
    """Cells of the skew diagram, row-major."""
    chi = as_shape(chi)
    return [Cell(i, j) for i in range(chi.rows) for j in chi.row_range(i)]


def product_shape(lam, mu) -> SkewShape:
    """Canonical skew shape representing ``λ * μ``: the ``μ`` copy sits above
    and strictly to the right of the ``λ`` copy."""
    lam, mu = partition(lam), partition(mu)
    if not mu:
        return SkewShape(lam, ())
    c = part(lam, 0)
    outer = tuple(m + c for m in mu) + lam
    inner = (c,) * len(mu)
    return SkewShape(outer, inner)


def diamond(lam, rows: int, cols: int) -> tuple:
    """Complement of ``lam`` inside the ``rows × cols`` rectangle, rotated."""
    lam = partition(lam)
    if len(lam) > rows or part(lam, 0) > cols:
        raise PreconditionError(f"{list(lam)} does not fit in a {rows}x{cols} rectangle")
    return partition(cols - part(lam, rows - 1 - i) for i in range(rows))


def is_horizontal_strip(chi) -> bool:
    chi = as_shape(chi)
    return all(part(chi.inner, i) >= part(chi.outer, i + 1) for i in range(chi.rows))


def addable_cells(lam) -> list:
    """Cells that can be added to ``lam`` keeping it a partition."""
    out = []
    for i in range(len(lam) + 1):
        j = part(lam, i)
        if i == 0 or part(lam, i - 1) > j:
            out.append(Cell(i, j))
    return out


def removable_cells(lam) -> list:
    """Corners of ``lam``: cells whose removal leaves a partition."""
    return [Cell(i, lam[i] - 1) for i in range(len(lam)) if part(lam, i + 1) < lam[i]]


def add_cell(lam, cell) -> tuple:
    i, j = cell
    parts = list(lam) + [0] * (i + 1 - len(lam))
    if parts[i] != j:
        raise PreconditionError(f"cannot add {tuple(cell)} to {list(lam)}")
    parts[i] += 1
    return partition(parts)


def remove_cell(lam, cell) -> tuple:
    i, j = cell
    if part(lam, i) != j + 1:
        raise PreconditionError(f"cannot remove {tuple(cell)} from {list(lam)}")
    parts = list(lam)
    parts[i] -= 1
    return partition(parts)


def format_partition(lam) -> str:
    return "[" + ",".join(str(p) for p in lam) + "]"


def format_skew_shape(chi) -> str:
    chi = as_shape(chi)
    if not chi.inner:
        return format_partition(chi.outer)
    return format_partition(chi.outer) + "/" + format_partition(chi.inner)
