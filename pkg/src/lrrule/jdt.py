"""Jeu de taquin: slides, rectification, tableau switching, dual equivalence."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .errors import PreconditionError, ShapeMismatchError
from .shapes import (Cell, SkewShape, add_cell, addable_cells, diamond, part, remove_cell,
                     removable_cells)
from .tableaux import (ChainTableau, SkewTableau, as_tableau, destandardise, standardise,
                       weight)


@dataclass(frozen=True)
class SlideTrace:
    """Inward slides performed by :func:`rectify`: ``(start, end, shape after)``."""

    steps: tuple = ()

    def __len__(self):
        return len(self.steps)

    def shapes(self) -> list:
        return [shape for _, _, shape in self.steps]


def _rewrap(original, result: SkewTableau):
    if isinstance(original, ChainTableau):
        return ChainTableau.from_labels(result)
    return result


def inner_corners(T) -> list:
    """Cells into which an inward slide may start."""
    return removable_cells(as_tableau(T).inner)


def outer_cocorners(T) -> list:
    """Cells into which an outward slide may start."""
    return addable_cells(as_tableau(T).outer)


def _inward(T: SkewTableau, s) -> tuple:
    shape = T.shape
    s = Cell(*s)
    if s not in removable_cells(shape.inner):
        raise PreconditionError(f"{tuple(s)} is not an inner corner of {list(shape.inner)}")
    entries = T.to_dict()
    i, j = s
    while True:
        right = entries.get((i, j + 1))
        below = entries.get((i + 1, j))
        if right is None and below is None:
            break
        if below is not None and (right is None or below <= right):
            entries[i, j] = entries.pop((i + 1, j))
            i += 1
        else:
            entries[i, j] = entries.pop((i, j + 1))
            j += 1
    end = Cell(i, j)
    new_shape = SkewShape(remove_cell(shape.outer, end), remove_cell(shape.inner, s))
    return SkewTableau.from_cells(new_shape, entries), end


def _outward(T: SkewTableau, s) -> tuple:
    shape = T.shape
    s = Cell(*s)
    if s not in addable_cells(shape.outer):
        raise PreconditionError(f"{tuple(s)} is not an outer co-corner of {list(shape.outer)}")
    entries = T.to_dict()
    i, j = s
    while True:
        left = entries.get((i, j - 1))
        above = entries.get((i - 1, j))
        if left is None and above is None:
            break
        if above is not None and (left is None or above >= left):
            entries[i, j] = entries.pop((i - 1, j))
            i -= 1
        else:
            entries[i, j] = entries.pop((i, j - 1))
            j -= 1
    end = Cell(i, j)
    new_shape = SkewShape(add_cell(shape.outer, s), add_cell(shape.inner, end))
    return SkewTableau.from_cells(new_shape, entries), end


def inward_slide(T, s) -> tuple:
    """Slide into the inner corner ``s``; returns ``(tableau, vacated cell)``.

    The hole is filled from the smaller of its right and lower neighbours,
    the lower one on a tie.
    """
    result, end = _inward(as_tableau(T), s)
    return _rewrap(T, result), end


def outward_slide(T, s) -> tuple:
    """Slide into the outer co-corner ``s``; inverse of :func:`inward_slide`."""
    result, end = _outward(as_tableau(T), s)
    return _rewrap(T, result), end


def default_corner(corners):
    """Largest diagonal index, then smallest row."""
    return min(corners, key=lambda c: (-(c[1] - c[0]), c[0]))


def rectify(T, policy: Optional[Callable] = None) -> tuple:
    """Inward slides until partition shape; returns ``(tableau, SlideTrace)``."""
    policy = policy or default_corner
    current = as_tableau(T)
    steps = []
    while current.inner:
        s = Cell(*policy(removable_cells(current.inner)))
        current, end = _inward(current, s)
        steps.append((s, end, current.shape))
    return _rewrap(T, current), SlideTrace(tuple(steps))


def _switch_tableaux(S: SkewTableau, T: SkewTableau) -> tuple:
    if S.outer != T.inner:
        raise ShapeMismatchError(
            f"outer shape {list(S.outer)} of the inner tableau differs from "
            f"inner shape {list(T.inner)} of the outer tableau")
    order = sorted(S.items(), key=lambda cx: (cx[1], cx[0].col), reverse=True)
    vacated = {}
    current = T
    for cell, x in order:
        current, end = _inward(current, cell)
        vacated[end] = x
    S2 = SkewTableau.from_cells(SkewShape(T.outer, current.outer), vacated)
    return current, S2


def switch(S, T) -> tuple:
    """Tableau switching ``X(S, T) = (T', S')``.

    ``S`` has shape ``μ/ν`` and ``T`` shape ``λ/μ``.  The cells of ``S`` are
    processed from last to first (by standardisation order); each one is a
    hole into which ``T`` slides inward, and the vacated cell receives the
    entry of ``S``.  Works for standard (chain) and semistandard inputs.
    """
    T2, S2 = _switch_tableaux(as_tableau(S), as_tableau(T))
    return _rewrap(T, T2), _rewrap(S, S2)


def switch_by_standardisation(S: SkewTableau, T: SkewTableau) -> tuple:
    """Semistandard switching defined through standardisations and weights."""
    T2c, S2c = switch(standardise(S), standardise(T))
    return destandardise(T2c, weight(T)), destandardise(S2c, weight(S))


def concat(T: ChainTableau, U: ChainTableau) -> ChainTableau:
    """``T|U``: the joined chain."""
    if T.outer != U.inner:
        raise ShapeMismatchError(f"cannot join a chain ending at {list(T.outer)} "
                                 f"with one starting at {list(U.inner)}")
    return ChainTableau(T.chain + U.chain[1:])


def restrict_chain(S: ChainTableau, start: int, stop: int) -> ChainTableau:
    return ChainTableau(S.chain[start:stop + 1])


def dual_equivalent(S1, S2) -> bool:
    """Apply the same inward slides to both; dual equivalent iff the shapes
    never differ on the way to partition shape."""
    a, b = as_tableau(S1), as_tableau(S2)
    if a.shape != b.shape:
        raise ShapeMismatchError("dual equivalence needs tableaux of equal shape")
    while a.inner:
        s = default_corner(removable_cells(a.inner))
        a, _ = _inward(a, s)
        b, _ = _inward(b, s)
        if a.shape != b.shape:
            return False
    return True


def jdt_equivalent(S1, S2) -> bool:
    return rectify(as_tableau(S1))[0] == rectify(as_tableau(S2))[0]


def transport(trace: SlideTrace, P):
    """Undo the slides of ``trace`` on ``P`` by outward slides, last first."""
    current = as_tableau(P)
    for start, end, shape in reversed(trace.steps):
        if current.shape != shape:
            raise ShapeMismatchError(f"tableau of shape {current.shape} does not fit trace "
                                     f"step with shape {shape}")
        current, back = _outward(current, end)
        if back != start:
            raise ShapeMismatchError(f"outward slide from {tuple(end)} ended at {tuple(back)}, "
                                     f"expected {tuple(start)}")
    return current


def phi(L, P):
    """The tableau of shape ``shape(L)`` that rectifies to ``P`` and is dual
    equivalent to ``L``, found by replaying the rectification of ``L`` on
    ``P`` in reverse."""
    rect, trace = rectify(as_tableau(L))
    P_t = as_tableau(P)
    if P_t.inner or P_t.outer != rect.outer:
        raise ShapeMismatchError(f"P must have shape {list(rect.outer)}, got {P_t.shape}")
    return _rewrap(P, transport(trace, P_t))


def phi_by_switching(L: ChainTableau, P: ChainTableau, Q: ChainTableau) -> ChainTableau:
    """The switching construction: ``X(Q, L) = (C, S)``, ``X(P, S) = (Q, T)``."""
    if Q.outer != L.inner or Q.inner:
        raise ShapeMismatchError("Q must be a standard Young tableau of the inner shape of L")
    _, S = switch(Q, L)
    Q2, T = switch(P, S)
    if Q2 != Q:
        raise ShapeMismatchError("switching did not return Q")
    return T


def diamond_tableau(S: ChainTableau, rows: int, cols: int) -> ChainTableau:
    """Complement every partition of the chain in the rectangle and reverse."""
    return ChainTableau(tuple(diamond(p, rows, cols) for p in reversed(S.chain)))


def switching_family(S, T) -> list:
    """The tableau switching family of ``(S, T)`` as a grid of partitions.

    Row ``i`` is the chain of ``T`` after the cells of ``S`` with position
    at least ``i`` (in standardisation order) have been switched past it,
    prefixed by the first ``i`` partitions of the chain of ``S``.
    """
    Sc = S if isinstance(S, ChainTableau) else standardise(S)
    Tc = T if isinstance(T, ChainTableau) else standardise(T)
    cells = Sc.added_cells()
    rows = [None] * (len(cells) + 1)
    current = Tc.label_tableau()
    rows[len(cells)] = ChainTableau.from_labels(current).chain
    for k in reversed(range(len(cells))):
        current, _ = _inward(current, cells[k])
        rows[k] = ChainTableau.from_labels(current).chain
    return [list(r) for r in rows]


def _is_domino(big, small) -> bool:
    diff = [(i, j) for i in range(len(big)) for j in range(part(small, i), big[i])]
    if len(diff) != 2:
        return False
    (i1, j1), (i2, j2) = diff
    return (i1 == i2 and abs(j1 - j2) == 1) or (j1 == j2 and abs(i1 - i2) == 1)


def is_switching_family(grid) -> bool:
    """Rows and columns are chains, and the non-domino squares switch."""
    try:
        for row in grid:
            ChainTableau(tuple(row))
        for col in zip(*grid):
            ChainTableau(tuple(col))
    except PreconditionError:
        return False
    for i in range(len(grid) - 1):
        for j in range(len(grid[0]) - 1):
            if not _is_domino(grid[i + 1][j + 1], grid[i][j]) and grid[i][j + 1] == grid[i + 1][j]:
                return False
    return True
