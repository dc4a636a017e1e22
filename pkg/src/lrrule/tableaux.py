"""Skew semistandard tableaux, standard tableaux as Young-lattice chains,
reading words, companions and enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import (DominanceError, IncompatibleWeightError, NotSemistandardError,
                     PreconditionError)
from .shapes import (Cell, SkewShape, add_cell, addable_cells, as_shape, cells, part,
                     partition)

SEMITIC = "semitic"
KANJI = "kanji"


@dataclass(frozen=True)
class SkewTableau:
    """A skew shape with one letter per cell.

    ``rows[i]`` lists the entries of row ``i`` from column ``inner[i]`` on.
    Rows weakly increase and columns strictly increase; this is checked on
    construction.
    """

    shape: SkewShape
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        while rows and not rows[-1] and len(rows) > self.shape.rows:
            rows = rows[:-1]
        object.__setattr__(self, "rows", rows)
        shape = self.shape
        if len(rows) != shape.rows or any(
                len(r) != len(shape.row_range(i)) for i, r in enumerate(rows)):
            raise PreconditionError("entries do not match the shape")
        for i, r in enumerate(rows):
            lo = part(shape.inner, i)
            for k, x in enumerate(r):
                j = lo + k
                if x < 0:
                    raise NotSemistandardError(f"negative entry at {(i, j)}", Cell(i, j))
                if k and r[k - 1] > x:
                    raise NotSemistandardError(f"row decreases at {(i, j)}", Cell(i, j))
                if i and (i - 1, j) in shape and self[i - 1, j] >= x:
                    raise NotSemistandardError(
                        f"column does not increase at {(i, j)}", Cell(i, j))

    @classmethod
    def from_cells(cls, shape, mapping: Mapping) -> "SkewTableau":
        shape = as_shape(shape)
        rows = tuple(tuple(mapping[i, j] for j in shape.row_range(i)) for i in range(shape.rows))
        return cls(shape, rows)

    def __getitem__(self, cell) -> int:
        i, j = cell
        return self.rows[i][j - part(self.shape.inner, i)]

    def get(self, cell, default=None):
        return self[cell] if cell in self.shape else default

    def items(self):
        for i, r in enumerate(self.rows):
            lo = part(self.shape.inner, i)
            for k, x in enumerate(r):
                yield Cell(i, lo + k), x

    def to_dict(self) -> dict:
        return dict(self.items())

    def cells(self) -> list:
        return cells(self.shape)

    def __len__(self):
        return self.shape.size

    @property
    def outer(self):
        return self.shape.outer

    @property
    def inner(self):
        return self.shape.inner

    def max_entry(self) -> int:
        return max((x for r in self.rows for x in r), default=-1)

    def __str__(self):
        from .textio import format_tableau
        return format_tableau(self)


@dataclass(frozen=True)
class ChainTableau:
    """A skew standard tableau: a saturated chain ``μ ⊂ … ⊂ λ``."""

    chain: tuple

    def __post_init__(self):
        chain = tuple(partition(p) for p in self.chain)
        if not chain:
            raise PreconditionError("a chain needs at least one partition")
        for a, b in zip(chain, chain[1:]):
            if sum(b) != sum(a) + 1 or _added_cell(a, b) is None:
                raise PreconditionError(f"{list(a)} -> {list(b)} does not add one cell")
        object.__setattr__(self, "chain", chain)

    @property
    def inner(self):
        return self.chain[0]

    @property
    def outer(self):
        return self.chain[-1]

    @property
    def shape(self) -> SkewShape:
        return SkewShape(self.outer, self.inner)

    def __len__(self):
        return len(self.chain) - 1

    def added_cells(self) -> list:
        """Cells in the order they are added."""
        return [_added_cell(a, b) for a, b in zip(self.chain, self.chain[1:])]

    def label_tableau(self) -> SkewTableau:
        return SkewTableau.from_cells(
            self.shape, {c: k for k, c in enumerate(self.added_cells())})

    @classmethod
    def _trusted(cls, chain: tuple) -> "ChainTableau":
        # for chains built one addable cell at a time, already validated
        obj = object.__new__(cls)
        object.__setattr__(obj, "chain", chain)
        return obj

    @classmethod
    def from_cells(cls, inner, order) -> "ChainTableau":
        chain = [partition(inner)]
        for c in order:
            chain.append(add_cell(chain[-1], c))
        return cls(tuple(chain))

    @classmethod
    def from_labels(cls, T: SkewTableau) -> "ChainTableau":
        """Chain of a tableau with distinct entries (added in entry order)."""
        entries = sorted(T.items(), key=lambda cx: cx[1])
        if len({x for _, x in entries}) != len(entries):
            raise PreconditionError("labels of a standard tableau must be distinct")
        return cls.from_cells(T.inner, [c for c, _ in entries])

    def __str__(self):
        return str(self.label_tableau())


def _added_cell(a, b):
    diff = [i for i in range(len(b)) if part(b, i) != part(a, i)]
    if len(diff) != 1:
        return None
    i = diff[0]
    if b[i] != part(a, i) + 1:
        return None
    return Cell(i, part(a, i))


def as_tableau(x) -> SkewTableau:
    return x.label_tableau() if isinstance(x, ChainTableau) else x


def empty_tableau(shape=()) -> SkewTableau:
    """The tableau with no cells on the (empty) skew shape ``shape/shape``."""
    shape = partition(shape)
    return SkewTableau(SkewShape(shape, shape), ((),) * len(shape))


def weight(T) -> tuple:
    T = as_tableau(T)
    counts = [0] * (T.max_entry() + 1)
    for _, x in T.items():
        counts[x] += 1
    return tuple(counts)


def word_weight(word, n: int = 0) -> tuple:
    counts = [0] * max(n, max(word, default=-1) + 1)
    for x in word:
        counts[x] += 1
    return tuple(counts)


def reading_cells(shape, order: str = SEMITIC) -> list:
    """Cells of ``shape`` in a valid reading order.

    Semitic: rows top to bottom, each right to left.  Kanji: columns right
    to left, each top to bottom.
    """
    shape = as_shape(shape)
    if order == SEMITIC:
        return [Cell(i, j) for i in range(shape.rows) for j in reversed(shape.row_range(i))]
    if order == KANJI:
        cs = cells(shape)
        return sorted(cs, key=lambda c: (-c.col, c.row))
    raise PreconditionError(f"unknown reading order {order!r}")


def reading_word(T, order: str = SEMITIC) -> tuple:
    T = as_tableau(T)
    return tuple(T[c] for c in reading_cells(T.shape, order))


def is_valid_reading_order(shape, order_cells) -> bool:
    """Every cell weakly above and weakly right of ``c`` precedes ``c``."""
    position = {c: k for k, c in enumerate(order_cells)}
    if set(position) != set(cells(shape)):
        return False
    for (i, j), k in position.items():
        for (i2, j2), k2 in position.items():
            if (i2, j2) != (i, j) and i2 <= i and j2 >= j and k2 > k:
                return False
    return True


def standardise(T: SkewTableau) -> ChainTableau:
    """Chain adding cells by increasing entry, ties by increasing column."""
    order = sorted(T.items(), key=lambda cx: (cx[1], cx[0].col))
    return ChainTableau.from_cells(T.inner, [c for c, _ in order])


def destandardise(S: ChainTableau, alpha) -> SkewTableau:
    """The unique tableau with standardisation ``S`` and weight ``alpha``."""
    alpha = tuple(alpha)
    if sum(alpha) != len(S):
        raise IncompatibleWeightError(f"weight {list(alpha)} has size {sum(alpha)}, chain has {len(S)}")
    letters = [k for k, a in enumerate(alpha) for _ in range(a)]
    mapping = dict(zip(S.added_cells(), letters))
    try:
        T = SkewTableau.from_cells(S.shape, mapping)
    except NotSemistandardError as exc:
        raise IncompatibleWeightError(f"chain is not compatible with weight {list(alpha)}: {exc}") from None
    if standardise(T) != S:
        raise IncompatibleWeightError(f"chain is not compatible with weight {list(alpha)}")
    return T


def canonical(lam) -> SkewTableau:
    """The Young tableau of shape ``lam`` with every entry of row ``i`` equal to ``i``."""
    lam = partition(lam)
    return SkewTableau(SkewShape(lam), tuple((i,) * p for i, p in enumerate(lam)))


def _pad(v, n):
    return list(v) + [0] * (n - len(v))


def _dominance_walk(T: SkewTableau, kappa):
    """Run the lattice test over ``T`` starting from ``kappa``.

    Yields ``(cell, letter, column)`` where ``column`` is the position taken
    in row ``letter`` of the companion; raises DominanceError on failure.
    """
    kappa = partition(kappa)
    alpha = _pad(kappa, max(len(kappa), T.max_entry() + 1))
    for cell in reading_cells(T.shape, SEMITIC):
        l = T[cell]
        if l > 0 and alpha[l] + 1 > alpha[l - 1]:
            raise DominanceError(
                f"not {list(kappa)}-dominant: weight leaves the partitions at {tuple(cell)}", cell)
        yield cell, l, alpha[l]
        alpha[l] += 1


def is_dominant_for(T, kappa=()) -> bool:
    try:
        for _ in _dominance_walk(as_tableau(T), kappa):
            pass
    except DominanceError:
        return False
    return True


def companion(T, kappa=()) -> SkewTableau:
    """The companion tableau of shape ``(κ + wt T)/κ``.

    Row ``l`` of the result holds, for each row ``k`` of ``T``, as many
    letters ``k`` as row ``k`` of ``T`` has letters ``l``.
    """
    T = as_tableau(T)
    kappa = partition(kappa)
    mapping = {}
    for (i, _), l, col in _dominance_walk(T, kappa):
        mapping[l, col] = i
    wt = weight(T)
    n = max(len(kappa), len(wt))
    outer = tuple(a + b for a, b in zip(_pad(kappa, n), _pad(wt, n)))
    return SkewTableau.from_cells(SkewShape(outer, kappa), mapping)


def row_counts(T) -> dict:
    """``{(k, l): number of letters l in row k}``."""
    counts: dict = {}
    for (i, _), x in T.items():
        counts[i, x] = counts.get((i, x), 0) + 1
    return counts


def is_lr_tableau(T, nu=None) -> bool:
    T = as_tableau(T)
    if nu is not None and weight(T) != partition(nu):
        return False
    return is_dominant_for(T, ())


def _column_below(shape: SkewShape) -> dict:
    """Number of cells strictly below each cell within its column."""
    below = {}
    for i in reversed(range(shape.rows)):
        for j in shape.row_range(i):
            below[i, j] = below.get((i + 1, j), -1) + 1 if (i + 1, j) in shape else 0
    return below


def enumerate_tableaux(chi, n: int, weight_bound=None) -> Iterator[SkewTableau]:
    """All of ``Tab(χ, n)`` in lexicographic order of the Semitic word.

    ``weight_bound`` (optional) caps the number of occurrences of each
    letter, which prunes the search for fixed-weight counts.
    """
    shape = as_shape(chi)
    order = reading_cells(shape, SEMITIC)
    below = _column_below(shape)
    if any(b + 1 > n for b in below.values()):
        return
    cap = None if weight_bound is None else _pad(weight_bound, n)
    used = [0] * n
    filling: dict = {}

    def rec(k):
        if k == len(order):
            yield SkewTableau.from_cells(shape, filling)
            return
        i, j = order[k]
        lo = filling[i - 1, j] + 1 if (i - 1, j) in filling else 0
        hi = min(filling.get((i, j + 1), n - 1), n - 1 - below[i, j])
        for e in range(lo, hi + 1):
            if cap is not None and used[e] >= cap[e]:
                continue
            filling[i, j] = e
            used[e] += 1
            yield from rec(k + 1)
            used[e] -= 1
        filling.pop((i, j), None)

    yield from rec(0)


class SearchStats:
    """Counters filled in by :func:`enumerate_lr` (used to audit the search)."""

    def __init__(self):
        self.nodes = 0
        self.dead_ends = 0
        self.leaves = 0


def enumerate_lr(chi, nu=None, n=None, stats: SearchStats | None = None) -> Iterator[SkewTableau]:
    """Littlewood-Richardson tableaux of shape ``χ``.

    Cells are filled in Semitic order; a letter is admissible when the
    running weight stays a partition, the row and column conditions hold,
    and (with ``n``) the rest of the column can still be completed below
    ``n``.  With ``nu`` given only tableaux of weight ``nu`` are produced.
    Output is in lexicographic order of the Semitic word.
    """
    shape = as_shape(chi)
    order = reading_cells(shape, SEMITIC)
    below = _column_below(shape)
    if nu is not None:
        nu = partition(nu)
        if sum(nu) != shape.size:
            return
    if n is not None and any(b + 1 > n for b in below.values()):
        return
    limit = shape.size if n is None else n
    alpha = [0] * (limit + 1)
    filling: dict = {}

    def rec(k):
        if stats is not None:
            stats.nodes += 1
        if k == len(order):
            if stats is not None:
                stats.leaves += 1
            yield SkewTableau.from_cells(shape, filling)
            return
        i, j = order[k]
        lo = filling[i - 1, j] + 1 if (i - 1, j) in filling else 0
        hi = filling.get((i, j + 1), limit - 1)
        if n is not None:
            hi = min(hi, n - 1 - below[i, j])
        found = False
        for e in range(lo, hi + 1):
            if e and alpha[e] >= alpha[e - 1]:
                continue
            if nu is not None and alpha[e] >= part(nu, e):
                continue
            found = True
            filling[i, j] = e
            alpha[e] += 1
            yield from rec(k + 1)
            alpha[e] -= 1
        filling.pop((i, j), None)
        if not found and stats is not None:
            stats.dead_ends += 1

    yield from rec(0)


def enumerate_standard(chi) -> Iterator[ChainTableau]:
    """All saturated chains from the inner to the outer partition."""
    shape = as_shape(chi)
    outer = shape.outer
    target = shape.size
    chain = [shape.inner]

    def rec():
        if len(chain) - 1 == target:
            yield ChainTableau._trusted(tuple(chain))
            return
        lam = chain[-1]
        for i in range(len(lam) + 1):
            j = part(lam, i)
            if j < part(outer, i) and (i == 0 or lam[i - 1] > j):
                chain.append(lam[:i] + (j + 1,) + lam[i + 1:])
                yield from rec()
                chain.pop()

    yield from rec()


def count_standard(chi) -> int:
    """``|StT(χ)|`` by memoised path counting (no enumeration)."""
    shape = as_shape(chi)
    outer = shape.outer
    memo: dict = {}

    def count(lam):
        if lam == outer:
            return 1
        if lam not in memo:
            memo[lam] = sum(count(add_cell(lam, c)) for c in addable_cells(lam)
                            if c.col < part(outer, c.row))
        return memo[lam]

    return count(shape.inner)


def bender_knuth(T: SkewTableau, k: int) -> SkewTableau:
    """Bender-Knuth involution exchanging the roles of letters ``k`` and ``k+1``."""
    mapping = T.to_dict()
    for i, r in enumerate(T.rows):
        lo = part(T.inner, i)
        free = []
        for off, x in enumerate(r):
            j = lo + off
            if x == k and mapping.get((i + 1, j)) == k + 1:
                continue
            if x == k + 1 and mapping.get((i - 1, j)) == k:
                continue
            if x in (k, k + 1):
                free.append(j)
        if not free:
            continue
        r_count = sum(1 for j in free if mapping[i, j] == k)
        s_count = len(free) - r_count
        for t, j in enumerate(free):
            mapping[i, j] = k if t < s_count else k + 1
    return SkewTableau.from_cells(T.shape, mapping)
