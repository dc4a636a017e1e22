"""Random generators and golden data used by several test modules."""

import random

from hypothesis import strategies as st

from lrrule.shapes import SkewShape, add_cell, addable_cells, partition
from lrrule.tableaux import ChainTableau, SkewTableau

COPEX = (4, 0, 1, 5, 2, 1, 3, 5, 0, 1, 4, 2, 0, 0, 1, 2, 3, 3, 4)
L_TEXT = "4:0,0|2:0,1,1|1:0,1,2,2|0:0,1,3|0:2,4"
T_TEXT = "3:0,1|1:0,1,1,3|0:0,2,2,3|0:1,4,4,5|0:3,5"

# A grid of slides and raisings, rows from top to bottom, each row left to right.  Columns are
# related by inward slides (right to left), rows by raising (upwards).
SLIDE_GRID = [
    ["0:0,0,0,0,0|0:1,1,1,1,1|0:2,2,2,2|0:3|0:4",
     "1:0,0,0,0|0:0,1,1,1,1|0:1,2,2,2|0:2,3|0:4",
     "1:0,0,0,0|1:1,1,1,1|0:0,2,2,2|0:1,3|0:2,4",
     "2:0,0,0|1:0,1,1,1|0:0,1,2,2|0:1,2,3|0:2,4",
     "3:0,0|1:0,0,1,1|0:0,1,1,2|0:1,2,2,3|0:2,4"],
    ["0:0,0,0,0,0|0:1,1,1,1,1|0:2,2,2,5|0:3|0:5",
     "1:0,0,0,0|0:0,1,1,1,1|0:1,2,2,5|0:2,3|0:5",
     "1:0,0,0,0|1:1,1,1,1|0:0,2,2,5|0:1,3|0:2,5",
     "2:0,0,0|1:0,1,1,1|0:0,1,2,5|0:1,2,3|0:2,5",
     "3:0,0|1:0,0,1,1|0:0,1,1,2|0:1,2,3,5|0:2,5"],
    ["0:0,0,0,0,0|0:1,1,1,1,1|0:2,4,4,5|0:3|0:5",
     "1:0,0,0,0|0:0,1,1,1,1|0:1,2,4,5|0:3,4|0:5",
     "1:0,0,0,0|1:1,1,1,1|0:0,2,4,5|0:1,4|0:3,5",
     "2:0,0,0|1:0,1,1,1|0:0,1,2,5|0:1,4,4|0:3,5",
     "3:0,0|1:0,0,1,1|0:0,1,1,2|0:1,4,4,5|0:3,5"],
    ["0:0,0,0,0,0|0:1,1,1,3,3|0:2,4,4,5|0:3|0:5",
     "1:0,0,0,0|0:0,1,1,3,3|0:1,2,4,5|0:3,4|0:5",
     "1:0,0,0,0|1:1,1,3,3|0:0,2,4,5|0:1,4|0:3,5",
     "2:0,0,0|1:0,1,3,3|0:0,1,2,5|0:1,4,4|0:3,5",
     "3:0,0|1:0,0,1,3|0:0,1,2,3|0:1,4,4,5|0:3,5"],
    ["0:0,0,0,1,1|0:1,1,2,3,3|0:2,4,4,5|0:3|0:5",
     "1:0,0,1,1|0:0,1,2,3,3|0:1,2,4,5|0:3,4|0:5",
     "1:0,0,1,1|1:1,2,3,3|0:0,2,4,5|0:1,4|0:3,5",
     "2:0,1,1|1:0,1,3,3|0:0,2,2,5|0:1,4,4|0:3,5",
     "3:0,1|1:0,1,1,3|0:0,2,2,3|0:1,4,4,5|0:3,5"],
]
# GRID_SLIDES[c] is the inward slide taking column c+1 to column c
GRID_SLIDES = [(0, 0), (1, 0), (0, 1), (0, 2)]
# GRID_RAISES[r] is the raising group taking row r+1 up to row r
GRID_RAISES = [[4, 4, 3, 2], [3, 2, 3, 2], [2, 1, 2, 1], [0, 0, 1]]


def random_partition(rng, max_size, max_parts=None):
    lam = ()
    for _ in range(rng.randint(0, max_size)):
        options = addable_cells(lam)
        if max_parts is not None:
            options = [c for c in options if c.row < max_parts]
        lam = add_cell(lam, rng.choice(options))
    return lam


def random_shape(rng, max_cells=8, max_inner=4):
    inner = random_partition(rng, max_inner)
    outer = inner
    for _ in range(rng.randint(0, max_cells)):
        outer = add_cell(outer, rng.choice(addable_cells(outer)))
    return SkewShape(outer, inner)


def random_filling(rng, shape, spread=2, n=None):
    """Row-major fill, each entry a small random step above its lower bound.

    With ``n`` the entries are kept below ``n`` when possible (the caller
    must make sure columns are short enough).
    """
    entries = {}
    for i in range(shape.rows):
        for j in shape.row_range(i):
            lo = max(entries.get((i, j - 1), 0), entries.get((i - 1, j), -1) + 1)
            x = lo + rng.randint(0, spread)
            if n is not None:
                below = sum(1 for r in range(i + 1, shape.rows) if j in shape.row_range(r))
                x = min(x, max(lo, n - 1 - below))
            entries[i, j] = x
    return SkewTableau.from_cells(shape, entries)


def random_tableau(rng, max_cells=8, spread=2):
    return random_filling(rng, random_shape(rng, max_cells), spread)


def random_chain(rng, start, steps):
    chain = [partition(start)]
    for _ in range(steps):
        chain.append(add_cell(chain[-1], rng.choice(addable_cells(chain[-1]))))
    return ChainTableau(tuple(chain))


def random_switch_pair(rng, max_cells=8, spread=2):
    """Semistandard ``S`` of shape ``μ/ν`` and ``T`` of shape ``λ/μ``."""
    nu = random_partition(rng, 3)
    k = rng.randint(0, max_cells)
    mu = random_chain(rng, nu, rng.randint(0, k)).outer
    lam = random_chain(rng, mu, rng.randint(0, max_cells - (sum(mu) - sum(nu)))).outer
    S = random_filling(rng, SkewShape(mu, nu), spread)
    T = random_filling(rng, SkewShape(lam, mu), spread)
    return S, T


@st.composite
def tableaux(draw, max_cells=8, max_entry_step=2):
    seed = draw(st.integers(0, 2**32 - 1))
    cells = draw(st.integers(0, max_cells))
    return random_tableau(random.Random(seed), cells, max_entry_step)


def words(n, max_len=8):
    return st.lists(st.integers(0, n - 1), max_size=max_len).map(tuple)
