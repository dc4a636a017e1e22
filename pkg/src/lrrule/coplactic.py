"""Coplactic (crystal) operations on words and tableaux, Robinson's
correspondence, and the companion-slide link with jeu de taquin."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .errors import PreconditionError, ResourceError, ShapeMismatchError
from .jdt import inward_slide, phi, rectify
from .shapes import Cell, SkewShape, part, partition, remove_cell, removable_cells
from .tableaux import (KANJI, SEMITIC, SkewTableau, as_tableau, companion,
                       is_dominant_for, is_lr_tableau, reading_cells, reading_word, weight,
                       word_weight)

DOMINANT = "dominant"
ANTI_DOMINANT = "anti-dominant"
NEUTRAL = "neutral"
NEITHER = "neither"

MIN_INDEX = "min-index"
MAX_INDEX = "max-index"

DEFAULT_VERTEX_CAP = 10**6


def word_class(word, i: int) -> str:
    """Classify ``word`` as dominant / anti-dominant / neutral for ``i``."""
    bal = 0
    dominant = True
    for x in word:
        if x == i:
            bal += 1
        elif x == i + 1:
            bal -= 1
            if bal < 0:
                dominant = False
    bal = 0
    anti = True
    for x in reversed(word):
        if x == i + 1:
            bal += 1
        elif x == i:
            bal -= 1
            if bal < 0:
                anti = False
    if dominant and anti:
        return NEUTRAL
    if dominant:
        return DOMINANT
    if anti:
        return ANTI_DOMINANT
    return NEITHER


def raise_position(word, i: int) -> Optional[int]:
    """Position of the letter ``i+1`` changed by ``e_i``, or None.

    The suffix after that position is the longest suffix dominant for ``i``.
    """
    lowest = 0
    start = len(word)
    for p in range(len(word) - 1, -1, -1):
        x = word[p]
        step = 1 if x == i else -1 if x == i + 1 else 0
        lowest = min(0, lowest + step)
        if lowest == 0:
            start = p
    if start == 0:
        return None
    return start - 1


def lower_position(word, i: int) -> Optional[int]:
    """Position of the letter ``i`` changed by ``f_i``, or None.

    The prefix before that position is the longest prefix anti-dominant for ``i``.
    """
    lowest = 0
    stop = 0
    for p, x in enumerate(word):
        step = 1 if x == i + 1 else -1 if x == i else 0
        lowest = min(0, lowest + step)
        if lowest == 0:
            stop = p + 1
    if stop == len(word):
        return None
    return stop


def bracket_positions(word, i: int) -> tuple:
    """Unmatched letters after pairing each ``i`` with a later ``i+1``.

    Returns ``(unmatched i+1 positions, unmatched i positions)``; the word
    reduces to ``(i+1)^r i^s`` so ``e_i`` acts on the last of the first
    list and ``f_i`` on the first of the second.
    """
    open_i = []
    lone_upper = []
    for p, x in enumerate(word):
        if x == i:
            open_i.append(p)
        elif x == i + 1:
            if open_i:
                open_i.pop()
            else:
                lone_upper.append(p)
    return lone_upper, open_i


def raise_word(word, i: int) -> Optional[tuple]:
    p = raise_position(word, i)
    if p is None:
        return None
    return word[:p] + (i,) + word[p + 1:]


def lower_word(word, i: int) -> Optional[tuple]:
    p = lower_position(word, i)
    if p is None:
        return None
    return word[:p] + (i + 1,) + word[p + 1:]


def _tableau_op(T: SkewTableau, i: int, raising: bool) -> Optional[SkewTableau]:
    locate = raise_position if raising else lower_position
    found = []
    for order in (SEMITIC, KANJI):
        cs = reading_cells(T.shape, order)
        p = locate(tuple(T[c] for c in cs), i)
        found.append(None if p is None else cs[p])
    if found[0] != found[1]:
        raise AssertionError(f"reading orders disagree on the variable square: {found}")
    cell = found[0]
    if cell is None:
        return None
    entries = T.to_dict()
    entries[cell] += -1 if raising else 1
    return SkewTableau.from_cells(T.shape, entries)


def raise_tab(T, i: int) -> Optional[SkewTableau]:
    """``e_i`` on a tableau, located through its reading word."""
    return _tableau_op(as_tableau(T), i, True)


def lower_tab(T, i: int) -> Optional[SkewTableau]:
    """``f_i`` on a tableau."""
    return _tableau_op(as_tableau(T), i, False)


def raise_any(x, i):
    return raise_word(tuple(x), i) if isinstance(x, (tuple, list)) else raise_tab(x, i)


def lower_any(x, i):
    return lower_word(tuple(x), i) if isinstance(x, (tuple, list)) else lower_tab(x, i)


@dataclass(frozen=True)
class RaisingTrace:
    """Coplactic operations applied in order: ``(kind, index, position)``,
    positions counted in the (Semitic reading) word at application time."""

    steps: tuple = ()
    policy: str = "custom"

    def indices(self) -> list:
        return [i for _, i, _ in self.steps]

    def positions(self) -> list:
        return [p for _, _, p in self.steps]

    def replay(self, word) -> tuple:
        word = tuple(word)
        for kind, i, p in self.steps:
            expect, new = (i + 1, i) if kind == "e" else (i, i + 1)
            if word[p] != expect:
                raise PreconditionError(f"step {kind}_{i}@{p} does not match the word")
            word = word[:p] + (new,) + word[p + 1:]
        return word

    def __str__(self):
        return " ".join(f"{k}_{i}@{p}" for k, i, p in self.steps)


def dominant_normal_form(x, policy: str = MIN_INDEX) -> tuple:
    """Apply raising operations until none is defined.

    ``x`` is a word or a tableau (acted on through its Semitic word).
    ``policy`` picks the smallest or the largest applicable index.
    Returns ``(normal form, RaisingTrace)``.
    """
    if policy not in (MIN_INDEX, MAX_INDEX):
        raise PreconditionError(f"unknown policy {policy!r}")
    is_word = isinstance(x, (tuple, list))
    T = None if is_word else as_tableau(x)
    word = tuple(x) if is_word else reading_word(T, SEMITIC)
    steps = []
    top = max(word, default=0)
    while True:
        indices = range(top) if policy == MIN_INDEX else range(top - 1, -1, -1)
        for i in indices:
            p = raise_position(word, i)
            if p is not None:
                break
        else:
            break
        steps.append(("e", i, p))
        word = word[:p] + (i,) + word[p + 1:]
    trace = RaisingTrace(tuple(steps), policy)
    if is_word:
        return word, trace
    cs = reading_cells(T.shape, SEMITIC)
    return SkewTableau.from_cells(T.shape, dict(zip(cs, word))), trace


def is_dominant_word(word) -> bool:
    return all(raise_position(word, i) is None for i in range(max(word, default=0)))


def rob(T) -> tuple:
    """Robinson's correspondence ``T ↦ (L, P)``: raising normal form and
    rectification."""
    T = as_tableau(T)
    L, _ = dominant_normal_form(T, MIN_INDEX)
    P, _ = rectify(T)
    return L, P


def rob_inverse(L, P) -> SkewTableau:
    """The unique ``T`` with ``rob(T) == (L, P)``."""
    L, P = as_tableau(L), as_tableau(P)
    if not is_lr_tableau(L):
        raise PreconditionError("first argument is not a Littlewood-Richardson tableau")
    if P.inner or weight(L) != P.outer:
        raise ShapeMismatchError(f"weight {list(weight(L))} of L differs from shape {P.shape} of P")
    return phi(L, P)


@dataclass
class ComponentSummary:
    root: tuple
    n: int
    vertices: list
    edges: list = field(default_factory=list)

    def weight_counts(self) -> dict:
        counts: dict = {}
        for v in self.vertices:
            wt = word_weight(v, self.n)
            counts[wt] = counts.get(wt, 0) + 1
        return counts

    def same_weight(self) -> int:
        target = word_weight(self.root, self.n)
        return sum(1 for v in self.vertices if word_weight(v, self.n) == target)

    def to_json(self) -> dict:
        index = {v: k for k, v in enumerate(self.vertices)}
        return {
            "root": list(self.root),
            "n": self.n,
            "vertices": [list(v) for v in self.vertices],
            "edges": [{"source": index[a], "target": index[b], "label": i}
                      for a, i, b in self.edges],
            "weights": [{"weight": list(w), "count": c}
                        for w, c in sorted(self.weight_counts().items(), reverse=True)],
        }


def coplactic_component(word, n: int, cap: int = DEFAULT_VERTEX_CAP,
                        with_edges: bool = True) -> ComponentSummary:
    """Breadth-first closure of ``word`` under all defined ``e_i`` and ``f_i``.

    Vertices are listed in discovery order (neighbours by increasing ``i``,
    raising before lowering); edges ``(w, i, f_i(w))`` are recorded once.
    """
    root = tuple(word)
    if any(x >= n or x < 0 for x in root):
        raise PreconditionError(f"letters must lie in 0..{n - 1}")
    seen = {root}
    order = [root]
    edges = []
    queue = deque([root])
    while queue:
        w = queue.popleft()
        for i in range(n - 1):
            p = raise_position(w, i)
            if p is not None:
                v = w[:p] + (i,) + w[p + 1:]
                if v not in seen:
                    seen.add(v)
                    order.append(v)
                    queue.append(v)
            p = lower_position(w, i)
            if p is not None:
                v = w[:p] + (i + 1,) + w[p + 1:]
                if with_edges:
                    edges.append((w, i, v))
                if v not in seen:
                    seen.add(v)
                    order.append(v)
                    queue.append(v)
            if len(order) > cap:
                raise ResourceError(f"coplactic component exceeds {cap} vertices")
    return ComponentSummary(root, n, order, edges)


def components_isomorphic(u, v, n: int, cap: int = DEFAULT_VERTEX_CAP) -> bool:
    """Explore the components of ``u`` and ``v`` in lockstep, applying the
    same operations to both; isomorphic (with ``u ↦ v``) iff the same
    operations are defined everywhere and the pairing stays a bijection."""
    u, v = tuple(u), tuple(v)
    forward = {u: v}
    backward = {v: u}
    queue = deque([(u, v)])
    while queue:
        a, b = queue.popleft()
        for i in range(n - 1):
            for op in (raise_word, lower_word):
                a2, b2 = op(a, i), op(b, i)
                if (a2 is None) != (b2 is None):
                    return False
                if a2 is None:
                    continue
                if forward.get(a2, b2) != b2 or backward.get(b2, a2) != a2:
                    return False
                if a2 not in forward:
                    forward[a2] = b2
                    backward[b2] = a2
                    queue.append((a2, b2))
                    if len(forward) > cap:
                        raise ResourceError(f"coplactic component exceeds {cap} vertices")
    return True


class CompanionSlide(NamedTuple):
    indices: tuple
    tableau: SkewTableau
    kappa: tuple
    nu: tuple
    companion: SkewTableau


def companion_slide(T, kappa, s) -> CompanionSlide:
    """An inward slide on the companion of ``T`` over ``κ``, expressed as
    raising operations on ``T``.

    Letters of the Semitic word carry an ordinate (the column of the
    companion cell they fill); each upward move in the slide turns a letter
    ``(r+1)`` with ordinate ``c`` into ``r`` with ordinate ``c``, which is
    ``e_r`` on the underlying word.
    """
    T = as_tableau(T)
    kappa = partition(kappa)
    comp = companion(T, kappa)
    s = Cell(*s)
    if s not in removable_cells(kappa):
        raise PreconditionError(f"{tuple(s)} is not an inner corner of {list(kappa)}")
    cs = reading_cells(T.shape, SEMITIC)
    next_ord: dict = {}
    letters, ordinates = [], []
    where = {}
    for p, c in enumerate(cs):
        l = T[c]
        o = next_ord.get(l, part(kappa, l))
        next_ord[l] = o + 1
        letters.append(l)
        ordinates.append(o)
        where[l, o] = p
    r, c = s
    ops = []
    words = [tuple(letters)]
    while True:
        right = where.get((r, c + 1))
        below = where.get((r + 1, c))
        if right is None and below is None:
            break
        if below is not None and (right is None or below < right):
            del where[r + 1, c]
            letters[below] = r
            where[r, c] = below
            ops.append(r)
            words.append(tuple(letters))
            r += 1
        else:
            del where[r, c + 1]
            ordinates[right] = c
            where[r, c] = right
            c += 1
    end = Cell(r, c)
    kappa2 = remove_cell(kappa, s)
    nu2 = remove_cell(comp.outer, end)
    chain = [SkewTableau.from_cells(T.shape, dict(zip(cs, w))) for w in words]
    for k, i in enumerate(ops):
        if raise_tab(chain[k], i) != chain[k + 1]:
            raise AssertionError(f"step {k} of the companion slide is not e_{i}")
    slid, _ = inward_slide(comp, s)
    result = chain[-1]
    if companion(result, kappa2) != slid:
        raise AssertionError("slid companion is not a companion of the raised tableau")
    if any(is_dominant_for(t, kappa2) for t in chain[:-1]):
        raise AssertionError("an earlier tableau of the chain is already dominant")
    return CompanionSlide(tuple(ops), result, kappa2, nu2, slid)


def raise_bound(T, i: int) -> int:
    """How many times ``e_i`` can be applied successively."""
    count = 0
    T = raise_tab(T, i)
    while T is not None:
        count += 1
        T = raise_tab(T, i)
    return count


def lower_bound(T, i: int) -> int:
    count = 0
    T = lower_tab(T, i)
    while T is not None:
        count += 1
        T = lower_tab(T, i)
    return count


def dominance_bounds_hold(T, kappa, nu) -> tuple:
    """The three equivalent conditions for ``ν/κ``-dominance, evaluated
    separately: (companion exists, e-bounds hold, f-bounds hold)."""
    T = as_tableau(T)
    kappa, nu = partition(kappa), partition(nu)
    n = max(len(nu), T.max_entry() + 1)
    first = is_dominant_for(T, kappa)
    second = all(raise_bound(T, i) <= part(kappa, i) - part(kappa, i + 1) for i in range(n - 1))
    third = all(lower_bound(T, i) <= part(nu, i) - part(nu, i + 1) for i in range(n - 1))
    return first, second, third


@dataclass(frozen=True)
class RobinsonMonomial:
    """Product of commuting symbols ``S_rs`` (``r < s``) with multiplicities."""

    factors: tuple = ()

    @classmethod
    def from_pairs(cls, pairs) -> "RobinsonMonomial":
        counts: dict = {}
        for rs in pairs:
            counts[rs] = counts.get(rs, 0) + 1
        return cls(tuple(sorted(counts.items(), key=lambda kv: (kv[0][1], -kv[0][0]))))

    def as_dict(self) -> dict:
        return dict(self.factors)

    def __str__(self):
        if not self.factors:
            return "1"
        out = []
        for (r, s), m in self.factors:
            out.append(f"S_{{{r}{s}}}" + (f"^{m}" if m > 1 else ""))
        return " ".join(out)


def association_monomial(trace: RaisingTrace) -> tuple:
    """Group maximal runs ``e_{s-1}, e_{s-2}, …, e_r`` into factors ``S_rs``.

    Returns ``(monomial, ordered list of (r, s))``.
    """
    if trace.policy == MAX_INDEX:
        raise PreconditionError("association needs a trace produced with the min-index policy")
    groups = []
    for kind, i, _ in trace.steps:
        if kind != "e":
            raise PreconditionError("association is defined for raising operations only")
        if groups and groups[-1][-1] == i + 1:
            groups[-1].append(i)
        else:
            groups.append([i])
    pairs = [(g[-1], g[0] + 1) for g in groups]
    return RobinsonMonomial.from_pairs(pairs), pairs


def monomial_tableau(monomial: RobinsonMonomial, alpha) -> SkewTableau:
    """The Young tableau ``P`` with ``P_r^s = λ_rs`` (``r < s``) and
    ``P_s^s = α_s − Σ_{r<s} P_r^s``."""
    alpha = list(alpha)
    counts = monomial.as_dict()
    n = max([len(alpha)] + [s + 1 for _, s in counts])
    alpha += [0] * (n - len(alpha))
    rows = [[] for _ in range(n)]
    for s in range(n):
        moved = sum(m for (r, s2), m in counts.items() if s2 == s)
        stay = alpha[s] - moved
        if stay < 0:
            raise PreconditionError(f"more letters moved out of row {s} than it holds")
        rows[s].extend([s] * stay)
        for r in range(s):
            rows[r].extend([s] * counts.get((r, s), 0))
    shape = partition(len(r) for r in rows)
    return SkewTableau(SkewShape(shape), tuple(tuple(r) for r in rows[:len(shape)]))
