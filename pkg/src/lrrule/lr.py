"""Littlewood-Richardson coefficients, Schur products, skew expansions,
Kostka numbers and the bijections behind the symmetries of the coefficients."""

from __future__ import annotations

from typing import Iterable

from .errors import PreconditionError, ShapeMismatchError
from .jdt import rectify, switch
from .shapes import (SkewShape, as_shape, format_partition, part, partition, partitions,
                     product_shape, size)
from .tableaux import (SkewTableau, as_tableau, canonical, companion, enumerate_lr,
                       enumerate_tableaux, is_lr_tableau, weight)


def _key(lam):
    return (sum(lam), tuple(-x for x in lam))


class SchurExpansion:
    """Finite sum ``Σ c_ν s_ν`` with integer coefficients.

    Zero coefficients are dropped.  Coefficients produced by the
    combinatorial side are non-negative; the polynomial oracle may produce
    negative ones for non-Schur-positive input.
    """

    def __init__(self, terms=None):
        clean = {}
        for lam, c in dict(terms or {}).items():
            lam = partition(lam)
            if c:
                clean[lam] = clean.get(lam, 0) + int(c)
        self.terms = {lam: clean[lam] for lam in sorted(clean, key=_key) if clean[lam]}
        sizes = {sum(lam) for lam in self.terms}
        if len(sizes) > 1:
            raise PreconditionError(f"mixed degrees {sorted(sizes)} in a Schur expansion")

    @property
    def degree(self):
        return sum(next(iter(self.terms))) if self.terms else None

    def __getitem__(self, lam) -> int:
        return self.terms.get(partition(lam), 0)

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, SchurExpansion):
            return self.terms == other.terms
        if isinstance(other, dict):
            return self == SchurExpansion(other)
        return NotImplemented

    def __repr__(self):
        return f"SchurExpansion({self.terms!r})"

    def total(self) -> int:
        return sum(self.terms.values())

    def restrict(self, n: int) -> "SchurExpansion":
        """Terms with at most ``n`` parts (``s_ν(n)`` vanishes otherwise)."""
        return SchurExpansion({lam: c for lam, c in self.terms.items() if len(lam) <= n})

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{format_partition(lam)}" for lam, c in self.terms.items())

    def to_json(self) -> dict:
        return {"expansion": [{"partition": list(lam), "coeff": c}
                              for lam, c in self.terms.items()]}


def lr_coefficient(chi, nu) -> int:
    """``c_χ^ν``: the number of LR tableaux of shape ``χ`` and weight ``ν``."""
    chi, nu = as_shape(chi), partition(nu)
    if chi.size != size(nu):
        raise ShapeMismatchError(f"|{chi}| = {chi.size} differs from |{format_partition(nu)}| = {size(nu)}")
    return sum(1 for _ in enumerate_lr(chi, nu))


def product_coefficient(lam, mu, nu) -> int:
    """``c_{λμ}^ν``, evaluated on the skew shape ``ν/μ`` (fewer cells to fill)."""
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if size(lam) + size(mu) != size(nu):
        raise ShapeMismatchError("|λ| + |μ| must equal |ν|")
    if any(part(nu, i) < m for i, m in enumerate(mu)):
        return 0
    return lr_coefficient(SkewShape(nu, mu), lam)


def skew_expand(chi, n: int | None = None) -> SchurExpansion:
    """``s_χ = Σ_ν c_χ^ν s_ν``, from a single search over all weights."""
    counts: dict = {}
    for T in enumerate_lr(as_shape(chi), n=n):
        wt = weight(T)
        counts[wt] = counts.get(wt, 0) + 1
    if not counts and as_shape(chi).size == 0:
        counts[()] = 1
    return SchurExpansion(counts)


def schur_product(lam, mu, n: int | None = None) -> SchurExpansion:
    return skew_expand(product_shape(lam, mu), n)


def kostka(lam, mu) -> int:
    """Number of semistandard tableaux of shape ``λ`` and weight ``μ``."""
    lam = partition(lam)
    mu = tuple(mu)
    if size(lam) != sum(mu):
        raise ShapeMismatchError(f"|λ| = {size(lam)} differs from |μ| = {sum(mu)}")
    if not mu:
        return 1
    return sum(1 for _ in enumerate_tableaux(SkewShape(lam), len(mu), weight_bound=mu))


def horizontal_strips(lam, r: int) -> Iterable[tuple]:
    """Partitions ``ν ⊃ λ`` with ``ν/λ`` a horizontal strip of ``r`` cells."""
    lam = partition(lam)
    if r < 0:
        raise PreconditionError("r must be non-negative")
    rows = len(lam) + 1

    def rec(i, left):
        if i == rows:
            if left == 0:
                yield ()
            return
        cap = left if i == 0 else min(left, part(lam, i - 1) - part(lam, i))
        for extra in range(cap, -1, -1):
            for tail in rec(i + 1, left - extra):
                yield (part(lam, i) + extra,) + tail

    for nu in rec(0, r):
        yield partition(nu)


def pieri_row(lam, r: int) -> SchurExpansion:
    return SchurExpansion({nu: 1 for nu in horizontal_strips(lam, r)})


def jdt_count(chi, C) -> int:
    """Number of tableaux of shape ``χ`` rectifying to the Young tableau ``C``."""
    C = as_tableau(C)
    chi = as_shape(chi)
    if chi.size != len(C):
        return 0
    n = C.max_entry() + 1 if len(C) else 0
    return sum(1 for T in enumerate_tableaux(chi, n) if rectify(T)[0] == C)


def lr_product_tableaux(lam, mu, nu=None):
    return list(enumerate_lr(product_shape(lam, mu), nu))


def _lambda_part(L: SkewTableau, lam, mu) -> SkewTableau:
    k = len(mu)
    rows = L.rows[k:]
    return SkewTableau(SkewShape(lam), tuple(rows))


def factor_bijection(L, lam, mu, direction: str = "forward") -> SkewTableau:
    """Bijection ``LR(λ*μ, ν) ↔ LR(ν/μ, λ)``.

    The ``μ`` part of an LR tableau on the product shape is forced to be the
    canonical tableau of ``μ``; the ``λ`` part is a Young tableau of weight
    ``ν − μ`` whose companion over ``μ`` is the image.
    """
    L = as_tableau(L)
    lam, mu = partition(lam), partition(mu)
    chi = product_shape(lam, mu)
    if direction == "forward":
        if L.shape != chi or not is_lr_tableau(L):
            raise PreconditionError(f"not a Littlewood-Richardson tableau of shape {chi}")
        head = tuple(L.rows[:len(mu)])
        if head != canonical(mu).rows:
            raise AssertionError("the μ part of an LR tableau on a product shape is canonical")
        return companion(_lambda_part(L, lam, mu), mu)
    if direction != "backward":
        raise PreconditionError(f"direction must be 'forward' or 'backward', not {direction!r}")
    if L.inner != mu or weight(L) != lam or not is_lr_tableau(L):
        raise PreconditionError(
            f"not a Littlewood-Richardson tableau over {format_partition(mu)} of weight {format_partition(lam)}")
    body = companion(L, ())
    rows = canonical(mu).rows + tuple(body.rows)
    return SkewTableau(chi, rows)


def switch_bijection(T, lam, mu) -> SkewTableau:
    """``LR(ν/μ, λ) → LR(ν/λ, μ)`` via ``X(1_μ, T) = (1_λ, T*)``."""
    T = as_tableau(T)
    lam, mu = partition(lam), partition(mu)
    if T.inner != mu or not is_lr_tableau(T, lam):
        raise PreconditionError(
            f"not a Littlewood-Richardson tableau over {format_partition(mu)} of weight {format_partition(lam)}")
    front, star = switch(canonical(mu), T)
    if front != canonical(lam):
        raise AssertionError("switching the canonical tableau did not give a canonical tableau")
    return star


def commute_bijection(L, lam, mu) -> SkewTableau:
    """``LR(λ*μ, ν) → LR(μ*λ, ν)``."""
    M = factor_bijection(L, lam, mu, "forward")
    M_star = switch_bijection(M, lam, mu)
    return factor_bijection(M_star, mu, lam, "backward")


def expansion_by_filtering(chi, n: int | None = None) -> SchurExpansion:
    """Reference path: count LR tableaux per weight by testing every
    candidate ``ν`` separately."""
    chi = as_shape(chi)
    terms = {}
    for nu in partitions(chi.size, max_parts=n):
        c = lr_coefficient(chi, nu)
        if c:
            terms[nu] = c
    return SchurExpansion(terms)
