"""Brute-force symmetric polynomials in a fixed number of indeterminates.

This module is the independent check on the combinatorial side: Schur
polynomials are expanded by filling diagrams directly (no shared code with
the tableau search), and Schur-basis coefficients are recovered by
unitriangular elimination.
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement
from math import comb, prod

from .errors import PreconditionError, ResourceError
from .lr import SchurExpansion
from .shapes import SkewShape, as_shape, part, partition, partitions

EXPANSION_LIMIT = 10**7


class MonomialPoly:
    """Integer polynomial in ``X_0 … X_{n-1}`` stored as exponent → coefficient."""

    def __init__(self, n: int, coeffs=None):
        self.n = n
        clean = {}
        for alpha, c in dict(coeffs or {}).items():
            alpha = tuple(alpha)
            if len(alpha) != n:
                raise PreconditionError(f"exponent {alpha} does not have length {n}")
            if c:
                clean[alpha] = clean.get(alpha, 0) + c
        self.coeffs = {a: c for a, c in clean.items() if c}

    @classmethod
    def one(cls, n: int) -> "MonomialPoly":
        return cls(n, {(0,) * n: 1})

    @classmethod
    def variable(cls, i: int, n: int) -> "MonomialPoly":
        alpha = [0] * n
        alpha[i] = 1
        return cls(n, {tuple(alpha): 1})

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, MonomialPoly) and self.n == other.n and self.coeffs == other.coeffs

    def __add__(self, other):
        _check_n(self, other)
        out = dict(self.coeffs)
        for a, c in other.coeffs.items():
            out[a] = out.get(a, 0) + c
        return MonomialPoly(self.n, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __mul__(self, other):
        return multiply(self, other)

    def scale(self, k: int) -> "MonomialPoly":
        return MonomialPoly(self.n, {a: k * c for a, c in self.coeffs.items()})

    def term_count(self) -> int:
        """Number of summed terms, i.e. monomials counted with multiplicity."""
        return sum(self.coeffs.values())

    def degrees(self) -> set:
        return {sum(a) for a in self.coeffs}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def __repr__(self):
        return f"MonomialPoly({self.n}, {self.coeffs!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for alpha in sorted(self.coeffs, reverse=True):
            c = self.coeffs[alpha]
            mono = "*".join(f"X{i}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(alpha) if e)
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms)


def _check_n(P, Q):
    if P.n != Q.n:
        raise PreconditionError(f"polynomials in {P.n} and {Q.n} indeterminates")


def multiply(P: MonomialPoly, Q: MonomialPoly) -> MonomialPoly:
    _check_n(P, Q)
    out: dict = {}
    for a, c in P.coeffs.items():
        for b, d in Q.coeffs.items():
            key = tuple(x + y for x, y in zip(a, b))
            out[key] = out.get(key, 0) + c * d
    return MonomialPoly(P.n, out)


def _projected_fillings(shape: SkewShape, n: int) -> int:
    # rows counted independently, each letter confined by the column cells
    # above and below it
    total = 1
    for i in range(shape.rows):
        cols = shape.row_range(i)
        if not cols:
            continue
        above = [sum(1 for r in range(i) if j in shape.row_range(r)) for j in cols]
        below = [sum(1 for r in range(i + 1, shape.rows) if j in shape.row_range(r)) for j in cols]
        width = (n - 1 - min(below)) - min(above) + 1
        if width <= 0:
            return 0
        total *= comb(width + len(cols) - 1, len(cols))
    return total


def schur_monomials(chi, n: int, limit: int = EXPANSION_LIMIT) -> MonomialPoly:
    """``s_χ(n)``: sum of ``X^{wt T}`` over semistandard fillings with letters below ``n``.

    Fillings are generated row by row from all weakly increasing rows and
    filtered by the column condition.
    """
    shape = as_shape(chi)
    if _projected_fillings(shape, n) > limit:
        raise ResourceError(f"expansion of {shape} in {n} indeterminates is too large")
    rows = [list(shape.row_range(i)) for i in range(shape.rows)]
    out: dict = {}
    weight = [0] * n

    def rec(i, above: dict):
        if i == len(rows):
            key = tuple(weight)
            out[key] = out.get(key, 0) + 1
            return
        cols = rows[i]
        for row in combinations_with_replacement(range(n), len(cols)):
            if any(j in above and above[j] >= x for j, x in zip(cols, row)):
                continue
            for x in row:
                weight[x] += 1
            rec(i + 1, dict(zip(cols, row)))
            for x in row:
                weight[x] -= 1

    rec(0, {})
    return MonomialPoly(n, out)


def elementary(d: int, n: int) -> MonomialPoly:
    out = {}
    for idx in combinations(range(n), d):
        alpha = [0] * n
        for i in idx:
            alpha[i] += 1
        out[tuple(alpha)] = 1
    return MonomialPoly(n, out)


def complete(d: int, n: int) -> MonomialPoly:
    out: dict = {}
    for idx in combinations_with_replacement(range(n), d):
        alpha = [0] * n
        for i in idx:
            alpha[i] += 1
        out[tuple(alpha)] = 1
    return MonomialPoly(n, out)


def monomial_symmetric(lam, n: int) -> MonomialPoly:
    """``m_λ(n)``: sum over the distinct rearrangements of ``λ`` padded to length ``n``."""
    lam = partition(lam)
    if len(lam) > n:
        return MonomialPoly(n)
    base = tuple(part(lam, i) for i in range(n))
    seen = set()

    def perms(items):
        if not items:
            yield ()
            return
        used = set()
        for k, x in enumerate(items):
            if x in used:
                continue
            used.add(x)
            for rest in perms(items[:k] + items[k + 1:]):
                yield (x,) + rest

    for p in perms(base):
        seen.add(p)
    return MonomialPoly(n, {p: 1 for p in seen})


def is_symmetric(P: MonomialPoly) -> bool:
    for alpha, c in P.coeffs.items():
        for i in range(P.n - 1):
            swapped = alpha[:i] + (alpha[i + 1], alpha[i]) + alpha[i + 2:]
            if P.coeffs.get(swapped, 0) != c:
                return False
    return True


def to_m_basis(P: MonomialPoly) -> dict:
    """Coefficients of ``m_λ``, read at the dominant exponent of each orbit."""
    if not is_symmetric(P):
        raise PreconditionError("polynomial is not symmetric")
    out = {}
    for alpha, c in P.coeffs.items():
        if all(a >= b for a, b in zip(alpha, alpha[1:])):
            out[partition(alpha)] = c
    return dict(sorted(out.items(), key=lambda kv: (sum(kv[0]), [-x for x in kv[0]])))


def to_schur_basis(P: MonomialPoly, limit: int = EXPANSION_LIMIT) -> SchurExpansion:
    """Repeatedly remove the leading Schur polynomial.

    The lexicographically largest partition exponent still present is
    maximal for dominance, and ``s_ν(n)`` has leading term ``X^ν``, so each
    step strictly lowers the leading exponent.
    """
    if not is_symmetric(P):
        raise PreconditionError("polynomial is not symmetric")
    if not P.is_homogeneous():
        raise PreconditionError("polynomial is not homogeneous")
    remaining = MonomialPoly(P.n, P.coeffs)
    terms = {}
    while remaining.coeffs:
        top = max(a for a in remaining.coeffs if all(x >= y for x, y in zip(a, a[1:])))
        c = remaining.coeffs[top]
        nu = partition(top)
        terms[nu] = c
        remaining = remaining - schur_monomials(SkewShape(nu), P.n, limit).scale(c)
    return SchurExpansion(terms)


def schur_product_oracle(lam, mu, n: int) -> SchurExpansion:
    return to_schur_basis(multiply(schur_monomials(lam, n), schur_monomials(mu, n)))


def m_basis_sum(degree: int, n: int) -> MonomialPoly:
    """``Σ_{λ ∈ Part_{d,n}} m_λ(n)``."""
    total = MonomialPoly(n)
    for lam in partitions(degree, max_parts=n):
        total = total + monomial_symmetric(lam, n)
    return total
