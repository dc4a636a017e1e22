import random

import pytest

from lrrule.errors import PreconditionError, ResourceError
from lrrule.lr import SchurExpansion
from lrrule.polyoracle import (MonomialPoly, complete, elementary, is_symmetric, m_basis_sum,
                               monomial_symmetric, multiply, schur_monomials,
                               schur_product_oracle, to_m_basis, to_schur_basis)
from lrrule.shapes import SkewShape, partitions


def X(i, n):
    return MonomialPoly.variable(i, n)


def test_schur_421_in_three_variables():
    s = schur_monomials((4, 2, 1), 3)
    assert s.term_count() == 15
    assert len(s) == 12
    assert to_m_basis(s) == {(4, 2, 1): 1, (3, 3, 1): 1, (3, 2, 2): 2}


def test_small_schur_polynomials():
    assert schur_monomials((1,), 2) == X(0, 2) + X(1, 2)
    assert schur_monomials((1, 1, 1), 2) == MonomialPoly(2)


def test_elementary_and_complete():
    assert elementary(2, 3) == MonomialPoly(3, {(1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1})
    assert complete(2, 2) == MonomialPoly(2, {(2, 0): 1, (1, 1): 1, (0, 2): 1})
    for n in range(1, 6):
        for d in range(7):
            assert elementary(d, n) == schur_monomials((1,) * d, n)
            assert complete(d, n) == schur_monomials((d,) if d else (), n)
            assert complete(d, n) == m_basis_sum(d, n)


def test_multiply():
    n = 2
    one = MonomialPoly.one(n)
    P = X(0, n) + X(1, n)
    assert multiply(P, one) == P
    assert multiply(P, P) == MonomialPoly(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})
    with pytest.raises(PreconditionError):
        multiply(P, MonomialPoly.one(3))
    assert is_symmetric(multiply(schur_monomials((2, 1), 3), schur_monomials((2,), 3)))


def test_symmetry_predicate():
    assert is_symmetric(schur_monomials(SkewShape((3, 2), (1,)), 3))
    assert not is_symmetric(X(0, 2))
    assert is_symmetric(MonomialPoly(3))


def test_m_basis():
    lam = (2, 1)
    assert to_m_basis(monomial_symmetric(lam, 3)) == {lam: 1}
    assert to_m_basis(complete(2, 2)) == {(2,): 1, (1, 1): 1}
    with pytest.raises(PreconditionError):
        to_m_basis(X(0, 2))


def test_schur_basis():
    assert to_schur_basis(schur_monomials((3, 1), 3)) == {(3, 1): 1}
    sq = multiply(schur_monomials((1,), 2), schur_monomials((1,), 2))
    assert to_schur_basis(sq) == {(2,): 1, (1, 1): 1}
    # m_(1,1) = s_(1,1); m_(2) = s_(2) - s_(1,1)
    assert to_schur_basis(monomial_symmetric((2,), 3)) == SchurExpansion({(2,): 1, (1, 1): -1})
    with pytest.raises(PreconditionError):
        to_schur_basis(X(0, 2))
    with pytest.raises(PreconditionError):
        to_schur_basis(MonomialPoly.one(2) + X(0, 2) + X(1, 2))


def test_schur_basis_round_trip():
    rng = random.Random(6)
    small = [lam for d in range(1, 5) for lam in partitions(d, max_parts=4)]
    for _ in range(25):
        n = rng.randint(1, 4)
        a, b = rng.choice(small), rng.choice(small)
        if sum(a) + sum(b) > 8:
            continue
        P = multiply(schur_monomials(a, n), schur_monomials(b, n)).scale(rng.randint(1, 3))
        rebuilt = MonomialPoly(n)
        for nu, c in to_schur_basis(P):
            rebuilt = rebuilt + schur_monomials(nu, n).scale(c)
        assert rebuilt == P


def test_degree_guard():
    with pytest.raises(ResourceError):
        schur_monomials((6, 6, 6), 9, limit=1000)


def test_product_oracle_small():
    assert schur_product_oracle((1,), (1,), 2) == {(2,): 1, (1, 1): 1}
