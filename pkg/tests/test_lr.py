from itertools import product
from math import comb

import pytest

from lrrule.errors import PreconditionError, ShapeMismatchError
from lrrule.lr import (SchurExpansion, commute_bijection, expansion_by_filtering,
                       factor_bijection, horizontal_strips, jdt_count, kostka,
                       lr_coefficient, pieri_row, product_coefficient, schur_product,
                       skew_expand, switch_bijection)
from lrrule.polyoracle import schur_monomials, to_schur_basis
from lrrule.shapes import SkewShape, contains, dominance_leq, partitions, product_shape
from lrrule.tableaux import (canonical, count_standard, enumerate_lr, enumerate_tableaux,
                             is_lr_tableau, weight)
from lrrule.textio import format_tableau, parse_tableau

BIG = "5:0,0,0,0|5:1,1|5:2|0:0,0,1,2,3|0:1,1,2,3|0:2,2,4|0:3|0:4"
L_STAR = "5:0|4:0|3:0,1|1:0,2|1:1"


def test_coefficient_examples(L):
    assert lr_coefficient(product_shape((2, 2), (2, 2)), (4, 2, 1, 1)) == 0
    assert lr_coefficient(SkewShape((3, 1)), (3, 1)) == 1
    # frozen from the polynomial oracle: s_χ(5) decomposed by elimination
    c = lr_coefficient(L.shape, (5, 4, 3, 1, 1))
    assert c == 4
    assert lr_coefficient(SkewShape(L.outer, (5, 4, 3, 1, 1)), L.inner) == 4
    with pytest.raises(ShapeMismatchError):
        lr_coefficient(SkewShape((2,)), (1,))


def test_frozen_coefficient_against_oracle(L):
    assert to_schur_basis(schur_monomials(L.shape, 5))[(5, 4, 3, 1, 1)] == 4


def test_product_examples():
    e = schur_product((4, 3, 1), (2, 2, 1))
    assert e.total() == 34
    assert schur_product((3, 1), ()) == {(3, 1): 1}
    assert schur_product((1,), (1,)) == {(2,): 1, (1, 1): 1}


def test_product_coefficient_agrees():
    for lam, mu in [((2, 1), (2, 1)), ((3, 1), (2,)), ((2, 2), (2, 2))]:
        for nu, c in schur_product(lam, mu):
            assert product_coefficient(lam, mu, nu) == c


def test_expansion_text_and_json():
    e = SchurExpansion({(5, 5, 1): 2, (6, 4, 1): 1})
    assert str(e) == "1*[6,4,1] + 2*[5,5,1]"
    assert e.to_json() == {"expansion": [{"partition": [6, 4, 1], "coeff": 1},
                                         {"partition": [5, 5, 1], "coeff": 2}]}
    assert str(SchurExpansion()) == "0"
    assert SchurExpansion({(2,): 0}) == SchurExpansion()
    with pytest.raises(PreconditionError):
        SchurExpansion({(2,): 1, (1,): 1})


def test_skew_expand_examples():
    assert skew_expand(SkewShape((2, 1), (1,))) == {(2,): 1, (1, 1): 1}
    assert skew_expand(SkewShape((3, 2))) == {(3, 2): 1}
    assert skew_expand(product_shape((2, 1), (1, 1))) == schur_product((2, 1), (1, 1))


def test_skew_expand_letter_bound_is_a_restriction():
    chi = SkewShape((4, 3, 2), (2, 1))
    full = skew_expand(chi)
    for n in range(1, 6):
        assert skew_expand(chi, n) == full.restrict(n)


def test_single_search_matches_per_weight_search():
    for chi in [SkewShape((4, 3, 1), (2,)), product_shape((2, 1), (2, 1)), SkewShape((3, 3, 2), (2, 1))]:
        assert skew_expand(chi) == expansion_by_filtering(chi)


def _skew_shapes(max_cells):
    for d in range(max_cells + 4):
        for outer in partitions(d):
            for k in range(d + 1):
                for inner in partitions(k):
                    if len(inner) <= len(outer) and all(outer[i] >= p for i, p in enumerate(inner)):
                        if 0 < d - k <= max_cells and d <= max_cells + 3:
                            yield SkewShape(outer, inner)


def test_oracle_equivalence_skew_shapes():
    checked = 0
    for chi in _skew_shapes(8):
        if chi.size < 6 and chi.inner and len(chi.outer) <= 5:
            assert skew_expand(chi, 4) == to_schur_basis(schur_monomials(chi, 4)), chi
            checked += 1
    assert checked > 50


def test_oracle_equivalence_size_eight():
    for chi in [SkewShape((4, 3, 2, 1), (2,)), SkewShape((5, 3, 2), (2,)), SkewShape((4, 4, 2), (1, 1)),
                product_shape((3, 1), (2, 2)), product_shape((2, 1, 1), (3, 1))]:
        assert chi.size == 8
        assert skew_expand(chi, 4) == to_schur_basis(schur_monomials(chi, 4))


def test_kostka():
    for d in range(6):
        for lam in partitions(d):
            assert kostka(lam, lam) == 1
            for mu in partitions(d):
                if not dominance_leq(mu, lam):
                    assert kostka(lam, mu) == 0
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((3, 2), (1, 2, 2)) == kostka((3, 2), (2, 2, 1))
    with pytest.raises(ShapeMismatchError):
        kostka((2,), (1,))


def test_kostka_matches_enumeration():
    lam = (3, 2, 1)
    counts = {}
    for t in enumerate_tableaux(SkewShape(lam), 4):
        w = weight(t) + (0,) * (4 - len(weight(t)))
        counts[w] = counts.get(w, 0) + 1
    for w, c in counts.items():
        assert kostka(lam, w) == c


def test_pieri_examples():
    assert pieri_row((2, 1), 1) == {(3, 1): 1, (2, 2): 1, (2, 1, 1): 1}
    assert pieri_row((3, 1), 0) == {(3, 1): 1}
    assert pieri_row((), 4) == {(4,): 1}
    with pytest.raises(PreconditionError):
        list(horizontal_strips((1,), -1))


def test_factor_bijection_example(L):
    big = parse_tableau(BIG)
    lam, mu = (5, 4, 3, 1, 1), (4, 2, 1)
    assert big.shape == product_shape(lam, mu)
    assert factor_bijection(big, lam, mu) == L
    assert factor_bijection(L, lam, mu, "backward") == big


def test_factor_bijection_trivial():
    mu = (2, 1)
    C = canonical(mu)
    image = factor_bijection(C, (), mu)
    assert len(image) == 0 and image.inner == mu
    assert factor_bijection(image, (), mu, "backward") == C


def test_factor_bijection_round_trips():
    lam, mu = (3, 2), (2, 1)
    for nu in partitions(8):
        sources = list(enumerate_lr(product_shape(lam, mu), nu))
        images = [factor_bijection(t, lam, mu) for t in sources]
        if contains(nu, mu):
            assert set(images) == set(enumerate_lr(SkewShape(nu, mu), lam))
        else:
            assert not images
        for t, m in zip(sources, images):
            assert factor_bijection(m, lam, mu, "backward") == t


def test_factor_bijection_rejects_non_lr(T):
    with pytest.raises(PreconditionError):
        factor_bijection(T, (1,), (1,))


def test_switch_bijection_example(L):
    star = switch_bijection(L, (5, 4, 3, 1, 1), (4, 2, 1))
    assert format_tableau(star) == L_STAR
    assert is_lr_tableau(star, (4, 2, 1))
    assert switch_bijection(star, (4, 2, 1), (5, 4, 3, 1, 1)) == L


def test_switch_bijection_empty_mu():
    C = canonical((3, 1))
    assert switch_bijection(C, (3, 1), ()) == parse_tableau("3:|1:")


def test_switch_bijection_is_bijective():
    lam, mu = (3, 1), (2, 1)
    for nu in partitions(7):
        if len(nu) < 2 or nu[0] < 3 or nu[1] < 1:
            continue
        left = list(enumerate_lr(SkewShape(nu, mu), lam))
        right = set(enumerate_lr(SkewShape(nu, lam), mu))
        assert {switch_bijection(t, lam, mu) for t in left} == right


def test_commute_bijection():
    lam, mu = (3, 2), (2, 1)
    for nu in partitions(8):
        here = list(enumerate_lr(product_shape(lam, mu), nu))
        there = set(enumerate_lr(product_shape(mu, lam), nu))
        images = [commute_bijection(t, lam, mu) for t in here]
        assert len(set(images)) == len(images) and set(images) == there
        for t, u in zip(here, images):
            assert commute_bijection(u, mu, lam) == t


def test_commute_bijection_square():
    lam = (2, 1)
    for nu in partitions(6):
        here = set(enumerate_lr(product_shape(lam, lam), nu))
        assert {commute_bijection(t, lam, lam) for t in here} == here


def test_product_symmetry():
    small = [lam for d in range(5) for lam in partitions(d)]
    for lam, mu in product(small, repeat=2):
        assert schur_product(lam, mu) == schur_product(mu, lam)


def test_jdt_fibres_independent_of_target():
    for chi in [SkewShape((3, 2), (1,)), SkewShape((3, 2, 1), (2,)), SkewShape((3, 3), (2,)),
                SkewShape((4, 2), (1, 1))]:
        for nu, c in skew_expand(chi):
            targets = list(enumerate_tableaux(SkewShape(nu), len(nu) + 1))[:6]
            for C in targets:
                assert jdt_count(chi, C) == c


def test_dimension_identity():
    for lam, mu in [((2, 1), (2,)), ((3, 1), (2, 1)), ((4, 3, 1), (2, 2, 1))]:
        total = sum(c * count_standard(SkewShape(nu)) for nu, c in schur_product(lam, mu))
        expected = (comb(sum(lam) + sum(mu), sum(lam))
                    * count_standard(SkewShape(lam)) * count_standard(SkewShape(mu)))
        assert total == expected
