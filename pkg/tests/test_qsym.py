from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gpqsym.qpoly import QPolynomial
from gpqsym.qsym import (
    M,
    QSymExpr,
    antipode,
    antipode_recursive,
    binomial,
    coarsenings,
    compositions,
    concat_product,
    coproduct,
    eval_q,
    from_int_coeffs,
    power_of_m1,
    principal_specialization,
    reverse,
    shift,
    unit,
)
from gpqsym.oracles import series_product_check

small_comps = st.integers(1, 4).flatmap(lambda w: st.sampled_from(list(compositions(w))))
exprs = st.dictionaries(small_comps, st.integers(-4, 4), max_size=3).map(from_int_coeffs)


def test_compositions_count_and_order():
    for n in range(1, 8):
        cs = list(compositions(n))
        assert len(cs) == 2 ** (n - 1)
        assert all(sum(c) == n for c in cs)
        assert cs == sorted(cs, key=lambda a: (len(a), a))
    assert list(compositions(0)) == [()]


def test_coarsenings_of_a_composition():
    assert sorted(coarsenings((1, 1, 1))) == sorted([(1, 1, 1), (2, 1), (1, 2), (3,)])
    assert list(coarsenings((5,))) == [(5,)]


def test_small_products():
    assert M(1) * M(1) == M(1, 1, coeff=2) + M(2)
    assert M(1) * M(2) == M(1, 2) + M(2, 1) + M(3)
    assert M(1) * unit() == M(1)
    assert concat_product(M(1), M(2)) == M(1, 2)


@settings(max_examples=40, deadline=None)
@given(exprs, exprs)
def test_quasi_shuffle_matches_truncated_series(f, g):
    assert series_product_check(f, g, 3)


@given(exprs, exprs, exprs)
def test_product_is_commutative_and_associative(f, g, h):
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)


def test_power_of_m1_is_repeated_product():
    acc = unit()
    for n in range(1, 6):
        acc = acc * M(1)
        assert power_of_m1(n) == acc


def test_antipode_matches_recursive_definition():
    for w in range(1, 8):
        for alpha in compositions(w):
            assert antipode(M(*alpha)) == antipode_recursive(M(*alpha)), alpha


def test_antipode_axiom():
    # m (S tensor id) Delta = unit * counit on every monomial of weight <= 6
    for w in range(1, 7):
        for alpha in compositions(w):
            acc = QSymExpr()
            for left, right in coproduct(alpha):
                acc = acc + antipode(M(*left)) * M(*right)
            assert acc == QSymExpr(), alpha


def test_antipode_is_an_involution_and_multiplicative():
    for w in range(1, 6):
        for alpha in compositions(w):
            assert antipode(antipode(M(*alpha))) == M(*alpha)
    f, g = M(1, 2), M(2) + M(1, 1)
    assert antipode(f * g) == antipode(f) * antipode(g)


def test_antipode_examples():
    assert antipode(M(1)) == -M(1)
    assert antipode(M(1, 2)) == M(2, 1) + M(3)


def test_principal_specialization_counts_increasing_indices():
    for m in range(0, 5):
        for alpha in [(1,), (2, 1), (1, 1, 1), (3, 1, 2)]:
            brute = sum(1 for idx in product(range(m), repeat=len(alpha))
                        if all(a < b for a, b in zip(idx, idx[1:])))
            assert principal_specialization(M(*alpha), m) == QPolynomial.constant(brute)


def test_extended_binomial():
    assert binomial(-1, 3) == -1
    assert binomial(-2, 2) == 3
    assert binomial(4, 5) == 0


def test_reverse_and_shift():
    f = M(1, 2, coeff=QPolynomial((0, 3))) + M(3)
    assert reverse(f) == M(2, 1, coeff=QPolynomial((0, 3))) + M(3)
    assert reverse(reverse(f)) == f
    assert shift(M(1, 2) + M(3, coeff=5), 2) == M(1, 2, 2) + M(3, 2, coeff=5)
    with pytest.raises(ValueError):
        shift(M(1), 0)


def test_eval_q():
    f = M(2, coeff=QPolynomial((1, 1))) + M(1, 1, coeff=QPolynomial((0, 2)))
    assert eval_q(f, 0) == {(2,): 1}
    assert eval_q(f, 1) == {(2,): 2, (1, 1): 2}


def test_invalid_compositions_rejected():
    with pytest.raises(ValueError):
        M(0, 1)
    with pytest.raises(ValueError):
        M(-1)


def test_json_round_trip():
    f = M(1, 2, coeff=QPolynomial((10**25, -3))) + M(4)
    assert QSymExpr.from_json(f.to_json()) == f
