from fractions import Fraction
from math import floor

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from pillai_ff.errors import ConstantInput, DependentInputs
from pillai_ff.field import ONE, X, Poly, RatFunc, rf_pow
from pillai_ff.independence import (
    find_separating_pair,
    is_mult_independent,
    lemma2_bound,
    quotient_height_table,
)
from pillai_ff.places import height

from conftest import int_polys, ratfuncs

U, V = RatFunc(X), RatFunc(X + ONE)


def uv(a, b):
    return rf_pow(U, a) * rf_pow(V, b)


def test_independence_examples():
    assert is_mult_independent(X, X + ONE)
    assert not is_mult_independent(X**2, X**3)
    assert not is_mult_independent(Poly([5]), X)


def test_separating_pair_examples():
    pair = find_separating_pair(X * (X + ONE) ** 2, X**2 * (X + ONE))
    assert set(pair.labels()) == {"x", "x + 1"}
    assert set(pair.ratios) == {Fraction(1, 2), Fraction(2)}
    # supports {x, x+1, inf} of both; a pair is returned, no error
    find_separating_pair(RatFunc(X, X + ONE), RatFunc(X**2, X + ONE))
    with pytest.raises(DependentInputs):
        find_separating_pair(X, X)


def test_lemma2_examples():
    assert lemma2_bound(X, X + ONE, 7).final == 14
    r = lemma2_bound(X * (X + ONE) ** 2, X**2 * (X + ONE), 6)
    assert [r.constant(k) for k in ("C1", "C2", "C3", "C4")] == [9, 6, 6, 24]
    assert r.final == 8
    assert lemma2_bound(X, X + ONE, 0).final == 0


def test_lemma2_errors():
    with pytest.raises(DependentInputs):
        lemma2_bound(X**2, X**3, 5)
    with pytest.raises(ConstantInput):
        lemma2_bound(Poly([3]), X, 5)
    with pytest.raises(ValueError):
        lemma2_bound(X, X + ONE, -1)


def test_quotient_table_matches_exact_heights():
    g, d = X * (X + ONE) ** 2, RatFunc(X**2 - 2, X + ONE)
    table = quotient_height_table(g, d, 7, 5)
    for n in range(1, 8):
        for m in range(1, 6):
            assert table[n - 1, m - 1] == height(rf_pow(RatFunc(g), n) / rf_pow(d, m))


@pytest.mark.parametrize("a,b,c,d", [(1, 0, 0, 1), (2, 1, 4, 2), (0, 0, 1, 1), (1, -1, -1, 1), (3, 2, 1, -4)])
def test_uv_grid_samples(a, b, c, d):
    expected = not (a * d - b * c == 0 or (a, b) == (0, 0) or (c, d) == (0, 0))
    assert is_mult_independent(uv(a, b), uv(c, d)) == expected


@given(ratfuncs(3), ratfuncs(3))
def test_independence_symmetries(g, d):
    value = is_mult_independent(g, d)
    assert is_mult_independent(d, g) == value
    assert is_mult_independent(1 / g, d) == value


@given(ratfuncs(3), st.integers(-3, 3).filter(bool), st.integers(-5, 5).filter(bool))
def test_scaled_powers_are_dependent(g, k, c):
    assume(not g.is_constant())
    assert not is_mult_independent(g, rf_pow(g, k) * RatFunc(Poly([c])))


def _exhaustive_ok(gamma, delta, L):
    C = lemma2_bound(gamma, delta, L).final
    W = max(3, 3 * floor(C))
    table = quotient_height_table(gamma, delta, W, W)
    n_idx, m_idx = np.nonzero(table <= L)
    return all(max(n + 1, m + 1) <= C for n, m in zip(n_idx, m_idx))


@given(int_polys(1, 3), int_polys(1, 3), st.integers(0, 10))
def test_lemma2_sound_by_exhaustion(gamma, delta, L):
    assume(is_mult_independent(gamma, delta))
    assert _exhaustive_ok(RatFunc(gamma), RatFunc(delta), L)


@given(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3), st.integers(0, 10))
def test_lemma2_sound_shared_support(a, b, c, d, L):
    gamma, delta = uv(a, b), uv(c, d)
    assume(not gamma.is_constant() and not delta.is_constant())
    assume(is_mult_independent(gamma, delta))
    assert _exhaustive_ok(gamma, delta, L)
