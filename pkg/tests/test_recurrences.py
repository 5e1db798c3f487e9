import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from pillai_ff.errors import InvalidRecurrence, NonPolynomialInput, NotDominant
from pillai_ff.field import ONE, X, Poly, RatFunc, rf_pow
from pillai_ff.places import INFINITY, valuation
from pillai_ff.recurrences import (
    Recurrence,
    apply_shift,
    check_no_multiple_values,
    check_theorem1_hypotheses,
    check_theorem2_hypotheses,
    check_theorem3_hypotheses,
    eval_recurrence,
    find_nu_dominant,
    immediate_effect_threshold,
    iter_values,
    joint_basis,
    relevant_set,
    weak_coefficients_threshold,
)

from conftest import int_polys

R = Recurrence.of
C = lambda c: Poly([c])  # noqa: E731


@st.composite
def recurrences(draw, max_order=3, root_degree=3, coef_degree=2):
    order = draw(st.integers(1, max_order))
    roots = draw(st.lists(int_polys(1, root_degree), min_size=order, max_size=order,
                          unique_by=lambda p: p.coeffs))
    coefs = draw(st.lists(int_polys(0, coef_degree), min_size=order, max_size=order))
    return Recurrence(tuple(zip(coefs, roots)))


def test_eval_examples():
    assert eval_recurrence(R((ONE, X)), 3) == RatFunc(X**3)
    G = R((C(2), X), (X + ONE, X**2))
    assert eval_recurrence(G, 1) == RatFunc(X**3 + X**2 + 2 * X)
    with pytest.raises(InvalidRecurrence):
        R((ONE, X), (-ONE, X))
    with pytest.raises(InvalidRecurrence):
        R((Poly(), X))


def test_theorem1_examples():
    assert check_theorem1_hypotheses(R((ONE, X)), R((ONE, X + ONE))).passed
    rep = check_theorem1_hypotheses(R((ONE, X), (ONE, 2 * X)), R((ONE, X + ONE)))
    assert rep.violations == ("ratio α_1/α_2 ∈ ℂ",)
    rep = check_theorem1_hypotheses(R((X, C(3))), R((ONE, X + ONE)))
    assert rep.violations == ("α_1 ∈ ℂ",)


def test_dominant_examples():
    dom = find_nu_dominant(R((ONE, X**2), (ONE, X)))
    assert dom.index == 0 and dom.place == INFINITY
    dom = find_nu_dominant(R((ONE, X)))
    assert dom.index == 0 and dom.place == INFINITY
    dom = find_nu_dominant(R((ONE, RatFunc(ONE, X)), (ONE, X)))
    assert dom.index == 1 and dom.place == INFINITY
    assert dom.recurrence.roots[0] == RatFunc(X)


def test_immediate_effect_examples():
    assert immediate_effect_threshold(R((ONE, X**2), (X**3, X)), INFINITY) == 3
    assert immediate_effect_threshold(R((ONE, X)), INFINITY) == 0
    assert immediate_effect_threshold(R((ONE, X**2), (ONE, X)), INFINITY) == 0
    with pytest.raises(NotDominant):
        immediate_effect_threshold(R((ONE, X), (ONE, X**2)), INFINITY)


def test_shift_examples():
    shifted = apply_shift(R((ONE, X)), 2)
    assert shifted.terms == ((RatFunc(X**2), RatFunc(X)),) and shifted.offset == 2
    G = R((ONE, X), (C(3), X + ONE))
    assert apply_shift(G, 0) is G
    assert eval_recurrence(apply_shift(G, 3), 1) == eval_recurrence(G, 4)


def test_weak_coefficients_examples():
    assert weak_coefficients_threshold(R((ONE, X**2), (X**3, X))) == 3
    assert weak_coefficients_threshold(R((ONE, X**2), (X, X**2 + ONE))) == 0
    assert weak_coefficients_threshold(R((X, X**2), (ONE, X))) == 0
    with pytest.raises(NonPolynomialInput):
        weak_coefficients_threshold(R((ONE, RatFunc(ONE, X))))


def test_relevant_set_examples():
    assert relevant_set(R((ONE, X**2 + ONE), (X, X**2), (ONE, X))) == {1}
    assert relevant_set(R((ONE, X**2), (ONE, X**2 + ONE))) == {0, 1}
    assert relevant_set(R((ONE, X))) == {0}


def test_no_multiple_values_examples():
    for method in ("fingerprint", "exact"):
        assert check_no_multiple_values(R((ONE, X)), 20, method)
        # a constant root alone does not repeat values: 3, 9, 27, ...
        assert check_no_multiple_values(R((ONE, C(3))), 2, method)
        # root 1 gives the constant sequence 3, 3, ...
        assert not check_no_multiple_values(R((C(3), ONE)), 2, method)
        # (-1)^n alternates, so G_1 = G_3
        assert not check_no_multiple_values(R((X, C(-1))), 3, method)
        assert check_no_multiple_values(R((ONE, C(-1)), (ONE, X)), 30, method)


def test_theorem2_checks():
    rep = check_theorem2_hypotheses(R((ONE, X)), R((ONE, X)))
    assert not rep.passed and "dependent" in rep.violations[0]
    rep = check_theorem2_hypotheses(R((ONE, X**2), (X**3, X)), R((ONE, X + ONE)))
    assert rep.passed and rep.n1 == (3, 0) and rep.dominant_place == "inf"
    G, H = rep.prepared
    assert G.offset == 3 and eval_recurrence(G, 1) == eval_recurrence(R((ONE, X**2), (X**3, X)), 4)


def test_theorem3_checks():
    G = R((ONE, X**2), (ONE, X))
    H = R((ONE, (X + ONE) ** 2), (ONE, X + ONE))
    assert check_theorem3_hypotheses(G, H).passed
    rep = check_theorem3_hypotheses(R((ONE, X)), R((ONE, X**2)))
    assert not rep.passed and rep.violations == ("(α_1, β_1) multiplicatively dependent",)
    rep = check_theorem3_hypotheses(R((ONE, RatFunc(ONE, X))), R((ONE, X)))
    assert not rep.passed


@given(recurrences(), st.integers(0, 5), st.integers(1, 6))
def test_shift_property(G, k, n):
    assert eval_recurrence(apply_shift(G, k), n) == eval_recurrence(G, n + k)


@given(recurrences(), st.integers(1, 12))
def test_iter_values_matches_eval(G, upto):
    assert list(iter_values(G, upto)) == [eval_recurrence(G, n) for n in range(1, upto + 1)]


@given(recurrences(max_order=3))
def test_immediate_effect_after_shift(G):
    try:
        dom = find_nu_dominant(G)
    except Exception:
        assume(False)
    Gf = dom.recurrence
    basis = joint_basis(Gf)
    N1 = immediate_effect_threshold(Gf, dom.place, basis)
    shifted = apply_shift(Gf, N1)
    for n in range(1, 30):
        vals = [valuation(a * rf_pow(r, n), dom.place, basis) for a, r in shifted.terms]
        assert all(vals[0] < v for v in vals[1:])
    if N1 > 0:
        vals = [valuation(a * rf_pow(r, N1), dom.place, basis) for a, r in Gf.terms]
        assert not all(vals[0] < v for v in vals[1:])


@given(recurrences(max_order=3))
def test_weak_coefficients_after_shift(G):
    N0 = weak_coefficients_threshold(G)
    shifted = apply_shift(G, N0)
    for n in range(1, 30):
        for (a, r), (b, s) in ((p, q) for p in shifted.terms for q in shifted.terms):
            if r.num.degree > s.num.degree:
                assert a.num.degree + n * r.num.degree > b.num.degree + n * s.num.degree


@given(recurrences(), st.lists(st.integers(-5, 5).filter(bool), min_size=3, max_size=3))
def test_relevant_set_scale_invariant(G, scales):
    scaled = Recurrence(tuple((a * RatFunc(C(c)), r) for (a, r), c in zip(G.terms, scales)))
    assert relevant_set(scaled) == relevant_set(G)


@given(recurrences(max_order=2, root_degree=1, coef_degree=1), st.integers(1, 25))
def test_injectivity_methods_agree(G, upto):
    assert check_no_multiple_values(G, upto, "fingerprint") == check_no_multiple_values(G, upto, "exact")
