import random

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from pillai_ff import solver
from pillai_ff.errors import HypothesisViolation, InvariantFailure, PillaiError, ZeroF
from pillai_ff.field import ONE, X, Poly, RatFunc
from pillai_ff.recurrences import Recurrence, eval_recurrence
from pillai_ff.solver import (
    SolutionSet,
    brute_force_oracle,
    corollary_solve,
    double_rep_oracle,
    enumerate_double_rep,
    enumerate_fixed_f,
    restrict,
    restrict_collisions,
    solve_double_rep,
    solve_fixed_f,
    verify_against_oracle,
)

from conftest import int_polys

R = Recurrence.of
G1, H1 = R((ONE, X)), R((ONE, X + ONE))
F1 = X**2 - X - ONE
MODES = [("fingerprint", 1), ("fingerprint", 3), ("exact", 1), ("exact", 3)]


@pytest.mark.parametrize("strategy,workers", MODES)
def test_fixed_f_examples(strategy, workers):
    r = solve_fixed_f(G1, H1, F1, strategy, workers)
    assert r.solutions == ((2, 1),) and r.bound_report.final == 12
    assert solve_fixed_f(G1, H1, ONE, strategy, workers).solutions == ()


@pytest.mark.parametrize("strategy,workers", MODES)
def test_corollary_examples(strategy, workers):
    r = corollary_solve(X**2, X, X**4 - X**3, strategy, workers)
    assert r.solutions == ((2, 3),) and r.bound_report.final == 12
    r = corollary_solve(X, X, X**2 - X, strategy, workers)
    assert r.solutions == ((2, 1),) and r.bound_report.final == 7
    r = corollary_solve(X, X, ONE, strategy, workers)
    assert r.solutions == () and r.bound_report.final == 3


def test_zero_f():
    with pytest.raises(ZeroF):
        solve_fixed_f(G1, H1, Poly())


def test_constructed_solution_is_found():
    rng = random.Random(5)
    found = 0
    while found < 5:
        G = R((Poly([rng.randint(1, 3)]), X + rng.randint(1, 4)), (ONE, X**2 + rng.randint(1, 4)))
        H = R((ONE, X**2 - rng.randint(1, 4)), (ONE, X + 7))
        f = eval_recurrence(G, 5) - eval_recurrence(H, 3)
        try:
            r = solve_fixed_f(G, H, f)
        except HypothesisViolation:
            continue
        assert (5, 3) in r.solutions
        found += 1


@pytest.mark.parametrize("strategy,workers", MODES)
def test_double_rep_examples(strategy, workers):
    r = solve_double_rep(G1, H1, "T2", strategy, workers)
    assert r.collisions == () and r.bound_report.final == 18
    # G_n = (-x)^n, H_m = (x+1)^m: G_1 - H_1 = G_2 - H_2 = -2x - 1
    r = solve_double_rep(R((ONE, -X)), H1, "T2", strategy, workers)
    assert r.collisions == ((RatFunc(-2 * X - ONE), ((1, 1), (2, 2))),)


def test_double_rep_hypotheses():
    with pytest.raises(HypothesisViolation):
        solve_double_rep(G1, G1, "T2")
    with pytest.raises(ValueError):
        solve_double_rep(G1, H1, "T1")


def test_double_rep_reports_offsets():
    G = R((ONE, X**2), (X**3, X))
    r = solve_double_rep(G, H1, "T2")
    assert r.offsets == (3, 0) and r.to_dict()["offsets"] == [3, 0]
    verify_against_oracle(r, G, H1)


def test_oracle_examples():
    assert brute_force_oracle(G1, H1, F1, 50, "direct") == [(2, 1)]
    assert brute_force_oracle(G1, H1, F1, 50, "grid") == [(2, 1)]
    # window 1 inspects only (1, 1), where G_1 - H_1 = -1
    assert brute_force_oracle(G1, H1, F1, 1, "direct") == []
    assert brute_force_oracle(G1, H1, RatFunc(-ONE), 1, "direct") == [(1, 1)]


def test_invariant_failure_on_bad_verification(monkeypatch):
    monkeypatch.setattr(solver, "_check_pair", lambda *a: False)
    with pytest.raises(InvariantFailure):
        enumerate_fixed_f(G1, H1, F1, 12, "exact")


def test_verify_detects_missing_solution():
    good = solve_fixed_f(G1, H1, F1)
    bad = SolutionSet(good.bound_report, ())
    with pytest.raises(InvariantFailure):
        verify_against_oracle(bad, G1, H1, F1)
    verify_against_oracle(good, G1, H1, F1)


@st.composite
def small_pairs(draw):
    def rec():
        order = draw(st.integers(1, 2))
        roots = draw(st.lists(int_polys(1, 2, 2), min_size=order, max_size=order, unique_by=lambda p: p.coeffs))
        coefs = draw(st.lists(int_polys(0, 1, 2), min_size=order, max_size=order))
        return Recurrence(tuple(zip(coefs, roots)))
    return rec(), rec()


@given(small_pairs(), st.integers(1, 4), st.integers(1, 4))
def test_fixed_f_strategies_match_oracle(pair, n0, m0):
    G, H = pair
    f = eval_recurrence(G, n0) - eval_recurrence(H, m0)
    assume(f)
    limit = 15
    expected = brute_force_oracle(G, H, f, limit, "direct")
    assert (n0, m0) in expected
    for strategy, workers in MODES:
        assert enumerate_fixed_f(G, H, f, limit, strategy, workers) == expected


@given(small_pairs())
def test_double_rep_strategies_match_oracle(pair):
    G, H = pair
    limit = 10
    expected = double_rep_oracle(G, H, limit, "direct")
    assert double_rep_oracle(G, H, limit, "grid") == expected
    for strategy, workers in MODES:
        assert enumerate_double_rep(G, H, limit, strategy, workers) == expected


def test_restrict_helpers():
    assert restrict([(1, 2), (5, 1), (2, 2)], 2) == [(1, 2), (2, 2)]
    f = RatFunc(X)
    assert restrict_collisions([(f, ((1, 1), (3, 1))), (f, ((1, 1), (2, 2), (3, 3)))], 2) == [(f, ((1, 1), (2, 2)))]
