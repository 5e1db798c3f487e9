"""Multiplicative independence and the quotient-height bound.

Two nonzero elements are multiplicatively dependent exactly when one of them
is constant or their divisor vectors (over a joint basis, infinity included)
are proportional. The quotient bound turns H(g^n / d^m) <= L into an upper
bound on max(n, m).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from . import _accel
from .errors import ConstantInput, DependentInputs, NoSharedSupportCase
from .field import as_ratfunc
from .places import Place, PlaceBasis, divisor_vector, gcd_free_basis, height
from .report import BoundReport, Ledger


@dataclass(frozen=True)
class SeparatingPair:
    nu: Place
    mu: Place
    ratios: tuple[Fraction, Fraction]
    basis: PlaceBasis
    # C2 per unit of L; the pair minimizing it is chosen
    scale: Fraction

    def labels(self) -> tuple[str, str]:
        return self.nu.label(self.basis), self.mu.label(self.basis)


def _vectors(gamma, delta):
    basis = gcd_free_basis([gamma, delta])
    places = basis.places(with_infinity=True)
    return basis, places, divisor_vector(gamma, basis), divisor_vector(delta, basis)


def is_mult_independent(gamma, delta) -> bool:
    gamma, delta = as_ratfunc(gamma), as_ratfunc(delta)
    if not gamma or not delta:
        raise ValueError("independence is only defined for nonzero elements")
    if gamma.is_constant() or delta.is_constant():
        return False
    _, _, v, w = _vectors(gamma, delta)
    return any(v[i] * w[j] != v[j] * w[i] for i, j in combinations(range(len(v)), 2))


def find_separating_pair(gamma, delta) -> SeparatingPair:
    """The pair of places (nu, mu) with nonzero valuations and distinct ratios
    minimizing (1/|nu(d)| + 1/|mu(d)|) / |nu(g)/nu(d) - mu(g)/mu(d)|.

    Scan order is basis order with infinity last; ties keep the first pair.
    """
    gamma, delta = as_ratfunc(gamma), as_ratfunc(delta)
    if not is_mult_independent(gamma, delta):
        raise DependentInputs(f"{gamma} and {delta} are multiplicatively dependent")
    basis, places, v, w = _vectors(gamma, delta)
    usable = [i for i in range(len(places)) if v[i] and w[i]]
    best = None
    for i, j in combinations(usable, 2):
        r1, r2 = Fraction(v[i], w[i]), Fraction(v[j], w[j])
        if r1 == r2:
            continue
        scale = (Fraction(1, abs(w[i])) + Fraction(1, abs(w[j]))) / abs(r1 - r2)
        if best is None or scale < best.scale:
            best = SeparatingPair(places[i], places[j], (r1, r2), basis, scale)
    if best is None:
        raise NoSharedSupportCase("no two places separate the valuation ratios")
    return best


def _one_sided(v, w) -> tuple[bool, bool]:
    """(n-branch applies, m-branch applies) from the sign patterns of the divisors."""
    n_side = any((a > 0 and b <= 0) or (a < 0 and b >= 0) for a, b in zip(v, w))
    m_side = any((b > 0 and a <= 0) or (b < 0 and a >= 0) for a, b in zip(v, w))
    return n_side, m_side


def lemma2_bound(gamma, delta, L) -> BoundReport:
    """Bound C with H(gamma^n / delta^m) <= L  =>  max(n, m) <= C."""
    gamma, delta = as_ratfunc(gamma), as_ratfunc(delta)
    L = Fraction(L)
    if L < 0:
        raise ValueError("L must be nonnegative")
    if not gamma or not delta or gamma.is_constant() or delta.is_constant():
        raise ConstantInput("both elements must be non-constant")
    if not is_mult_independent(gamma, delta):
        raise DependentInputs(f"{gamma} and {delta} are multiplicatively dependent")

    led = Ledger("L2")
    led.note("gamma", str(gamma))
    led.note("delta", str(delta))
    led.note("L", L)
    h_gamma, h_delta = height(gamma), height(delta)
    _, places, v, w = _vectors(gamma, delta)
    n_side, m_side = _one_sided(v, w)

    branches = []
    if n_side:
        led.case("gamma has a zero or pole not shared by delta: n <= L")
        c3 = led.put("n-branch C3", L)
        c4 = led.put("n-branch C4", L + c3 * h_gamma)
        branches.append(led.put("n-branch C", max(c3, c4 / h_delta)))
    if m_side:
        led.case("delta has a zero or pole not shared by gamma: m <= L")
        c3 = led.put("m-branch C3", L)
        c4 = led.put("m-branch C4", L + c3 * h_delta)
        branches.append(led.put("m-branch C", max(c3, c4 / h_gamma)))
    if branches:
        if len(branches) > 1:
            led.case("both one-sided branches apply: minimum taken")
        return led.finish(min(branches))

    pair = find_separating_pair(gamma, delta)
    nu_label, mu_label = pair.labels()
    led.case(f"identical zero/pole support: separating places ({nu_label}, {mu_label})")
    i, j = places.index(pair.nu), places.index(pair.mu)
    c1 = led.put("C1", L / abs(w[i]) + L / abs(w[j]))
    c2 = led.put("C2", c1 / abs(pair.ratios[0] - pair.ratios[1]))
    c3 = led.put("C3", max(L, c2))
    c4 = led.put("C4", L + c3 * h_gamma)
    return led.finish(max(c3, c4 / h_delta))


def quotient_height_table(gamma, delta, nmax: int, mmax: int) -> np.ndarray:
    """T[n-1, m-1] = H(gamma^n / delta^m) for 1 <= n <= nmax, 1 <= m <= mmax.

    Computed from divisor vectors: the height is the total degree of the
    zero divisor, i.e. the weighted sum of positive valuations.
    """
    gamma, delta = as_ratfunc(gamma), as_ratfunc(delta)
    if not gamma or not delta:
        raise ValueError("heights of quotients need nonzero elements")
    basis, places, v, w = _vectors(gamma, delta)
    weights = [basis.weight(p) for p in places]
    return _accel.quotient_heights(v, w, weights, nmax, mmax)
