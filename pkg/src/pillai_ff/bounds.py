"""Effective bounds for G_n - H_m = f and for double representations.

Every bound is an exact rational recorded constant by constant in a
BoundReport. Case analyses whose realized branch depends on an unknown
vanishing subsum are combined by taking the maximum over all branches that
can occur for the given orders (d, t); every Brownawell-Masser application
inside the double-representation theorems uses the largest possible arity
k = 2(d + t) - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, floor

from .errors import ConstantBase, HypothesisViolation, InvariantFailure, ZeroF
from .field import Poly, as_ratfunc
from .independence import lemma2_bound
from .places import height, s_set_size
from .recurrences import (
    Recurrence,
    check_no_multiple_values,
    check_theorem1_hypotheses,
    check_theorem2_hypotheses,
    check_theorem3_hypotheses,
    relevance_order,
)
from .report import BoundReport, Ledger


@dataclass(frozen=True)
class BoundParams:
    s_size: int
    genus: int = 0

    def __post_init__(self):
        if self.s_size < 1:
            raise ValueError("|S| must be positive")
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")


def bm_bound(k: int, params: BoundParams) -> int:
    """binom(k, 2) * (|S| + max(0, 2g - 2))."""
    if k < 1:
        raise ValueError("k must be positive")
    return comb(k, 2) * (params.s_size + max(0, 2 * params.genus - 2))


def _degree(p) -> int:
    p = as_ratfunc(p)
    if not p.is_polynomial():
        raise ValueError(f"{p} is not a polynomial")
    return p.num.degree


def corollary_bound(p, q, f) -> Fraction:
    """(1 + deg p + deg q + 2 deg f) / min(deg p, deg q)."""
    dp, dq, df = _degree(p), _degree(q), _degree(f)
    if df < 0:
        raise ZeroF("f must be nonzero")
    if dp < 1 or dq < 1:
        raise ConstantBase("p and q must be non-constant")
    return Fraction(1 + dp + dq + 2 * df, min(dp, dq))


def corollary_report(p, q, f) -> BoundReport:
    bound = corollary_bound(p, q, f)
    led = Ledger("COROLLARY")
    for name, v in (("p", p), ("q", q), ("f", f)):
        led.note(name, str(as_ratfunc(v)))
    dp, dq, df = _degree(p), _degree(q), _degree(f)
    led.put("|S| upper bound", 1 + dp + dq + df)
    led.put("numerator", 1 + dp + dq + 2 * df)
    led.put("min degree", min(dp, dq))
    led.case("three summands, no proper vanishing subsum")
    return led.finish(led.put("C", bound))


def _h(f) -> int:
    return height(f)


def _ratio_heights(values) -> list[int]:
    return [_h(values[i] / values[j]) for i, j in combinations(range(len(values)), 2)]


def _describe(led: Ledger, G: Recurrence, H: Recurrence) -> None:
    led.note("G", str(G))
    led.note("H", str(H))
    led.note("d", G.order)
    led.note("t", H.order)


# Theorem 1 --------------------------------------------------------------------


def theorem1_bound(G: Recurrence, H: Recurrence, f, genus: int = 0) -> BoundReport:
    f = as_ratfunc(f)
    if not f:
        raise ZeroF("f must be nonzero")
    hyp = check_theorem1_hypotheses(G, H)
    if not hyp.passed:
        raise HypothesisViolation("; ".join(hyp.violations), hyp)

    led = Ledger("T1")
    _describe(led, G, H)
    led.note("f", str(f))
    s = s_set_size([f, *G.elements(), *H.elements()])
    led.note("|S|", s)
    led.note("genus", genus)
    coeffs, roots = G.coefficients + H.coefficients, G.roots + H.roots
    min_root = min(_h(r) for r in roots)
    max_root = max(_h(r) for r in roots)

    c1 = led.put("C1", bm_bound(G.order + H.order, BoundParams(s, genus)))
    c2 = led.put("C2", c1 + max(_h(-f / a) for a in coeffs))
    c3 = led.put("C3", c2 / min_root)
    led.case("minimal vanishing subsum through 1: n, m <= C3")
    candidates = [c3]

    coef_ratios = _ratio_heights(G.coefficients) + _ratio_heights(H.coefficients)
    root_ratios = _ratio_heights(G.roots) + _ratio_heights(H.roots)
    c4 = led.put("C4", c1 + max(coef_ratios, default=0))
    if root_ratios:
        candidates.append(led.put("C5", c4 / min(root_ratios)))
        led.case("subsum pairs two terms of one family: C5")
    else:
        led.case("C5 undefined (d = t = 1)")
    c6 = led.put("C6", c1 + max(_h(a) for a in G.coefficients)
                 + max(_h(b) for b in H.coefficients) + c3 * max_root)
    candidates.append(led.put("C7", c6 / min_root))
    led.case("subsum pairs a term of each family: C7")
    return led.finish(max(candidates), prepared=(G, H))


# Theorem 2 --------------------------------------------------------------------


def _order_one(led: Ledger, G: Recurrence, H: Recurrence, cbm: int) -> Fraction:
    (a1, alpha1), (b1, beta1) = G.terms[0], H.terms[0]
    c1 = led.put("C1", cbm)
    c2 = led.put("C2", c1 + _h(b1 / a1))
    led.case("d = t = 1, no proper vanishing subsum: Lemma 2 with L = C2")
    c3 = led.put("C3", led.sub("C3: lemma2(β_1, α_1, C2)", lemma2_bound(beta1, alpha1, c2)))
    split = _h(a1 / b1)
    led.case("d = t = 1, two vanishing subsums: Lemma 2 with L = H(a_1/b_1)")
    c4 = led.put("C4", led.sub("C4: lemma2(β_1, α_1, H(a_1/b_1))", lemma2_bound(beta1, alpha1, split)))
    return max(c3, c4)


def _single_vs_dominant(led: Ledger, single: Recurrence, multi: Recurrence, cbm: int,
                        names: tuple[str, str]) -> Fraction:
    """One side has order 1, the other has order > 1 with a dominant first root."""
    s, m = names
    (a, alpha), (b1, beta1) = single.terms[0], multi.terms[0]
    c5 = led.put("C5", cbm)
    L = led.put("L6", c5 + _h(a / b1))
    c6 = led.put("C6", led.sub(f"C6: lemma2({s}_1, {m}_1, L6)", lemma2_bound(alpha, beta1, L)))
    led.case(f"dominant {m}_1 term shares a minimal vanishing subsum with the {s}_1 term: C6")
    omega = max([_h(b) + c6 * _h(beta) for b, beta in multi.terms] + [_h(a) + c6 * _h(alpha)])
    led.put("H(ω) bound", omega)
    c7 = led.put("C7", cbm + omega + _h(a))
    remaining = led.put(f"{s}-exponent bound", c7 / _h(alpha))
    led.case(f"remaining {s}_1 term bounded through a partner ω: C7 / H({s}_1)")
    return led.put("C8", max(c6, remaining))


def _both_dominant(led: Ledger, G: Recurrence, H: Recurrence, cbm: int) -> Fraction:
    (a1, alpha1), (b1, beta1) = G.terms[0], H.terms[0]
    c9 = led.put("C9", cbm)
    L = led.put("L10", c9 + _h(a1 / b1))
    led.case("d > 1, t > 1: dominant terms share a minimal vanishing subsum")
    return led.put("C10", led.sub("C10: lemma2(β_1, α_1, L10)", lemma2_bound(beta1, alpha1, L)))


def _arity(G: Recurrence, H: Recurrence) -> int:
    return 2 * (G.order + H.order) - 1


def _double_rep_setup(led: Ledger, G: Recurrence, H: Recurrence, genus: int) -> int:
    _describe(led, G, H)
    s = s_set_size([*G.elements(), *H.elements()])
    k = _arity(G, H)
    led.note("|S|", s)
    led.note("genus", genus)
    led.note("k", k)
    return int(led.put("C_BM", bm_bound(k, BoundParams(s, genus))))


def theorem2_bound(G: Recurrence, H: Recurrence, genus: int = 0) -> BoundReport:
    hyp = check_theorem2_hypotheses(G, H)
    if not hyp.passed:
        raise HypothesisViolation("; ".join(hyp.violations), hyp)
    G, H = hyp.prepared
    led = Ledger("T2")
    led.note("place", hyp.dominant_place)
    cbm = _double_rep_setup(led, G, H, genus)
    d, t = G.order, H.order
    if d == 1 and t == 1:
        final = _order_one(led, G, H, cbm)
    elif d == 1:
        led.case("d = 1, t > 1")
        final = _single_vs_dominant(led, G, H, cbm, ("α", "β"))
    elif t == 1:
        led.case("d > 1, t = 1 (roles of G and H exchanged)")
        final = _single_vs_dominant(led, H, G, cbm, ("β", "α"))
    else:
        final = _both_dominant(led, G, H, cbm)
    limit = floor(final)
    if limit >= 1:
        for name, R in (("G", G), ("H", H)):
            if not check_no_multiple_values(R, limit):
                raise InvariantFailure(f"{name} repeats a value although its dominant root forbids it")
    return led.finish(final, offsets=(G.offset, H.offset), prepared=(G, H))


# Theorem 3 --------------------------------------------------------------------


def _quotient_bound(cbm: int, coef_lead, coef_other, root_lead, root_other) -> Fraction:
    """n * H(root_other / root_lead) <= cbm + H(coef_lead / coef_other)."""
    return Fraction(cbm + _h(coef_lead / coef_other), _h(root_other / root_lead))


def _t3_single(led: Ledger, single: Recurrence, multi: Recurrence, k_multi: int, cbm: int,
               names: tuple[str, str]) -> Fraction:
    s, m = names
    (a, alpha), (b1, beta1) = single.terms[0], multi.terms[0]
    firsts = []
    for j in range(1, k_multi):
        b, beta = multi.terms[j]
        c2 = led.put(f"C2[{m}_{j + 1}]", cbm + _h(b1 / b))
        firsts.append(led.put(f"C3[{m}_{j + 1}]", c2 / _h(beta / beta1)))
    if firsts:
        led.case(f"subsum through {m}_1^M holds another relevant {m}-term: C3")
    c4 = led.put("C4", cbm)
    L = led.put("L5", c4 + _h(a / b1))
    c5 = led.put("C5", led.sub(f"C5: lemma2({s}_1, {m}_1, L5)", lemma2_bound(alpha, beta1, L)))
    led.case(f"subsum through {m}_1^M holds the {s}_1-term: C5")
    c6 = led.put("C6", max(firsts + [c5]))
    omega = max(_h(b) + c6 * _h(beta) for b, beta in multi.terms)
    led.put("H(ω) bound", omega)
    c7 = led.put("C7", cbm + omega + _h(a))
    remaining = led.put(f"{s}-exponent bound", c7 / _h(alpha))
    led.case(f"{s}_1 terms bounded through a partner ω: C7 / H({s}_1)")
    return led.put("C8", max(c6, remaining))


def _t3_orientation(led: Ledger, P: Recurrence, kp: int, Q: Recurrence, kq: int, cbm: int,
                    tag: str, names: tuple[str, str]) -> Fraction:
    """Both orders > 1, the lead term of P having the larger degree."""
    p, q = names
    (a1, alpha1), (b1, beta1) = P.terms[0], Q.terms[0]
    results = []
    for j in range(kq):
        b, beta = Q.terms[j]
        L = led.put(f"{tag}.L10[{q}_{j + 1}]", cbm + _h(a1 / b))
        label = f"{tag}.C10[{q}_{j + 1}]"
        results.append(led.put(label, led.sub(f"{label}: lemma2({p}_1, {q}_{j + 1}, L)",
                                              lemma2_bound(alpha1, beta, L))))
    led.case(f"{tag}: subsum through {p}_1^N holds a relevant {q}-term: C10")
    if kp >= 2:
        c12 = led.put(f"{tag}.C12", max(_quotient_bound(cbm, a1, P.terms[i][0], alpha1, P.terms[i][1])
                                        for i in range(1, kp)))
        parts = [c12]
        if kq >= 2:
            parts.append(led.put(f"{tag}.C13", max(
                _quotient_bound(cbm, b1, Q.terms[j][0], beta1, Q.terms[j][1]) for j in range(1, kq))))
        partner = max(_h(a) + c12 * _h(alpha) for a, alpha in P.terms)
        c15 = led.put(f"{tag}.C15", (cbm + partner + _h(b1)) / _h(beta1))
        parts.append(c15)
        results.append(led.put(f"{tag}.C16", max(parts)))
        led.case(f"{tag}: subsum through {p}_1^N holds another relevant {p}-term: C12, then C13/C15")
    return max(results)


def theorem3_bound(G: Recurrence, H: Recurrence, genus: int = 0) -> BoundReport:
    hyp = check_theorem3_hypotheses(G, H)
    if not hyp.passed:
        raise HypothesisViolation("; ".join(hyp.violations), hyp)
    G, H = hyp.prepared
    kg, kh = relevance_order(G)[1], relevance_order(H)[1]
    led = Ledger("T3")
    cbm = _double_rep_setup(led, G, H, genus)
    led.note("|R_G|", kg)
    led.note("|R_H|", kh)
    d, t = G.order, H.order
    if d == 1 and t == 1:
        led.case("d = t = 1: same chain as the dominant-root theorem")
        final = _order_one(led, G, H, cbm)
    elif d == 1:
        led.case("d = 1, t > 1")
        final = _t3_single(led, G, H, kh, cbm, ("α", "β"))
    elif t == 1:
        led.case("d > 1, t = 1 (roles of G and H exchanged)")
        final = _t3_single(led, H, G, kg, cbm, ("β", "α"))
    else:
        final = max(_t3_orientation(led, G, kg, H, kh, cbm, "A", ("α", "β")),
                    _t3_orientation(led, H, kh, G, kg, cbm, "B", ("β", "α")))
    limit = floor(final)
    if limit >= 1:
        for name, R in (("G", G), ("H", H)):
            if not check_no_multiple_values(R, limit):
                raise HypothesisViolation(f"{name} has multiple values on [1, {limit}]")
    return led.finish(final, offsets=(G.offset, H.offset), prepared=(G, H))


def bound_for(mode: str, G: Recurrence, H: Recurrence, f=None, genus: int = 0) -> BoundReport:
    if mode == "T1":
        return theorem1_bound(G, H, f, genus)
    if mode == "T2":
        return theorem2_bound(G, H, genus)
    if mode == "T3":
        return theorem3_bound(G, H, genus)
    raise ValueError(f"unknown mode {mode!r}")


__all__ = [
    "BoundParams", "bm_bound", "corollary_bound", "corollary_report", "theorem1_bound",
    "theorem2_bound", "theorem3_bound", "bound_for", "Poly",
]
