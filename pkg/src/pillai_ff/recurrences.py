"""Simple linear recurrences in Binet form and the predicates the theorems assume."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, NamedTuple, Sequence

import numpy as np

from .errors import InvalidRecurrence, NonPolynomialInput, NotDominant, NotFound
from .field import RatFunc, as_ratfunc, rf_pow
from .fingerprint import SOLVER_PRIME, UnluckyReduction, choose_fingerprint
from .independence import is_mult_independent
from .places import INFINITY, Place, PlaceBasis, divisor_vector, gcd_free_basis, height


@dataclass(frozen=True)
class Recurrence:
    """G_n = sum_i a_i * alpha_i**n with pairwise distinct nonzero roots.

    ``offset`` only records how far the sequence has been shifted from the
    caller's original indexing: G_n here equals the original G_{n + offset}.
    """

    terms: tuple[tuple[RatFunc, RatFunc], ...]
    offset: int = 0

    def __post_init__(self):
        terms = tuple((as_ratfunc(a), as_ratfunc(r)) for a, r in self.terms)
        if not terms:
            raise InvalidRecurrence("a recurrence needs at least one term")
        for a, r in terms:
            if not a or not r:
                raise InvalidRecurrence("coefficients and roots must be nonzero")
        roots = [r for _, r in terms]
        if len(set(roots)) != len(roots):
            raise InvalidRecurrence("characteristic roots must be pairwise distinct")
        if self.offset < 0:
            raise InvalidRecurrence("offset must be nonnegative")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def of(cls, *pairs, offset: int = 0) -> "Recurrence":
        return cls(tuple(pairs), offset)

    @property
    def order(self) -> int:
        return len(self.terms)

    @property
    def coefficients(self) -> tuple[RatFunc, ...]:
        return tuple(a for a, _ in self.terms)

    @property
    def roots(self) -> tuple[RatFunc, ...]:
        return tuple(r for _, r in self.terms)

    def elements(self) -> list[RatFunc]:
        return [*self.coefficients, *self.roots]

    def is_polynomial(self) -> bool:
        return all(f.is_polynomial() for f in self.elements())

    def reordered(self, order: Sequence[int]) -> "Recurrence":
        return Recurrence(tuple(self.terms[i] for i in order), self.offset)

    def __str__(self) -> str:
        return " + ".join(f"({a})*({r})^n" for a, r in self.terms)

    def describe(self) -> list[dict]:
        return [{"a": str(a), "alpha": str(r)} for a, r in self.terms]


def eval_recurrence(G: Recurrence, n: int) -> RatFunc:
    if n < 0:
        raise ValueError("index must be nonnegative")
    total = RatFunc.constant(0)
    for a, r in G.terms:
        total = total + a * rf_pow(r, n)
    return total


def iter_values(G: Recurrence, upto: int) -> Iterator[RatFunc]:
    """G_1, ..., G_upto with one multiplication per root per step."""
    current = [a * r for a, r in G.terms]
    for _ in range(upto):
        total = current[0]
        for c in current[1:]:
            total = total + c
        yield total
        current = [c * r for c, (_, r) in zip(current, G.terms)]


def apply_shift(G: Recurrence, k: int) -> Recurrence:
    if k < 0:
        raise ValueError("shift must be nonnegative")
    if k == 0:
        return G
    return Recurrence(tuple((a * rf_pow(r, k), r) for a, r in G.terms), G.offset + k)


@dataclass(frozen=True)
class HypothesisReport:
    theorem: str
    passed: bool
    violations: tuple[str, ...]
    dominant_place: str | None = None
    n0: tuple[int, int] = (0, 0)
    n1: tuple[int, int] = (0, 0)
    prepared: tuple[Recurrence, Recurrence] | None = field(default=None, compare=False, repr=False)

    def to_dict(self) -> dict:
        out = {
            "theorem": self.theorem,
            "passed": self.passed,
            "violations": list(self.violations),
            "dominant_place": self.dominant_place,
            "N0": list(self.n0),
            "N1": list(self.n1),
        }
        if self.prepared is not None:
            out["offsets"] = [self.prepared[0].offset, self.prepared[1].offset]
        return out


def _root_checks(roots, name: str) -> list[str]:
    out = []
    for i, r in enumerate(roots, 1):
        if r.is_constant():
            out.append(f"{name}_{i} ∈ ℂ")
    for i, j in combinations(range(len(roots)), 2):
        if (roots[i] / roots[j]).is_constant():
            out.append(f"ratio {name}_{i + 1}/{name}_{j + 1} ∈ ℂ")
    return out


def check_theorem1_hypotheses(G: Recurrence, H: Recurrence) -> HypothesisReport:
    violations = _root_checks(G.roots, "α") + _root_checks(H.roots, "β")
    return HypothesisReport("T1", not violations, tuple(violations), prepared=(G, H))


# dominant roots ---------------------------------------------------------------


def joint_basis(*recurrences: Recurrence) -> PlaceBasis:
    return gcd_free_basis([f for R in recurrences for f in R.elements()])


def _vals(f, place: Place, basis: PlaceBasis) -> int:
    vec = divisor_vector(as_ratfunc(f), basis)
    return vec[-1] if place.is_infinity else vec[place.index]


def dominant_index(G: Recurrence, place: Place, basis: PlaceBasis) -> int | None:
    """Index of the nu-dominant root at ``place``; d = 1 always yields 0."""
    if G.order == 1:
        return 0
    vals = [_vals(r, place, basis) for r in G.roots]
    low = min(vals)
    if low < 0 and vals.count(low) == 1:
        return vals.index(low)
    return None


class DominantRoot(NamedTuple):
    index: int
    place: Place
    basis: PlaceBasis
    recurrence: Recurrence  # dominant term moved to the front


def _front(G: Recurrence, i: int) -> Recurrence:
    return G.reordered([i] + [j for j in range(G.order) if j != i])


def find_nu_dominant(G: Recurrence) -> DominantRoot:
    """The (root, place) pair with the smallest dominant valuation.

    Places are scanned infinity first, then clusters in basis order; ties
    keep the first.
    """
    basis = joint_basis(G)
    best = None
    for place in [INFINITY] + basis.places(with_infinity=False):
        i = dominant_index(G, place, basis)
        if i is None:
            continue
        v = _vals(G.roots[i], place, basis)
        if G.order > 1 or v < 0:
            if best is None or v < best[0]:
                best = (v, i, place)
    if best is None:
        if G.order == 1:
            return DominantRoot(0, INFINITY, basis, G)
        raise NotFound("no place has a dominant root")
    _, i, place = best
    return DominantRoot(i, place, basis, _front(G, i))


def _threshold(lhs_const: Sequence[int], lhs_slope: Sequence[int]) -> int:
    """Smallest N >= 0 with n * slope_i > const_i for all n > N and all i (slopes > 0)."""
    n = 0
    for c, s in zip(lhs_const, lhs_slope):
        n = max(n, c // s)
    return n


def immediate_effect_threshold(G: Recurrence, place: Place, basis: PlaceBasis | None = None) -> int:
    """Smallest N1 with nu(a_1 alpha_1^n) < nu(a_i alpha_i^n) for all n > N1, i >= 2."""
    if G.order == 1:
        return 0
    basis = basis or joint_basis(G)
    if dominant_index(G, place, basis) != 0:
        raise NotDominant("the first root is not dominant at this place")
    va = [_vals(a, place, basis) for a in G.coefficients]
    vr = [_vals(r, place, basis) for r in G.roots]
    return _threshold([va[0] - va[i] for i in range(1, G.order)],
                      [vr[i] - vr[0] for i in range(1, G.order)])


def weak_coefficients_threshold(G: Recurrence) -> int:
    """Smallest N0 such that deg alpha_i > deg alpha_j forces deg(a_i alpha_i^n) > deg(a_j alpha_j^n), n > N0."""
    if not G.is_polynomial():
        raise NonPolynomialInput("weak coefficients are defined for polynomial recurrences")
    consts, slopes = [], []
    for (a_i, r_i), (a_j, r_j) in ((s, t) for s in G.terms for t in G.terms):
        if r_i.num.degree > r_j.num.degree:
            consts.append(a_j.num.degree - a_i.num.degree)
            slopes.append(r_i.num.degree - r_j.num.degree)
    return _threshold(consts, slopes)


def relevance_order(G: Recurrence) -> tuple[Recurrence, int]:
    """Terms sorted by (deg alpha desc, deg a desc, index asc) and the size of R_G."""
    if not G.is_polynomial():
        raise NonPolynomialInput("relevant sets are defined for polynomial recurrences")
    key = [(-r.num.degree, -a.num.degree, i) for i, (a, r) in enumerate(G.terms)]
    order = [k[2] for k in sorted(key)]
    top = key[order[0]][:2]
    size = sum(1 for k in key if k[:2] == top)
    return G.reordered(order), size


def relevant_set(G: Recurrence) -> frozenset[int]:
    ordered, size = relevance_order(G)
    positions = {t: i for i, t in enumerate(G.terms)}
    return frozenset(positions[t] for t in ordered.terms[:size])


def check_no_multiple_values(G: Recurrence, up_to: int, method: str = "fingerprint") -> bool:
    """True iff n -> G_n is injective on [1, up_to]."""
    if up_to < 1:
        raise ValueError("up_to must be positive")
    if method == "fingerprint":
        try:
            return _injective_fingerprint(G, up_to)
        except UnluckyReduction:
            method = "exact"
    if method != "exact":
        raise ValueError(f"unknown method {method!r}")
    seen = set()
    for value in iter_values(G, up_to):
        key = value.key()
        if key in seen:
            return False
        seen.add(key)
    return True


def _injective_fingerprint(G: Recurrence, up_to: int) -> bool:
    fp = choose_fingerprint(G.elements(), SOLVER_PRIME, seed=11)
    keys = fp.pack(fp.table(G.terms, up_to))
    _, inverse, counts = np.unique(keys, return_inverse=True, return_counts=True)
    for group in np.flatnonzero(counts > 1):
        members = np.flatnonzero(inverse == group) + 1
        values = {eval_recurrence(G, int(n)).key() for n in members}
        if len(values) < len(members):
            return False
    return True


# theorem-level hypothesis bundles --------------------------------------------


def check_theorem2_hypotheses(G: Recurrence, H: Recurrence) -> HypothesisReport:
    """Shared nu-dominant place, non-constant independent dominant roots.

    Places are tried in the order infinity, then clusters in basis order; the
    first place satisfying everything is used and both recurrences are shifted
    so the dominant roots have immediate effect from n = 1.
    """
    basis = joint_basis(G, H)
    first_failure = None
    for place in [INFINITY] + basis.places(with_infinity=False):
        i, j = dominant_index(G, place, basis), dominant_index(H, place, basis)
        if i is None or j is None:
            continue
        Gp, Hp = _front(G, i), _front(H, j)
        alpha, beta = Gp.roots[0], Hp.roots[0]
        violations = []
        if alpha.is_constant():
            violations.append("α_1 ∈ ℂ")
        if beta.is_constant():
            violations.append("β_1 ∈ ℂ")
        if not violations and not is_mult_independent(alpha, beta):
            violations.append("α_1, β_1 multiplicatively dependent")
        label = place.label(basis)
        if violations:
            if first_failure is None:
                first_failure = HypothesisReport("T2", False, tuple(violations), label)
            continue
        n1 = (immediate_effect_threshold(Gp, place, basis), immediate_effect_threshold(Hp, place, basis))
        prepared = (apply_shift(Gp, n1[0]), apply_shift(Hp, n1[1]))
        return HypothesisReport("T2", True, (), label, n1=n1, prepared=prepared)
    if first_failure is not None:
        return first_failure
    return HypothesisReport("T2", False, ("no place at which both recurrences have a ν-dominant root",))


def check_theorem3_hypotheses(G: Recurrence, H: Recurrence) -> HypothesisReport:
    """Polynomial input, weak coefficients (after shifting), non-constant relevant
    roots and root quotients, and the required independent pairs.

    Injectivity is checked separately, on the enumeration range.
    """
    bad = [name for name, R in (("G", G), ("H", H)) if not R.is_polynomial()]
    if bad:
        return HypothesisReport("T3", False, tuple(f"{n} is not a polynomial recurrence" for n in bad))
    n0 = (weak_coefficients_threshold(G), weak_coefficients_threshold(H))
    Gs, kg = relevance_order(apply_shift(G, n0[0]))
    Hs, kh = relevance_order(apply_shift(H, n0[1]))
    violations = _root_checks(Gs.roots[:kg], "α") + _root_checks(Hs.roots[:kh], "β")
    if not violations:
        alpha1, beta1 = Gs.roots[0], Hs.roots[0]
        for j, gamma in enumerate(Hs.roots[:kh], 1):
            if not is_mult_independent(alpha1, gamma):
                violations.append(f"(α_1, β_{j}) multiplicatively dependent")
        for i, delta in enumerate(Gs.roots[1:kg], 2):
            if not is_mult_independent(delta, beta1):
                violations.append(f"(α_{i}, β_1) multiplicatively dependent")
    return HypothesisReport("T3", not violations, tuple(violations), n0=n0,
                            prepared=(Gs, Hs) if not violations else None)


def relevant_sizes(G: Recurrence, H: Recurrence) -> tuple[int, int]:
    return relevance_order(G)[1], relevance_order(H)[1]


def max_height(elements) -> int:
    return max(height(f) for f in elements)
