"""Places, divisors, heights and S-unit sets over Q(x).

Points of C are never computed individually. A family of elements is split
over a gcd-free basis: pairwise coprime, squarefree, monic polynomials
("clusters"). A cluster of degree k stands for its k complex roots, and every
element expressible over the basis has the same valuation at all of them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import AllConstant, NotExpressible, ZeroElement
from .field import Poly, RatFunc, as_ratfunc, poly_gcd, squarefree_factors

INFINITE_HEIGHT = math.inf


@dataclass(frozen=True, order=True)
class Place:
    """A finite place cluster (by index into a PlaceBasis) or the place at infinity."""

    index: int | None = None

    @property
    def is_infinity(self) -> bool:
        return self.index is None

    def label(self, basis: PlaceBasis) -> str:
        return "inf" if self.index is None else str(basis.clusters[self.index])


INFINITY = Place(None)


def Finite(index: int) -> Place:
    return Place(index)


def _cluster_key(p: Poly) -> tuple:
    return (p.degree, p.coeffs)


@dataclass(frozen=True)
class PlaceBasis:
    clusters: tuple[Poly, ...]
    includes_infinity: bool

    def places(self, with_infinity: bool | None = None) -> list[Place]:
        """Finite clusters in basis order, then infinity (if included)."""
        out = [Place(i) for i in range(len(self.clusters))]
        if self.includes_infinity if with_infinity is None else with_infinity:
            out.append(INFINITY)
        return out

    def weight(self, place: Place) -> int:
        """Number of complex places the given place stands for."""
        return 1 if place.is_infinity else self.clusters[place.index].degree

    @property
    def s_size(self) -> int:
        return sum(c.degree for c in self.clusters) + (1 if self.includes_infinity else 0)


def _refine(polys: Iterable[Poly]) -> list[Poly]:
    basis: list[Poly] = []
    pending = [p for p in polys if p.degree > 0]
    while pending:
        q = pending.pop()
        if q.degree <= 0:
            continue
        for i, b in enumerate(basis):
            g = poly_gcd(q, b)
            if g.degree > 0:
                basis.pop(i)
                basis.extend(piece for piece in (g, (b // g).monic()) if piece.degree > 0)
                pending.append((q // g).monic())
                break
        else:
            basis.append(q)
    return sorted(basis, key=_cluster_key)


def gcd_free_basis(elements: Sequence) -> PlaceBasis:
    """Smallest coprime squarefree basis over which every input splits."""
    pieces = []
    infinite = False
    for f in elements:
        f = as_ratfunc(f)
        if not f:
            raise ZeroElement("gcd-free basis of a family containing 0")
        if f.num.degree != f.den.degree:
            infinite = True
        for p in (f.num, f.den):
            pieces.extend(factor for factor, _ in squarefree_factors(p))
    return PlaceBasis(tuple(_refine(pieces)), infinite)


def _strip_cluster(p: Poly, cluster: Poly) -> tuple[int, Poly]:
    k = 0
    while p.degree >= cluster.degree:
        q, r = divmod(p, cluster)
        if r:
            break
        p, k = q, k + 1
    if poly_gcd(p, cluster).degree > 0:
        raise NotExpressible(f"{cluster} splits a factor that is not in the basis")
    return k, p


def valuation(f, place: Place, basis: PlaceBasis) -> int:
    f = as_ratfunc(f)
    if not f:
        raise ZeroElement("valuation of 0 is not an integer")
    if place.is_infinity:
        return f.den.degree - f.num.degree
    cluster = basis.clusters[place.index]
    return _strip_cluster(f.num, cluster)[0] - _strip_cluster(f.den, cluster)[0]


@lru_cache(maxsize=65536)
def divisor_vector(f: RatFunc, basis: PlaceBasis) -> tuple[int, ...]:
    """Valuations at every cluster (basis order) followed by infinity.

    Raises NotExpressible unless f splits completely over the basis. The
    infinity entry is always present, even if the basis excludes it.
    """
    if not f:
        raise ZeroElement("divisor of 0")
    out = []
    num, den = f.num, f.den
    for cluster in basis.clusters:
        up, num = _strip_cluster(num, cluster)
        down, den = _strip_cluster(den, cluster)
        out.append(up - down)
    if num.degree > 0 or den.degree > 0:
        raise NotExpressible(f"{f} has zeros or poles outside the basis")
    out.append(f.den.degree - f.num.degree)
    return tuple(out)


@dataclass(frozen=True)
class Divisor:
    entries: dict
    basis: PlaceBasis

    def weighted_sum(self) -> int:
        return sum(self.basis.weight(p) * v for p, v in self.entries.items())

    def __getitem__(self, place: Place) -> int:
        return self.entries.get(place, 0)


def divisor(f, basis: PlaceBasis) -> Divisor:
    vec = divisor_vector(as_ratfunc(f), basis)
    entries = {Place(i): v for i, v in enumerate(vec[:-1])}
    entries[INFINITY] = vec[-1]
    return Divisor(entries, basis)


def height(f):
    """max(deg num, deg den); INFINITE_HEIGHT for 0."""
    f = as_ratfunc(f)
    if not f:
        return INFINITE_HEIGHT
    return max(f.num.degree, f.den.degree)


def height_via_divisor(f):
    """-sum min(0, v) over the divisor of f, weighted by cluster degree."""
    f = as_ratfunc(f)
    if not f:
        return INFINITE_HEIGHT
    basis = gcd_free_basis([f])
    vec = divisor_vector(f, basis)
    weights = [c.degree for c in basis.clusters] + [1]
    return -sum(w * min(0, v) for w, v in zip(weights, vec))


@dataclass(frozen=True)
class SUnitSpec:
    basis: PlaceBasis
    cardinality: int


def s_unit_spec(elements: Sequence) -> SUnitSpec:
    elements = [as_ratfunc(f) for f in elements]
    if any(not f for f in elements):
        raise ZeroElement("S-units are nonzero")
    if all(f.is_constant() for f in elements):
        raise AllConstant("every element is constant; S would be empty")
    basis = gcd_free_basis(elements)
    return SUnitSpec(basis, basis.s_size)


def s_set_size(elements: Sequence) -> int:
    return s_unit_spec(elements).cardinality


def _supported(p: Poly, product: Poly) -> bool:
    while p.degree > 0:
        g = poly_gcd(p, product)
        if g.degree <= 0:
            return False
        p = p // g
    return True


def is_s_unit(f, spec: SUnitSpec) -> bool:
    f = as_ratfunc(f)
    if not f:
        return False
    basis = spec.basis
    if not basis.includes_infinity and f.num.degree != f.den.degree:
        return False
    product = Poly.constant(1)
    for c in basis.clusters:
        product = product * c
    return _supported(f.num, product) and _supported(f.den, product)
