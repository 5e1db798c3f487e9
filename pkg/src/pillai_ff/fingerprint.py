"""Modular fingerprints of rational functions.

An element of Q(x) is reduced to its values at two points modulo a prime
below 2**31. Evaluation is a ring homomorphism wherever every denominator is
a unit, so equal elements always get equal fingerprints; the converse can fail
and every fingerprint match must be confirmed exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _accel
from .errors import PillaiError
from .field import Poly, RatFunc, as_ratfunc

SOLVER_PRIME = 2147483647
ORACLE_PRIME = 2147483629


class UnluckyReduction(PillaiError):
    """A denominator vanishes modulo the prime at every attempted point."""


def _poly_residue(p: Poly, t: int, prime: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        den = c.denominator % prime
        if not den:
            raise UnluckyReduction(f"coefficient denominator divisible by {prime}")
        acc = (acc * t + c.numerator * pow(den, -1, prime)) % prime
    return acc


def residue(f, t: int, prime: int) -> int:
    f = as_ratfunc(f)
    den = _poly_residue(f.den, t, prime)
    if not den:
        raise UnluckyReduction("denominator vanishes at the evaluation point")
    return _poly_residue(f.num, t, prime) * pow(den, -1, prime) % prime


@dataclass(frozen=True)
class Fingerprint:
    prime: int
    points: tuple[int, int]

    def residues(self, f) -> np.ndarray:
        return np.array([residue(f, t, self.prime) for t in self.points], dtype=np.int64)

    def table(self, terms: Sequence[tuple[RatFunc, RatFunc]], length: int) -> np.ndarray:
        """Residues of sum_i a_i * alpha_i**n for n = 1..length, shape (2, length)."""
        coef = np.array([[residue(a, t, self.prime) for a, _ in terms] for t in self.points],
                        dtype=np.int64)
        root = np.array([[residue(r, t, self.prime) for _, r in terms] for t in self.points],
                        dtype=np.int64)
        return _accel.power_sum_table(coef, root, length, self.prime)

    def pack(self, residues: np.ndarray) -> np.ndarray:
        """One int64 key per column of a (2, ...) residue array."""
        return residues[0] * self.prime + residues[1]


def choose_fingerprint(elements: Iterable, prime: int = SOLVER_PRIME, seed: int = 0,
                       attempts: int = 64) -> Fingerprint:
    """Two evaluation points at which every given element reduces cleanly."""
    elements = [as_ratfunc(f) for f in elements]
    rng = random.Random(seed)
    for _ in range(attempts):
        pts = (rng.randrange(2, prime), rng.randrange(2, prime))
        if pts[0] == pts[1]:
            continue
        try:
            for f in elements:
                for t in pts:
                    residue(f, t, prime)
        except UnluckyReduction:
            continue
        return Fingerprint(prime, pts)
    raise UnluckyReduction(f"no clean evaluation points modulo {prime}")
