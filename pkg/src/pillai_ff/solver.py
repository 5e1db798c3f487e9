"""Certified enumeration of solutions inside an effective bound.

Two strategies produce identical output. ``exact`` keys a dictionary by the
canonical form of each value. ``fingerprint`` reduces every value to two
residues modulo a large prime, lets the integer kernels find candidate
matches, and confirms each candidate by exact subtraction; equal values
always have equal residues, so no solution is lost. Index ranges can be split
across threads; results are merged and sorted, so the thread count never
changes the output.
"""

from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Iterator

import numpy as np

from . import _accel
from .bounds import corollary_report, theorem1_bound, theorem2_bound, theorem3_bound
from .errors import InvariantFailure, ZeroF
from .field import ONE, RatFunc, as_ratfunc, rf_pow
from .fingerprint import ORACLE_PRIME, SOLVER_PRIME, UnluckyReduction, choose_fingerprint
from .recurrences import Recurrence, eval_recurrence
from .report import BoundReport

STRATEGIES = ("fingerprint", "exact")


@dataclass(frozen=True)
class SolutionSet:
    bound_report: BoundReport
    solutions: tuple[tuple[int, int], ...]
    offsets: tuple[int, int] = (0, 0)

    def to_dict(self) -> dict:
        return {
            "kind": "solutions",
            "bound": self.bound_report.to_dict(),
            "enumeration_limit": self.bound_report.enumeration_limit,
            "offsets": list(self.offsets),
            "solutions": [list(p) for p in self.solutions],
        }


@dataclass(frozen=True)
class DoubleRepSet:
    bound_report: BoundReport
    collisions: tuple[tuple[RatFunc, tuple[tuple[int, int], ...]], ...]
    offsets: tuple[int, int] = (0, 0)

    def to_dict(self) -> dict:
        return {
            "kind": "double_representations",
            "bound": self.bound_report.to_dict(),
            "enumeration_limit": self.bound_report.enumeration_limit,
            "offsets": list(self.offsets),
            "collisions": [{"f": str(f), "representations": [list(p) for p in reps]}
                           for f, reps in self.collisions],
        }


# exact evaluation ---------------------------------------------------------------


def values_between(G: Recurrence, start: int, stop: int) -> Iterator[tuple[int, RatFunc]]:
    """(n, G_n) for start <= n <= stop, one multiplication per root per step."""
    current = [a * rf_pow(r, start) for a, r in G.terms]
    for n in range(start, stop + 1):
        total = current[0]
        for c in current[1:]:
            total = total + c
        yield n, total
        current = [c * r for c, (_, r) in zip(current, G.terms)]


def _chunks(limit: int, workers: int) -> list[tuple[int, int]]:
    workers = max(1, min(workers, limit))
    step = -(-limit // workers)
    return [(lo, min(limit, lo + step - 1)) for lo in range(1, limit + 1, step)]


def _parallel(fn, parts, workers: int) -> list:
    if workers <= 1 or len(parts) <= 1:
        return [fn(p) for p in parts]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, parts))


def _check_pair(G: Recurrence, H: Recurrence, n: int, m: int, f: RatFunc) -> bool:
    return eval_recurrence(G, n) - eval_recurrence(H, m) == f


# fixed f ------------------------------------------------------------------------


def _fixed_exact(G, H, f, limit, workers):
    def build(part):
        table = defaultdict(list)
        for n, v in values_between(G, *part):
            table[v.key()].append(n)
        return table

    table = defaultdict(list)
    for part in _parallel(build, _chunks(limit, workers), workers):
        for k, ns in part.items():
            table[k].extend(ns)

    def probe(part):
        return [(n, m) for m, v in values_between(H, *part) for n in table.get((f + v).key(), ())]

    hits = [p for part in _parallel(probe, _chunks(limit, workers), workers) for p in part]
    for n, m in hits:
        if not _check_pair(G, H, n, m, f):
            raise InvariantFailure(f"value-map hit ({n}, {m}) fails exact verification")
    return sorted(hits)


def _fixed_grid(G, H, f, limit, workers, prime, seed):
    fp = choose_fingerprint([f, *G.elements(), *H.elements()], prime, seed)
    g_tab, h_tab = fp.table(G.terms, limit), fp.table(H.terms, limit)
    target = fp.residues(f)

    def scan(part):
        lo, hi = part
        n_idx, m_idx = _accel.match_grid(g_tab[:, lo - 1:hi], h_tab, target, prime)
        return list(zip((n_idx + lo).tolist(), (m_idx + 1).tolist()))

    candidates = [p for part in _parallel(scan, _chunks(limit, workers), workers) for p in part]
    return sorted(p for p in candidates if _check_pair(G, H, *p, f))


def enumerate_fixed_f(G: Recurrence, H: Recurrence, f, limit: int, strategy: str = "fingerprint",
                      workers: int = 1) -> list[tuple[int, int]]:
    """All (n, m) in [1, limit]^2 with G_n - H_m = f."""
    f = as_ratfunc(f)
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    if limit < 1:
        return []
    if strategy == "fingerprint":
        try:
            return _fixed_grid(G, H, f, limit, workers, SOLVER_PRIME, seed=0)
        except UnluckyReduction:
            pass
    return _fixed_exact(G, H, f, limit, workers)


def solve_fixed_f(G: Recurrence, H: Recurrence, f, strategy: str = "fingerprint",
                  workers: int = 1, genus: int = 0) -> SolutionSet:
    f = as_ratfunc(f)
    if not f:
        raise ZeroF("f must be nonzero")
    report = theorem1_bound(G, H, f, genus)
    sols = enumerate_fixed_f(G, H, f, report.enumeration_limit, strategy, workers)
    return SolutionSet(report, tuple(sols), (G.offset, H.offset))


def corollary_solve(p, q, f, strategy: str = "fingerprint", workers: int = 1) -> SolutionSet:
    report = corollary_report(p, q, f)
    G, H = Recurrence.of((ONE, p)), Recurrence.of((ONE, q))
    sols = enumerate_fixed_f(G, H, f, report.enumeration_limit, strategy, workers)
    return SolutionSet(report, tuple(sols))


# double representations ----------------------------------------------------------


def _group_exact(G, H, pairs) -> dict:
    """Exact canonical value -> pairs, for the given candidate pairs."""
    g_vals = {n: eval_recurrence(G, n) for n in sorted({n for n, _ in pairs})}
    h_vals = {m: eval_recurrence(H, m) for m in sorted({m for _, m in pairs})}
    groups = defaultdict(list)
    for n, m in pairs:
        v = g_vals[n] - h_vals[m]
        groups[v.key()].append((n, m, v))
    return groups


def _collisions_from(groups) -> list:
    out = []
    for members in groups.values():
        if len(members) >= 2:
            out.append((members[0][2], tuple(sorted((n, m) for n, m, _ in members))))
    return sorted(out, key=lambda e: e[1])


def _double_exact(G, H, limit, workers):
    h_vals = [v for _, v in values_between(H, 1, limit)]

    def build(part):
        table = defaultdict(list)
        for n, g in values_between(G, *part):
            for m, h in enumerate(h_vals, 1):
                v = g - h
                table[v.key()].append((n, m, v))
        return table

    groups = defaultdict(list)
    for part in _parallel(build, _chunks(limit, workers), workers):
        for k, members in part.items():
            groups[k].extend(members)
    out = _collisions_from(groups)
    for f, reps in out:
        for n, m in reps:
            if not _check_pair(G, H, n, m, f):
                raise InvariantFailure(f"collision member ({n}, {m}) fails exact verification")
    return out


def _double_grid(G, H, limit, workers, prime, seed):
    fp = choose_fingerprint([*G.elements(), *H.elements()], prime, seed)
    g_tab, h_tab = fp.table(G.terms, limit), fp.table(H.terms, limit)

    def keys(part):
        lo, hi = part
        return _accel.difference_keys(g_tab[:, lo - 1:hi], h_tab, prime).ravel()

    flat = np.concatenate(_parallel(keys, _chunks(limit, workers), workers))
    order = np.argsort(flat, kind="stable")
    ordered = flat[order]
    starts = np.flatnonzero(np.r_[True, ordered[1:] != ordered[:-1]])
    sizes = np.diff(np.r_[starts, ordered.size])
    candidates = []
    for s, size in zip(starts[sizes > 1], sizes[sizes > 1]):
        idx = order[s:s + size]
        candidates.append([(int(i) // limit + 1, int(i) % limit + 1) for i in idx])
    out = []
    for group in candidates:
        out.extend(_collisions_from(_group_exact(G, H, group)))
    return sorted(out, key=lambda e: e[1])


def enumerate_double_rep(G: Recurrence, H: Recurrence, limit: int, strategy: str = "fingerprint",
                         workers: int = 1) -> list:
    """Every value G_n - H_m taken by at least two pairs of [1, limit]^2."""
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    if limit < 1:
        return []
    if strategy == "fingerprint":
        try:
            return _double_grid(G, H, limit, workers, SOLVER_PRIME, seed=0)
        except UnluckyReduction:
            pass
    return _double_exact(G, H, limit, workers)


def solve_double_rep(G: Recurrence, H: Recurrence, mode: str = "T2", strategy: str = "fingerprint",
                     workers: int = 1, genus: int = 0) -> DoubleRepSet:
    """Enumeration runs on the shifted recurrences the bound applies to; the
    shifts are reported as offsets."""
    if mode == "T2":
        report = theorem2_bound(G, H, genus)
    elif mode == "T3":
        report = theorem3_bound(G, H, genus)
    else:
        raise ValueError(f"mode must be T2 or T3, not {mode!r}")
    Gp, Hp = report.prepared
    out = enumerate_double_rep(Gp, Hp, report.enumeration_limit, strategy, workers)
    return DoubleRepSet(report, tuple(out), report.offsets)


# oracles ---------------------------------------------------------------------------


def brute_force_oracle(G: Recurrence, H: Recurrence, f, window: int,
                       method: str = "grid") -> list[tuple[int, int]]:
    """All solutions in [1, window]^2, with no bound logic.

    ``direct`` subtracts every pair exactly; ``grid`` screens the square with
    residues modulo a prime different from the solver's and then subtracts
    the survivors exactly.
    """
    f = as_ratfunc(f)
    if window < 1:
        raise ValueError("window must be positive")
    if method == "grid":
        try:
            return _fixed_grid(G, H, f, window, 1, ORACLE_PRIME, seed=7)
        except UnluckyReduction:
            method = "direct"
    if method != "direct":
        raise ValueError(f"unknown method {method!r}")
    h_vals = [v for _, v in values_between(H, 1, window)]
    return [(n, m) for n, g in values_between(G, 1, window)
            for m, h in enumerate(h_vals, 1) if g - h == f]


def double_rep_oracle(G: Recurrence, H: Recurrence, window: int, method: str = "grid") -> list:
    """Every value with at least two representations in [1, window]^2."""
    if window < 1:
        raise ValueError("window must be positive")
    if method == "grid":
        try:
            return _double_grid(G, H, window, 1, ORACLE_PRIME, seed=7)
        except UnluckyReduction:
            method = "direct"
    if method != "direct":
        raise ValueError(f"unknown method {method!r}")
    return _double_exact(G, H, window, 1)


def restrict(pairs, limit: int) -> list[tuple[int, int]]:
    return [(n, m) for n, m in pairs if n <= limit and m <= limit]


def restrict_collisions(collisions, limit: int) -> list:
    """Collisions as seen inside [1, limit]^2 only."""
    out = []
    for f, reps in collisions:
        inside = tuple(p for p in reps if p[0] <= limit and p[1] <= limit)
        if len(inside) >= 2:
            out.append((f, inside))
    return sorted(out, key=lambda e: e[1])


def verify_against_oracle(result, G: Recurrence, H: Recurrence, f=None, multiplier=3) -> None:
    """Cross-check a SolutionSet or DoubleRepSet against the oracle on a window of
    ``multiplier`` times the bound; raises InvariantFailure on any disagreement.

    Double representations are checked on the shifted recurrences recorded in
    the bound report.
    """
    if isinstance(result, DoubleRepSet):
        G, H = result.bound_report.prepared
    limit = result.bound_report.enumeration_limit
    window = max(1, floor(Fraction(multiplier) * limit))
    if isinstance(result, SolutionSet):
        found = brute_force_oracle(G, H, f, window)
        if restrict(found, limit) != list(result.solutions):
            raise InvariantFailure("solver output differs from the oracle inside the bound")
        if len(found) != len(result.solutions):
            raise InvariantFailure("oracle found a solution outside the bound square")
    else:
        found = double_rep_oracle(G, H, window)
        if restrict_collisions(found, limit) != list(result.collisions):
            raise InvariantFailure("solver collisions differ from the oracle inside the bound")
        if any(p[0] > limit or p[1] > limit for _, reps in found for p in reps):
            raise InvariantFailure("oracle found a double representation outside the bound square")
