"""Integer kernels for the enumeration hot loops.

Each kernel has a numba implementation and a pure-numpy one with identical
results. The numba path is used when numba imports and the environment
variable ``PILLAI_FF_DISABLE_NUMBA`` is unset (or "0"). All residues are
int64 values in [0, p) with p < 2**31, so every product fits in int64.
"""

from __future__ import annotations

import os
from types import SimpleNamespace

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

DISABLED = os.environ.get("PILLAI_FF_DISABLE_NUMBA", "0").lower() not in ("", "0", "false", "no")
USE_NUMBA = numba is not None and not DISABLED


# numpy ----------------------------------------------------------------------


def _np_power_sum_table(coef, root, length, p):
    K, d = coef.shape
    exps = np.arange(1, length + 1, dtype=np.int64)
    acc = np.ones((K, d, length), dtype=np.int64)
    base = np.repeat(root[:, :, None], length, axis=2)
    bit = 0
    while (exps >> bit).any():
        take = ((exps >> bit) & 1).astype(bool)
        acc = np.where(take, acc * base % p, acc)
        base = base * base % p
        bit += 1
    return (coef[:, :, None] * acc % p).sum(axis=1) % p


def _np_match_grid(g_tab, h_tab, target, p):
    N, M = g_tab.shape[1], h_tab.shape[1]
    rows = max(1, (1 << 20) // max(M, 1))
    ns, ms = [], []
    for start in range(0, N, rows):
        g = g_tab[:, start:start + rows]
        diff = (g[:, :, None] - h_tab[:, None, :] - target[:, None, None]) % p
        n_idx, m_idx = np.nonzero((diff == 0).all(axis=0))
        ns.append(n_idx + start)
        ms.append(m_idx)
    if not ns:
        return np.zeros(0, np.int64), np.zeros(0, np.int64)
    return np.concatenate(ns).astype(np.int64), np.concatenate(ms).astype(np.int64)


def _np_difference_keys(g_tab, h_tab, p):
    d0 = (g_tab[0][:, None] - h_tab[0][None, :]) % p
    d1 = (g_tab[1][:, None] - h_tab[1][None, :]) % p
    return d0 * p + d1


def _np_quotient_heights(vg, vd, weights, nmax, mmax):
    n = np.arange(1, nmax + 1, dtype=np.int64)[None, :, None]
    m = np.arange(1, mmax + 1, dtype=np.int64)[None, None, :]
    vals = n * vg[:, None, None] - m * vd[:, None, None]
    return (weights[:, None, None] * np.maximum(vals, 0)).sum(axis=0)


numpy_kernels = SimpleNamespace(
    power_sum_table=_np_power_sum_table,
    match_grid=_np_match_grid,
    difference_keys=_np_difference_keys,
    quotient_heights=_np_quotient_heights,
)


# numba ----------------------------------------------------------------------


def _build_numba():
    njit = numba.njit(cache=True, nogil=True)

    @njit
    def power_sum_table(coef, root, length, p):
        K, d = coef.shape
        out = np.zeros((K, length), dtype=np.int64)
        for k in range(K):
            for i in range(d):
                r = root[k, i]
                cur = coef[k, i] * r % p
                for n in range(length):
                    out[k, n] = (out[k, n] + cur) % p
                    cur = cur * r % p
        return out

    @njit
    def match_grid(g_tab, h_tab, target, p):
        K, N = g_tab.shape
        M = h_tab.shape[1]
        n_buf = np.empty(16, dtype=np.int64)
        m_buf = np.empty(16, dtype=np.int64)
        need = np.empty(K, dtype=np.int64)
        count = 0
        for n in range(N):
            # h must equal g - target in every row; residues are already reduced
            for k in range(K):
                need[k] = (g_tab[k, n] - target[k]) % p
            for m in range(M):
                if h_tab[0, m] != need[0]:
                    continue
                ok = True
                for k in range(1, K):
                    if h_tab[k, m] != need[k]:
                        ok = False
                        break
                if ok:
                    if count == n_buf.shape[0]:
                        n_new = np.empty(2 * count, dtype=np.int64)
                        m_new = np.empty(2 * count, dtype=np.int64)
                        n_new[:count] = n_buf
                        m_new[:count] = m_buf
                        n_buf, m_buf = n_new, m_new
                    n_buf[count] = n
                    m_buf[count] = m
                    count += 1
        return n_buf[:count].copy(), m_buf[:count].copy()

    @njit
    def difference_keys(g_tab, h_tab, p):
        N = g_tab.shape[1]
        M = h_tab.shape[1]
        out = np.empty((N, M), dtype=np.int64)
        for n in range(N):
            g0 = g_tab[0, n]
            g1 = g_tab[1, n]
            for m in range(M):
                out[n, m] = ((g0 - h_tab[0, m]) % p) * p + (g1 - h_tab[1, m]) % p
        return out

    @njit
    def quotient_heights(vg, vd, weights, nmax, mmax):
        out = np.zeros((nmax, mmax), dtype=np.int64)
        P = vg.shape[0]
        for n in range(1, nmax + 1):
            for m in range(1, mmax + 1):
                s = 0
                for q in range(P):
                    v = n * vg[q] - m * vd[q]
                    if v > 0:
                        s += weights[q] * v
                out[n - 1, m - 1] = s
        return out

    return SimpleNamespace(
        power_sum_table=power_sum_table,
        match_grid=match_grid,
        difference_keys=difference_keys,
        quotient_heights=quotient_heights,
    )


numba_kernels = _build_numba() if numba is not None else None
kernels = numba_kernels if USE_NUMBA else numpy_kernels


def backend_name() -> str:
    return "numba" if kernels is numba_kernels else "numpy"


def _i64(a):
    return np.ascontiguousarray(a, dtype=np.int64)


def power_sum_table(coef, root, length: int, p: int) -> np.ndarray:
    """T[k, n-1] = sum_i coef[k, i] * root[k, i]**n mod p for n = 1..length."""
    if length <= 0:
        return np.zeros((coef.shape[0], 0), dtype=np.int64)
    return kernels.power_sum_table(_i64(coef), _i64(root), int(length), int(p))


def match_grid(g_tab, h_tab, target, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Zero-based (n, m) with g_tab[:, n] - h_tab[:, m] == target (mod p) in every row.

    h_tab must hold reduced residues in [0, p).
    """
    return kernels.match_grid(_i64(g_tab), _i64(h_tab), _i64(target), int(p))


def difference_keys(g_tab, h_tab, p: int) -> np.ndarray:
    """Packed two-row residue of g_tab[:, n] - h_tab[:, m] as one int64 key per (n, m)."""
    return kernels.difference_keys(_i64(g_tab), _i64(h_tab), int(p))


def quotient_heights(vg, vd, weights, nmax: int, mmax: int) -> np.ndarray:
    """H(g^n / d^m) for 1 <= n <= nmax, 1 <= m <= mmax from divisor vectors."""
    return kernels.quotient_heights(_i64(vg), _i64(vd), _i64(weights), int(nmax), int(mmax))
