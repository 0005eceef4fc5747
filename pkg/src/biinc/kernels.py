"""Hot kernels for exhaustive enumeration: statistic evaluation over arrays
of permutations and array-level generation of the enumerated families.

Rows of a permutation array are one-line words with values 1..n (int8 is
enough for every supported size). The statistic kernels are numba-jitted when
numba is importable; set the environment variable BIINC_NO_NUMBA to any
non-empty value to force the pure-numpy fallback. Both implementations are
importable for benchmarking regardless of the selected backend.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from itertools import permutations as _itertools_permutations

import numpy as np

__all__ = [
    "STAT_CODES",
    "STAT_NAMES",
    "backend",
    "stat_values",
    "stat_values_numpy",
    "stat_values_numba",
    "stat_matrix",
    "s_n_array",
    "b_n_array",
]

STAT_CODES = {
    "exc": 0,
    "des": 1,
    "inv": 2,
    "maj": 3,
    "dexc": 4,
    "ddes": 5,
    "den": 6,
    "fix": 7,
}
STAT_NAMES = tuple(STAT_CODES)

_ROW_CHUNK = 65536


def _stat_values_numpy(perms: np.ndarray, code: int) -> np.ndarray:
    m, n = perms.shape
    out = np.empty(m, dtype=np.int64)
    pos = np.arange(1, n + 1, dtype=np.int64)
    for lo in range(0, m, _ROW_CHUNK):
        p = perms[lo : lo + _ROW_CHUNK].astype(np.int64)
        if code == 0:
            val = (p > pos).sum(axis=1)
        elif code == 1:
            val = (p[:, :-1] > p[:, 1:]).sum(axis=1)
        elif code == 2:
            gt = p[:, :, None] > p[:, None, :]
            val = np.triu(gt, k=1).sum(axis=(1, 2))
        elif code == 3:
            val = ((p[:, :-1] > p[:, 1:]) * pos[:-1]).sum(axis=1)
        elif code == 4:
            val = ((p - pos) * (p > pos)).sum(axis=1)
        elif code == 5:
            diff = p[:, :-1] - p[:, 1:]
            val = np.where(diff > 0, diff, 0).sum(axis=1)
        elif code == 6:
            mask = p > pos
            same = mask[:, :, None] == mask[:, None, :]
            gt = (p[:, :, None] > p[:, None, :]) & same
            val = np.triu(gt, k=1).sum(axis=(1, 2))
            val += (pos * mask).sum(axis=1)
        elif code == 7:
            val = (p == pos).sum(axis=1)
        else:
            raise ValueError(f"unknown statistic code {code}")
        out[lo : lo + len(p)] = val
    return out


def _stat_values_python_rows(perms: np.ndarray, code: int, out: np.ndarray) -> None:
    # loop body shared verbatim between the jitted and plain variants
    m, n = perms.shape
    for r in range(m):
        v = 0
        if code == 0:
            for i in range(n):
                if perms[r, i] > i + 1:
                    v += 1
        elif code == 1:
            for i in range(n - 1):
                if perms[r, i] > perms[r, i + 1]:
                    v += 1
        elif code == 2:
            for i in range(n):
                for j in range(i + 1, n):
                    if perms[r, i] > perms[r, j]:
                        v += 1
        elif code == 3:
            for i in range(n - 1):
                if perms[r, i] > perms[r, i + 1]:
                    v += i + 1
        elif code == 4:
            for i in range(n):
                if perms[r, i] > i + 1:
                    v += perms[r, i] - (i + 1)
        elif code == 5:
            for i in range(n - 1):
                if perms[r, i] > perms[r, i + 1]:
                    v += perms[r, i] - perms[r, i + 1]
        elif code == 6:
            for i in range(n):
                if perms[r, i] > i + 1:
                    v += i + 1
            for i in range(n):
                ei = perms[r, i] > i + 1
                for j in range(i + 1, n):
                    if ei == (perms[r, j] > j + 1) and perms[r, i] > perms[r, j]:
                        v += 1
        elif code == 7:
            for i in range(n):
                if perms[r, i] == i + 1:
                    v += 1
        out[r] = v


try:  # pragma: no cover - exercised through the public wrappers
    from numba import njit

    _stat_values_jit = njit(cache=True, nogil=True)(_stat_values_python_rows)
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    _stat_values_jit = None
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and not os.environ.get("BIINC_NO_NUMBA")


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"


def stat_values_numpy(perms: np.ndarray, code: int) -> np.ndarray:
    return _stat_values_numpy(perms, code)


def stat_values_numba(perms: np.ndarray, code: int) -> np.ndarray:
    if not HAVE_NUMBA:
        raise RuntimeError("numba is not available")
    if not 0 <= code < len(STAT_NAMES):
        raise ValueError(f"unknown statistic code {code}")
    out = np.empty(perms.shape[0], dtype=np.int64)
    _stat_values_jit(perms, code, out)
    return out


def stat_values(perms: np.ndarray, code: int) -> np.ndarray:
    """Evaluate one statistic on every row; int64 result."""
    if USE_NUMBA:
        return stat_values_numba(perms, code)
    return stat_values_numpy(perms, code)


def stat_matrix(perms: np.ndarray, codes: tuple[int, ...], jobs: int = 1) -> np.ndarray:
    """Evaluate several statistics on every row, optionally splitting the
    rows across worker threads. The output does not depend on jobs."""
    m = perms.shape[0]
    out = np.empty((m, len(codes)), dtype=np.int64)
    if jobs <= 1 or m < 4 * _ROW_CHUNK // 16:
        for k, code in enumerate(codes):
            out[:, k] = stat_values(perms, code)
        return out
    bounds = np.linspace(0, m, jobs + 1, dtype=np.int64)
    tasks = [
        (k, code, int(lo), int(hi))
        for k, code in enumerate(codes)
        for lo, hi in zip(bounds, bounds[1:])
        if hi > lo
    ]

    def run(task):
        k, code, lo, hi = task
        out[lo:hi, k] = stat_values(perms[lo:hi], code)

    with ThreadPoolExecutor(max_workers=jobs) as pool:
        list(pool.map(run, tasks))
    return out


_S_CACHE: dict[int, np.ndarray] = {}
_B_CACHE: dict[int, np.ndarray] = {}


def s_n_array(n: int) -> np.ndarray:
    """All n! permutations of 1..n, one per row, in lexicographic order."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n not in _S_CACHE:
        flat = np.fromiter(
            (v for row in _itertools_permutations(range(1, n + 1)) for v in row),
            dtype=np.int8,
        )
        _S_CACHE[n] = flat.reshape(-1, n)
    return _S_CACHE[n]


def b_n_array(n: int) -> np.ndarray:
    """All bi-increasing (321-avoiding) permutations of 1..n, one per row.

    Built level by level: every length-k word grows by inserting k + 1 at
    each of its active sites, i.e. strictly beyond its greatest excedance.
    The construction touches no non-avoiding word, so it scales with the
    Catalan numbers rather than with n!.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n in _B_CACHE:
        return _B_CACHE[n]
    rows = np.array([[1]], dtype=np.int8)
    for k in range(1, n):
        pos = np.arange(1, k + 1, dtype=np.int16)
        gexc = ((rows > pos) * pos).max(axis=1)
        counts = (k + 1) - gexc.astype(np.int64)
        total = int(counts.sum())
        src = np.repeat(np.arange(len(rows)), counts)
        starts = np.concatenate(([0], np.cumsum(counts)[:-1]))
        site = gexc[src] + 1 + (np.arange(total) - starts[src])
        cols = np.arange(k + 1)
        gather = np.where(cols[None, :] < (site[:, None] - 1), cols[None, :], cols[None, :] - 1)
        out = rows[src[:, None], gather]
        out[cols[None, :] == site[:, None] - 1] = k + 1
        rows = out.astype(np.int8, copy=False)
    _B_CACHE[n] = rows
    return rows
