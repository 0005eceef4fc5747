"""Exact combinatorial numbers, brute-force distribution tables, rank
counting, and a truncated bivariate series engine.

Every count is an exact Python integer. Exhaustive tables over the symmetric
group are capped at n = 9 and tables over the bi-increasing family at n = 14
unless the caller forces past the cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator

import numpy as np

from . import kernels
from .errors import CapExceededError
from .permstats import Permutation

__all__ = [
    "S_DEFAULT_CAP",
    "B_DEFAULT_CAP",
    "DistributionTable",
    "TruncatedBivariateSeries",
    "catalan",
    "narayana",
    "motzkin",
    "fine",
    "m_nk",
    "distribution",
    "greatest_excedance_count",
    "a_k_sequence",
    "j_series",
    "partitions_by_rank",
    "skew_by_rank",
    "chu_vandermonde_check",
    "fixed_point_set_count",
    "all_permutations",
    "bi_increasing_permutations",
]

S_DEFAULT_CAP = 9
B_DEFAULT_CAP = 14


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    return comb(2 * n, n) // (n + 1)


def narayana(n: int, w: int) -> int:
    """Number of bi-increasing permutations of length n with w - 1
    excedances; (1/n) C(n, w) C(n, w - 1)."""
    if n < 1 or not 1 <= w <= n:
        raise ValueError("need n >= 1 and 1 <= w <= n")
    return comb(n, w) * comb(n, w - 1) // n


@lru_cache(maxsize=None)
def motzkin(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return 1
    return motzkin(n - 1) + sum(motzkin(i) * motzkin(n - 2 - i) for i in range(n - 1))


@lru_cache(maxsize=None)
def fine(n: int) -> int:
    """Fine numbers anchored at fine(0) = 1, so that fine(n - 1) + 2 fine(n)
    equals catalan(n); fine(n) counts the bi-increasing derangements."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return 1
    value = catalan(n) - fine(n - 1)
    assert value % 2 == 0
    return value // 2


def m_nk(n: int, k: int) -> int:
    """Bi-increasing permutations of length n with exactly k fixed points,
    equally the 2-Motzkin paths with no broken step on the axis and k solid
    steps there."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    total = Fraction(0)
    for i in range(n - k + 1):
        term = Fraction(k + 1 + i, n + 1) * comb(2 * n - k - i, n) * comb(k + i, k)
        total += -term if i % 2 else term
    assert total.denominator == 1
    return int(total)


def greatest_excedance_count(n: int, k: int) -> int:
    """Bi-increasing permutations of length n whose greatest excedance is k
    (k = 0 meaning the identity)."""
    if n < 1 or not 0 <= k <= n - 1:
        raise ValueError("need n >= 1 and 0 <= k <= n - 1")
    if k == 0:
        return 1
    return comb(n - 1 + k, k) - comb(n - 1 + k, k - 1)


def partitions_by_rank(n: int, r: int) -> int:
    """Partitions of perimeter 2n + 2 (twice largest part plus part count)
    with Durfee rank r."""
    if n < 1 or r < 1:
        raise ValueError("need n >= 1 and r >= 1")
    return comb(n, 2 * r - 1)


def skew_by_rank(n: int, r: int) -> int:
    """Connected skew diagrams of perimeter 2n + 2 and rank r."""
    if n < 1 or r < 1:
        raise ValueError("need n >= 1 and r >= 1")
    if 2 * r > n + 1:
        return 0
    return 2 ** (n + 1 - 2 * r) * comb(n - 1, 2 * r - 2) * catalan(r - 1)


def chu_vandermonde_check(a: int, b: int, c: int) -> bool:
    """Verify sum_{k=0}^{c-b} C(a+k, a) C(c-a-1-k, b-a-1) == C(c, b)."""
    if not 0 <= a < b <= c:
        raise ValueError("need 0 <= a < b <= c")
    lhs = sum(comb(a + k, a) * comb(c - a - 1 - k, b - a - 1) for k in range(c - b + 1))
    return lhs == comb(c, b)


def fixed_point_set_count(n: int, fixed_set: Iterable[int]) -> int:
    """Bi-increasing permutations of length n whose fixed points are exactly
    the given set: the product of Fine numbers over the gap lengths."""
    pts = sorted(set(fixed_set))
    if pts and (pts[0] < 1 or pts[-1] > n):
        raise ValueError(f"fixed points must lie in 1..{n}")
    bounds = [0] + pts + [n + 1]
    out = 1
    for lo, hi in zip(bounds, bounds[1:]):
        out *= fine(hi - lo - 1)
    return out


# ---------------------------------------------------------------------------
# exhaustive tables


@dataclass(frozen=True)
class DistributionTable:
    """Exact histogram of one or two statistics over S_n or B_n."""

    family: str
    n: int
    stats: tuple[str, ...]
    counts: dict[tuple[int, ...], int]

    def total(self) -> int:
        return sum(self.counts.values())

    def items_sorted(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.counts.items())

    def single(self) -> dict[int, int]:
        if len(self.stats) != 1:
            raise ValueError("single() needs a one-statistic table")
        return {k[0]: v for k, v in self.counts.items()}

    def to_csv(self) -> str:
        header = ",".join(self.stats) + ",count"
        lines = [header]
        for key, cnt in self.items_sorted():
            lines.append(",".join(str(v) for v in key) + f",{cnt}")
        return "\n".join(lines) + "\n"

    def to_json_obj(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "stats": list(self.stats),
            "total": self.total(),
            "counts": [
                {"value": list(k), "count": c} for k, c in self.items_sorted()
            ],
        }


def _family_array(family: str, n: int, force: bool) -> np.ndarray:
    fam = family.upper()
    if fam == "S":
        if n > S_DEFAULT_CAP and not force:
            raise CapExceededError(
                f"S_{n} exceeds the default cap {S_DEFAULT_CAP}"
            )
        return kernels.s_n_array(n)
    if fam == "B":
        if n > B_DEFAULT_CAP and not force:
            raise CapExceededError(
                f"B_{n} exceeds the default cap {B_DEFAULT_CAP}"
            )
        return kernels.b_n_array(n)
    raise ValueError(f"unknown family {family!r}; expected 'S' or 'B'")


def distribution(
    family: str,
    n: int,
    stats: str | Iterable[str],
    *,
    force: bool = False,
    jobs: int = 1,
) -> DistributionTable:
    """Exact joint distribution of one or two statistics, by exhaustive
    enumeration. The bi-increasing family is generated directly, never
    filtered out of S_n. The result is independent of jobs."""
    names = (stats,) if isinstance(stats, str) else tuple(stats)
    if not 1 <= len(names) <= 2:
        raise ValueError("one or two statistic names are required")
    for name in names:
        if name not in kernels.STAT_CODES:
            raise ValueError(f"unknown statistic {name!r}; expected one of {kernels.STAT_NAMES}")
    rows = _family_array(family, n, force)
    codes = tuple(kernels.STAT_CODES[name] for name in names)
    values = kernels.stat_matrix(rows, codes, jobs=jobs)
    keys, cnts = np.unique(values, axis=0, return_counts=True)
    counts = {tuple(int(v) for v in key): int(c) for key, c in zip(keys, cnts)}
    return DistributionTable(family.upper(), n, names, counts)


def all_permutations(n: int, *, force: bool = False) -> Iterator[Permutation]:
    for row in _family_array("S", n, force):
        yield Permutation(tuple(int(v) for v in row))


def bi_increasing_permutations(n: int, *, force: bool = False) -> Iterator[Permutation]:
    for row in _family_array("B", n, force):
        yield Permutation(tuple(int(v) for v in row))


def a_k_sequence(n: int, k: int, *, force: bool = False) -> int:
    """Number of bi-increasing permutations of length n with
    exc - des <= k - 1; interpolates from the Motzkin to the Catalan
    numbers as k grows."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    rows = _family_array("B", n, force)
    exc = kernels.stat_values(rows, kernels.STAT_CODES["exc"])
    des = kernels.stat_values(rows, kernels.STAT_CODES["des"])
    return int((exc - des <= k - 1).sum())


# ---------------------------------------------------------------------------
# truncated bivariate series


class TruncatedBivariateSeries:
    """Polynomial in x and q truncated to degrees (max_x, max_q), with exact
    integer coefficients. grid[i][j] is the coefficient of x^i q^j."""

    __slots__ = ("max_x", "max_q", "grid")

    def __init__(self, grid: list[list[int]], max_x: int, max_q: int):
        self.max_x = max_x
        self.max_q = max_q
        self.grid = [
            [int(grid[i][j]) if i < len(grid) and j < len(grid[i]) else 0 for j in range(max_q + 1)]
            for i in range(max_x + 1)
        ]

    @classmethod
    def zero(cls, max_x: int, max_q: int) -> "TruncatedBivariateSeries":
        return cls([], max_x, max_q)

    @classmethod
    def monomial(cls, coeff: int, i: int, j: int, max_x: int, max_q: int) -> "TruncatedBivariateSeries":
        s = cls.zero(max_x, max_q)
        if i <= max_x and j <= max_q:
            s.grid[i][j] = int(coeff)
        return s

    @classmethod
    def one(cls, max_x: int, max_q: int) -> "TruncatedBivariateSeries":
        return cls.monomial(1, 0, 0, max_x, max_q)

    def coefficient(self, i: int, j: int) -> int:
        return self.grid[i][j]

    def x_slice(self, i: int) -> tuple[int, ...]:
        """Coefficients of x^i as a vector in q."""
        return tuple(self.grid[i])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, TruncatedBivariateSeries)
            and self.max_x == other.max_x
            and self.max_q == other.max_q
            and self.grid == other.grid
        )

    def __add__(self, other: "TruncatedBivariateSeries") -> "TruncatedBivariateSeries":
        self._check(other)
        return TruncatedBivariateSeries(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.grid, other.grid)],
            self.max_x,
            self.max_q,
        )

    def __sub__(self, other: "TruncatedBivariateSeries") -> "TruncatedBivariateSeries":
        self._check(other)
        return TruncatedBivariateSeries(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.grid, other.grid)],
            self.max_x,
            self.max_q,
        )

    def __neg__(self) -> "TruncatedBivariateSeries":
        return TruncatedBivariateSeries(
            [[-a for a in row] for row in self.grid], self.max_x, self.max_q
        )

    def scaled(self, c: int) -> "TruncatedBivariateSeries":
        return TruncatedBivariateSeries(
            [[c * a for a in row] for row in self.grid], self.max_x, self.max_q
        )

    def __mul__(self, other: "TruncatedBivariateSeries") -> "TruncatedBivariateSeries":
        self._check(other)
        out = [[0] * (self.max_q + 1) for _ in range(self.max_x + 1)]
        for i, row in enumerate(self.grid):
            for j, a in enumerate(row):
                if a == 0:
                    continue
                for k in range(self.max_x + 1 - i):
                    rb = other.grid[k]
                    orow = out[i + k]
                    for l in range(self.max_q + 1 - j):
                        b = rb[l]
                        if b:
                            orow[j + l] += a * b
        return TruncatedBivariateSeries(out, self.max_x, self.max_q)

    def reciprocal(self) -> "TruncatedBivariateSeries":
        """Newton iteration doubling the correct total degree each round;
        requires constant term 1."""
        if self.grid[0][0] != 1:
            raise ValueError("reciprocal needs constant term 1")
        r = TruncatedBivariateSeries.one(self.max_x, self.max_q)
        two = TruncatedBivariateSeries.monomial(2, 0, 0, self.max_x, self.max_q)
        correct = 1
        while correct <= self.max_x + self.max_q:
            r = r * (two - self * r)
            correct *= 2
        return r

    def __truediv__(self, other: "TruncatedBivariateSeries") -> "TruncatedBivariateSeries":
        return self * other.reciprocal()

    def _check(self, other: "TruncatedBivariateSeries") -> None:
        if self.max_x != other.max_x or self.max_q != other.max_q:
            raise ValueError("truncation orders differ")

    def to_json_obj(self) -> dict:
        return {"max_x": self.max_x, "max_q": self.max_q, "grid": [list(r) for r in self.grid]}


def _pochhammer_x(k: int, max_x: int, max_q: int) -> TruncatedBivariateSeries:
    """(x)_k = (1 - x)(1 - xq) ... (1 - xq^{k-1})."""
    out = TruncatedBivariateSeries.one(max_x, max_q)
    for j in range(k):
        factor = TruncatedBivariateSeries.one(max_x, max_q) - TruncatedBivariateSeries.monomial(
            1, 1, j, max_x, max_q
        )
        out = out * factor
    return out


def _pochhammer_q(m: int, max_x: int, max_q: int) -> TruncatedBivariateSeries:
    """(q)_m = (1 - q)(1 - q^2) ... (1 - q^m)."""
    out = TruncatedBivariateSeries.one(max_x, max_q)
    for j in range(1, m + 1):
        factor = TruncatedBivariateSeries.one(max_x, max_q) - TruncatedBivariateSeries.monomial(
            1, 0, j, max_x, max_q
        )
        out = out * factor
    return out


def j_series(r: int, max_x: int, max_q: int) -> TruncatedBivariateSeries:
    """The alternating basic hypergeometric sum whose quotient J_1/J_0 has
    the dexc distribution over the bi-increasing family as coefficients:

        J_r = sum_m (-1)^m x^(m+r) q^(m(m+2r+1)/2) / ((x)_{m+r} (q)_m).

    Summands are added while their leading x-degree m + r stays within the
    truncation order; later summands vanish on the grid.
    """
    if r not in (0, 1):
        raise ValueError("r must be 0 or 1")
    total = TruncatedBivariateSeries.zero(max_x, max_q)
    m = 0
    while m + r <= max_x:
        qexp = m * (m + 2 * r + 1) // 2
        if qexp <= max_q:
            lead = TruncatedBivariateSeries.monomial(
                -1 if m % 2 else 1, m + r, qexp, max_x, max_q
            )
            denom = _pochhammer_x(m + r, max_x, max_q) * _pochhammer_q(m, max_x, max_q)
            total = total + lead * denom.reciprocal()
        m += 1
    return total
