import random

import pytest

from biinc.counting import TruncatedBivariateSeries as TS
from biinc.counting import catalan, distribution, j_series


def schoolbook_reciprocal(s):
    """Independent oracle: solve coefficientwise for r with s * r = 1,
    treating the series as a polynomial in x over truncated q-polynomials."""
    nx, nq = s.max_x, s.max_q
    assert s.grid[0][0] == 1

    def qmul(a, b):
        out = [0] * (nq + 1)
        for i, x in enumerate(a):
            if x:
                for j in range(nq + 1 - i):
                    if b[j]:
                        out[i + j] += x * b[j]
        return out

    def qinv(a):
        out = [0] * (nq + 1)
        out[0] = 1  # a[0] == 1 for every series handled here
        for k in range(1, nq + 1):
            out[k] = -sum(a[i] * out[k - i] for i in range(1, k + 1))
        return out

    inv0 = qinv(s.grid[0])
    rows = [inv0]
    for i in range(1, nx + 1):
        acc = [0] * (nq + 1)
        for j in range(1, i + 1):
            term = qmul(s.grid[j], rows[i - j])
            acc = [x + y for x, y in zip(acc, term)]
        rows.append(qmul([-v for v in acc], inv0))
    return TS(rows, nx, nq)


def random_unit_series(rng, nx, nq):
    grid = [[rng.randrange(-3, 4) for _ in range(nq + 1)] for _ in range(nx + 1)]
    grid[0][0] = 1
    return TS(grid, nx, nq)


def test_arithmetic_basics():
    one = TS.one(4, 4)
    x = TS.monomial(1, 1, 0, 4, 4)
    q = TS.monomial(1, 0, 1, 4, 4)
    s = one - x * q
    assert s.coefficient(1, 1) == -1
    assert (s + x * q) == one
    geom = s.reciprocal()
    for k in range(5):
        assert geom.coefficient(k, k) == 1
    assert s * geom == one


def test_reciprocal_matches_schoolbook_oracle():
    rng = random.Random(5)
    for _ in range(25):
        s = random_unit_series(rng, 5, 6)
        newton = s.reciprocal()
        oracle = schoolbook_reciprocal(s)
        assert newton == oracle
        assert (s * newton).grid == TS.one(5, 6).grid


def test_reciprocal_requires_unit():
    with pytest.raises(ValueError):
        TS.monomial(2, 0, 0, 3, 3).reciprocal()


def test_division():
    rng = random.Random(9)
    a = random_unit_series(rng, 4, 5)
    b = random_unit_series(rng, 4, 5)
    assert (a * b) / b == a


def test_j_series_base_cases():
    j0 = j_series(0, 6, 10)
    assert j0.coefficient(0, 0) == 1
    quotient = j_series(1, 6, 10) / j0
    assert quotient.x_slice(1) == (1,) + (0,) * 10
    with pytest.raises(ValueError):
        j_series(2, 4, 4)


def test_j_quotient_counts_excedance_differences():
    max_q = 16
    quotient = j_series(1, 7, max_q) / j_series(0, 7, max_q)
    for n in range(1, 8):
        got = {k: c for k, c in enumerate(quotient.x_slice(n)) if c}
        assert got == distribution("B", n, "dexc").single()
        assert sum(got.values()) == catalan(n)
