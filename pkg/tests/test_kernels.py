import numpy as np
import pytest
from conftest import iter_b_brute

from biinc import kernels
from biinc.counting import catalan
from biinc.permstats import Permutation, stats

ALL_CODES = tuple(range(len(kernels.STAT_NAMES)))


def random_perm_array(rng, m, n):
    rows = np.empty((m, n), dtype=np.int8)
    for r in range(m):
        rows[r] = rng.permutation(n) + 1
    return rows


def test_stat_values_match_single_permutation_oracle():
    rng = np.random.default_rng(42)
    perms = random_perm_array(rng, 300, 9)
    values = kernels.stat_matrix(perms, ALL_CODES)
    for row, vals in zip(perms, values):
        b = stats(Permutation(tuple(int(v) for v in row)))
        assert list(vals) == [b.exc, b.des, b.inv, b.maj, b.dexc, b.ddes, b.den, b.fix]


@pytest.mark.skipif(not kernels.HAVE_NUMBA, reason="numba unavailable")
def test_backends_agree():
    rng = np.random.default_rng(7)
    for n in (1, 2, 5, 12):
        perms = random_perm_array(rng, 500, n)
        for code in ALL_CODES:
            a = kernels.stat_values_numpy(perms, code)
            b = kernels.stat_values_numba(perms, code)
            assert (a == b).all()


def test_s_n_array():
    s4 = kernels.s_n_array(4)
    assert s4.shape == (24, 4)
    assert len({tuple(r) for r in s4.tolist()}) == 24
    with pytest.raises(ValueError):
        kernels.s_n_array(0)


def test_b_n_array_matches_brute_filter():
    for n in range(1, 8):
        rows = {tuple(int(v) for v in r) for r in kernels.b_n_array(n)}
        assert rows == {p.word for p in iter_b_brute(n)}
        assert len(rows) == catalan(n)


def test_b_n_array_rows_distinct_and_counted():
    for n in range(8, 12):
        rows = kernels.b_n_array(n)
        assert rows.shape == (catalan(n), n)
        # distinctness via a cheap mixed-radix hash of every row
        weights = (n + 1) ** np.arange(n, dtype=np.int64)
        keys = rows.astype(np.int64) @ weights
        assert len(np.unique(keys)) == len(rows)


def test_stat_matrix_jobs_invariance():
    perms = kernels.s_n_array(7)
    v1 = kernels.stat_matrix(perms, ALL_CODES, jobs=1)
    v4 = kernels.stat_matrix(perms, ALL_CODES, jobs=4)
    v9 = kernels.stat_matrix(perms, ALL_CODES, jobs=9)
    assert (v1 == v4).all() and (v1 == v9).all()


def test_unknown_code_rejected():
    perms = kernels.s_n_array(3)
    with pytest.raises(ValueError):
        kernels.stat_values_numpy(perms, 99)
