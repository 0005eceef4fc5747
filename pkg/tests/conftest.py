"""Shared brute-force oracles and enumerators for the test suite.

Everything here is deliberately independent of the package's fast paths:
permutations come straight from itertools, pattern checks scan subsequences,
and counts are definition-level loops.
"""

from itertools import combinations, permutations

from biinc.permstats import Permutation


def iter_s(n):
    """All of S_n as Permutation objects, via itertools only."""
    for word in permutations(range(1, n + 1)):
        yield Permutation(word)


def brute_avoids_321(word):
    """Subsequence scan, the definition itself."""
    return not any(
        word[i] > word[j] > word[k] for i, j, k in combinations(range(len(word)), 3)
    )


def iter_b_brute(n):
    """B_n by filtering S_n with the subsequence oracle."""
    for p in iter_s(n):
        if brute_avoids_321(p.word):
            yield p


def brute_inversions(word):
    return sum(
        1 for i in range(len(word)) for j in range(i + 1, len(word)) if word[i] > word[j]
    )


def brute_avoids_barred_3142(word):
    """Quadruple loop straight from the definition: every 231 occurrence
    needs a witness strictly between its first two positions."""
    n = len(word)
    for x, y, z in combinations(range(n), 3):
        if word[z] < word[x] < word[y]:
            if not any(word[m] < word[z] for m in range(x + 1, y)):
                return False
    return True


def iter_two_motzkin(n, allow_broken_at_zero=True):
    """All 2-Motzkin words of length n, by height-pruned DFS."""

    def rec(prefix, h, left):
        if left == 0:
            if h == 0:
                yield prefix
            return
        for ch in "udsb":
            if ch == "u":
                nh = h + 1
            elif ch == "d":
                if h == 0:
                    continue
                nh = h - 1
            else:
                if ch == "b" and h == 0 and not allow_broken_at_zero:
                    continue
                nh = h
            if nh > left - 1:
                continue
            yield from rec(prefix + ch, nh, left - 1)

    yield from rec("", 0, n)


def iter_plain_motzkin(n):
    for word in iter_two_motzkin(n):
        if "b" not in word:
            yield word


def iter_staircase_partitions(n):
    """All partitions fitting inside (n-1, n-2, ..., 1)."""

    def rec(row, bound, prefix):
        yield tuple(prefix)
        cap = min(bound, n - row)
        for v in range(cap, 0, -1):
            yield from rec(row + 1, v, prefix + [v])

    yield from rec(1, n - 1, [])
