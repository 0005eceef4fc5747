"""Statistics of permutations written in one-line notation.

All public positions and values are 1-based: the word "2 6 1" denotes the map
1 -> 2, 2 -> 6, 3 -> 1. An excedance is a position i in [n-1] with word[i] > i,
a descent is a position i in [n-1] with word[i] > word[i+1]. The difference
statistics sum the gaps instead of counting them:

    dexc = sum of (word[i] - i)         over excedances i,
    ddes = sum of (word[i] - word[i+1]) over descents i.

A permutation is bi-increasing when its excedance-letter subword and its
non-excedance-letter subword are both increasing, which happens exactly when
inv == dexc, and exactly when the word avoids the pattern 321.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError

__all__ = [
    "Permutation",
    "StatBundle",
    "RestrictionWords",
    "BI_INCREASING_METHODS",
    "stats",
    "restriction_words",
    "reverse_code",
    "inversions",
    "is_bi_increasing",
    "exc_equals_des",
    "avoids_barred_3142",
    "descent_blocks",
    "fixed_point_criterion",
]


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., n} stored as its one-line word."""

    word: tuple[int, ...]

    def __post_init__(self) -> None:
        word = tuple(int(v) for v in self.word)
        object.__setattr__(self, "word", word)
        n = len(word)
        if n < 1:
            raise ValueError("permutation must have length at least 1")
        if sorted(word) != list(range(1, n + 1)):
            raise ValueError(f"word {word} is not a rearrangement of 1..{n}")

    @property
    def n(self) -> int:
        return len(self.word)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_text(cls, text: str) -> "Permutation":
        return cls(tuple(int(tok) for tok in text.split()))

    def to_text(self) -> str:
        return " ".join(str(v) for v in self.word)

    def value(self, i: int) -> int:
        """The image of the 1-based position i."""
        if not 1 <= i <= self.n:
            raise ValueError(f"position {i} out of range 1..{self.n}")
        return self.word[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.word):
            inv[v - 1] = i + 1
        return Permutation(tuple(inv))

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class StatBundle:
    """All scalar statistics of one permutation plus the underlying sets.

    The set-valued fields are ascending tuples; excedance_letters is the set
    of values sitting at excedance positions.
    """

    exc: int
    des: int
    inv: int
    maj: int
    dexc: int
    ddes: int
    den: int
    fix: int
    excedance_set: tuple[int, ...]
    descent_set: tuple[int, ...]
    fixed_point_set: tuple[int, ...]
    excedance_letters: tuple[int, ...]


@dataclass(frozen=True)
class RestrictionWords:
    """The four restriction subwords, each in order of appearance."""

    pi_e: tuple[int, ...]
    pi_ne: tuple[int, ...]
    pi_d: tuple[int, ...]
    pi_nd: tuple[int, ...]


def inversions(word: Sequence[int]) -> int:
    """Number of pairs i < j with word[i] > word[j], for any word of distinct
    integers. Fenwick-tree order statistics, O(m log m)."""
    m = len(word)
    if m < 2:
        return 0
    rank = {v: r + 1 for r, v in enumerate(sorted(word))}
    tree = [0] * (m + 1)
    total = 0
    # scan right to left, counting smaller values already seen
    for v in reversed(word):
        i = rank[v] - 1
        while i > 0:
            total += tree[i]
            i -= i & -i
        i = rank[v]
        while i <= m:
            tree[i] += 1
            i += i & -i
    return total


def _excedance_positions(word: Sequence[int]) -> list[int]:
    return [i + 1 for i, v in enumerate(word) if v > i + 1]


def _descent_positions(word: Sequence[int]) -> list[int]:
    return [i + 1 for i in range(len(word) - 1) if word[i] > word[i + 1]]


def stats(p: Permutation) -> StatBundle:
    """Compute every scalar statistic of p in one pass.

    den follows the excedance expression den = inv(pi_e) + inv(pi_ne) + sum of
    excedances.
    """
    w = p.word
    exc_set = _excedance_positions(w)
    des_set = _descent_positions(w)
    fix_set = [i + 1 for i, v in enumerate(w) if v == i + 1]
    pi_e = [w[i - 1] for i in exc_set]
    exc_flags = set(exc_set)
    pi_ne = [v for i, v in enumerate(w, start=1) if i not in exc_flags]
    return StatBundle(
        exc=len(exc_set),
        des=len(des_set),
        inv=inversions(w),
        maj=sum(des_set),
        dexc=sum(w[i - 1] - i for i in exc_set),
        ddes=sum(w[i - 1] - w[i] for i in des_set),
        den=inversions(pi_e) + inversions(pi_ne) + sum(exc_set),
        fix=len(fix_set),
        excedance_set=tuple(exc_set),
        descent_set=tuple(des_set),
        fixed_point_set=tuple(fix_set),
        excedance_letters=tuple(sorted(pi_e)),
    )


def restriction_words(p: Permutation) -> RestrictionWords:
    """Split the word into excedance/non-excedance letters and into descent
    tops/remaining letters, each kept in order of appearance."""
    w = p.word
    exc = set(_excedance_positions(w))
    des = set(_descent_positions(w))
    return RestrictionWords(
        pi_e=tuple(v for i, v in enumerate(w, start=1) if i in exc),
        pi_ne=tuple(v for i, v in enumerate(w, start=1) if i not in exc),
        pi_d=tuple(v for i, v in enumerate(w, start=1) if i in des),
        pi_nd=tuple(v for i, v in enumerate(w, start=1) if i not in des),
    )


def reverse_code(p: Permutation) -> tuple[int, ...]:
    """Component i counts the positions j < i carrying a larger value; the
    components sum to inv(p)."""
    w = p.word
    return tuple(
        sum(1 for j in range(i) if w[j] > w[i]) for i in range(len(w))
    )


BI_INCREASING_METHODS = (
    "inv-eq-dexc",
    "sorted-restrictions",
    "letter-count",
    "pattern-321",
)


def is_bi_increasing(p: Permutation, method: str = "sorted-restrictions") -> bool:
    """Decide whether p is bi-increasing, by any of four equivalent routes.

    inv-eq-dexc:          inv(p) == dexc(p).
    sorted-restrictions:  pi_e and pi_ne are both increasing.
    letter-count:         word[k] - k == |{i > k : word[i] < word[k]}| at
                          excedances and the mirrored count at non-excedances.
    pattern-321:          no decreasing subsequence of length three.
    """
    w = p.word
    n = len(w)
    if method == "inv-eq-dexc":
        b = stats(p)
        return b.inv == b.dexc
    if method == "sorted-restrictions":
        r = restriction_words(p)
        return _is_increasing(r.pi_e) and _is_increasing(r.pi_ne)
    if method == "letter-count":
        for k in range(1, n + 1):
            v = w[k - 1]
            if v > k:
                if v - k != sum(1 for i in range(k, n) if w[i] < v):
                    return False
            else:
                if k - v != sum(1 for i in range(k - 1) if w[i] > v):
                    return False
        return True
    if method == "pattern-321":
        # a 321 pattern exists iff some middle letter has a larger letter
        # before it and a smaller one after it
        prefix_max = 0
        suffix_min = [0] * (n + 1)
        suffix_min[n] = n + 1
        for i in range(n - 1, -1, -1):
            suffix_min[i] = min(suffix_min[i + 1], w[i])
        for j in range(n):
            if prefix_max > w[j] > suffix_min[j + 1]:
                return False
            prefix_max = max(prefix_max, w[j])
        return True
    raise ValueError(f"unknown method {method!r}; expected one of {BI_INCREASING_METHODS}")


def _is_increasing(word: Iterable[int]) -> bool:
    word = tuple(word)
    return all(a < b for a, b in zip(word, word[1:]))


def exc_equals_des(p: Permutation) -> bool:
    """True iff the descent-top word and the remaining-letter word are both
    increasing; equivalently, p is bi-increasing with E(p) == D(p)."""
    r = restriction_words(p)
    return _is_increasing(r.pi_d) and _is_increasing(r.pi_nd)


def avoids_barred_3142(p: Permutation) -> bool:
    """True iff every occurrence of the pattern 231 extends to one of 3142,
    i.e. for all x < y < z with word[z] < word[x] < word[y] there is a
    position m strictly between x and y with word[m] < word[z]."""
    w = p.word
    n = len(w)
    # min over the open interval (x, y), precomputed for all pairs
    minmid = [[0] * (n + 1) for _ in range(n + 1)]
    for x in range(1, n + 1):
        cur = n + 1
        for y in range(x + 1, n + 1):
            minmid[x][y] = cur
            cur = min(cur, w[y - 1])
    for x in range(1, n + 1):
        for y in range(x + 1, n + 1):
            if w[x - 1] >= w[y - 1]:
                continue
            bound = minmid[x][y]
            for z in range(y + 1, n + 1):
                if w[z - 1] < w[x - 1] and bound >= w[z - 1]:
                    return False
    return True


def descent_blocks(p: Permutation) -> list[tuple[int, ...]]:
    """Cut the word after every non-descent position; concatenating the
    blocks restores the word."""
    w = p.word
    blocks: list[tuple[int, ...]] = []
    start = 0
    for i in range(len(w) - 1):
        if w[i] < w[i + 1]:
            blocks.append(w[start : i + 1])
            start = i + 1
    blocks.append(w[start:])
    return blocks


def fixed_point_criterion(p: Permutation, i: int) -> bool:
    """For bi-increasing p: position i is a fixed point iff every earlier
    letter is smaller and every later letter is larger."""
    if not is_bi_increasing(p):
        raise DomainError("fixed_point_criterion needs a bi-increasing permutation")
    if not 1 <= i <= p.n:
        raise ValueError(f"position {i} out of range 1..{p.n}")
    w = p.word
    v = w[i - 1]
    return all(w[j] < v for j in range(i - 1)) and all(
        w[j] > v for j in range(i, len(w))
    )
