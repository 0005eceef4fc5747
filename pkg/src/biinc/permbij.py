"""Permutation-valued maps and constructions.

Contains the cycle-based excedance-to-descent bijection, the bi-sorting hat
map with its equivalence classes, the adjacent-transposition factorization of
bi-increasing permutations, the descent-difference-to-excedance-difference
bijection psi, the extremal inversion constructions, and insertion at active
sites.

Generator words multiply as functions, rightmost factor applied first, with
s_i exchanging the values i and i+1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError
from .permstats import Permutation, is_bi_increasing, stats

__all__ = [
    "GeneratorWord",
    "TranspositionSet",
    "from_excedances",
    "foata_phi",
    "hat",
    "transposition_set",
    "equivalence_class",
    "class_size",
    "factorize",
    "evaluate_word",
    "psi",
    "max_inv_permutation",
    "extremal_sequence",
    "active_sites",
    "insert_at_site",
    "deutsch_insert",
]


@dataclass(frozen=True)
class GeneratorWord:
    """A product of adjacent transpositions, stored as the list of indices."""

    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "indices", tuple(int(i) for i in self.indices))

    def to_text(self) -> str:
        return " ".join(f"s{i}" for i in self.indices)

    @classmethod
    def from_text(cls, text: str) -> "GeneratorWord":
        toks = text.split()
        if any(not t.startswith("s") for t in toks):
            raise ValueError("generator word tokens must look like s3")
        return cls(tuple(int(t[1:]) for t in toks))

    def __len__(self) -> int:
        return len(self.indices)


@dataclass(frozen=True)
class TranspositionSet:
    """Position pairs whose exchange preserves excedances and their letters."""

    pairs: frozenset[tuple[int, int]]

    def count_with_first(self, i: int) -> int:
        return sum(1 for a, _ in self.pairs if a == i)


def _require_bi_increasing(p: Permutation, op: str) -> None:
    if not is_bi_increasing(p):
        raise DomainError(f"{op} needs a bi-increasing permutation, got {p.to_text()!r}")


def from_excedances(excedances: Iterable[int], letters: Iterable[int], n: int) -> Permutation:
    """The unique bi-increasing permutation with the given excedance set and
    excedance letters: sorted letters go to sorted positions, the remaining
    values fill the remaining positions in increasing order."""
    pos = sorted(set(excedances))
    vals = sorted(set(letters))
    if len(pos) != len(vals):
        raise DomainError("excedance set and letter set must have equal size")
    if pos and (pos[0] < 1 or pos[-1] > n - 1):
        raise DomainError(f"excedances must lie in 1..{n - 1}")
    if vals and (vals[0] < 1 or vals[-1] > n):
        raise DomainError(f"letters must lie in 1..{n}")
    if any(v <= i for i, v in zip(pos, vals)):
        raise DomainError("infeasible pair: sorted letters must exceed sorted positions")
    word = [0] * n
    for i, v in zip(pos, vals):
        word[i - 1] = v
    rest = sorted(set(range(1, n + 1)) - set(vals))
    it = iter(rest)
    for j in range(n):
        if word[j] == 0:
            word[j] = next(it)
    return Permutation(tuple(word))


def foata_phi(p: Permutation) -> Permutation:
    """Cycle-rewriting bijection carrying (exc, dexc) to (des, ddes).

    Each cycle is written with its largest element first, cycles are sorted by
    first element, and each cycle emits its head followed by the remaining
    elements in reverse cycle order.
    """
    w = p.word
    n = len(w)
    seen = [False] * n
    cycles = []
    for start in range(1, n + 1):
        if seen[start - 1]:
            continue
        cyc = []
        i = start
        while not seen[i - 1]:
            seen[i - 1] = True
            cyc.append(i)
            i = w[i - 1]
        top = cyc.index(max(cyc))
        cyc = cyc[top:] + cyc[:top]
        cycles.append(cyc)
    cycles.sort(key=lambda c: c[0])
    out: list[int] = []
    for cyc in cycles:
        out.append(cyc[0])
        out.extend(reversed(cyc[1:]))
    return Permutation(tuple(out))


def hat(p: Permutation) -> Permutation:
    """Sort the excedance letters and the non-excedance letters in place."""
    w = p.word
    exc = [i for i in range(len(w)) if w[i] > i + 1]
    non = [i for i in range(len(w)) if w[i] <= i + 1]
    word = list(w)
    for i, v in zip(exc, sorted(w[i] for i in exc)):
        word[i] = v
    for i, v in zip(non, sorted(w[i] for i in non)):
        word[i] = v
    return Permutation(tuple(word))


def transposition_set(p: Permutation) -> TranspositionSet:
    """Pairs (i, j), i < j, with either both positions excedances and
    j < word[i], or both non-excedances and i >= word[j]."""
    _require_bi_increasing(p, "transposition_set")
    w = p.word
    n = len(w)
    exc = [w[i - 1] > i for i in range(1, n + 1)]
    pairs = set()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if exc[i - 1] and exc[j - 1] and j < w[i - 1]:
                pairs.add((i, j))
            elif not exc[i - 1] and not exc[j - 1] and i >= w[j - 1]:
                pairs.add((i, j))
    return TranspositionSet(frozenset(pairs))


def class_size(p: Permutation) -> int:
    """Size of the hat-equivalence class of p, as the product over positions
    of (1 + number of transpositions starting there)."""
    tset = transposition_set(p)
    size = 1
    for i in range(1, p.n):
        size *= tset.count_with_first(i) + 1
    return size


def equivalence_class(p: Permutation) -> set[Permutation]:
    """All permutations whose bi-sorted form equals p, generated by closing p
    under the exchanges of its transposition set.

    Each candidate swap is kept only when both touched positions keep their
    excedance status, which is exactly membership in the class.
    """
    _require_bi_increasing(p, "equivalence_class")
    swaps = sorted(transposition_set(p).pairs)
    seen = {p}
    frontier = [p]
    while frontier:
        nxt = []
        for q in frontier:
            w = q.word
            for i, j in swaps:
                a, b = w[i - 1], w[j - 1]
                still_exc = (b > i) == (a > i) and (a > j) == (b > j)
                if not still_exc:
                    continue
                word = list(w)
                word[i - 1], word[j - 1] = b, a
                cand = Permutation(tuple(word))
                if cand not in seen:
                    seen.add(cand)
                    nxt.append(cand)
        frontier = nxt
    return seen


def factorize(p: Permutation) -> GeneratorWord:
    """Write a bi-increasing p as a staircase product of adjacent
    transpositions of length inv(p).

    Scanning positions left to right, while the letter at position i exceeds
    i, left-multiply by the transposition swapping the values (letter - 1,
    letter); the recorded indices, in order, are the factorization.
    """
    _require_bi_increasing(p, "factorize")
    word = list(p.word)
    pos = {v: i for i, v in enumerate(word)}
    out = []
    n = len(word)
    for i in range(n):
        while word[i] > i + 1:
            a = word[i] - 1
            out.append(a)
            pa, pb = pos[a], pos[a + 1]
            word[pa], word[pb] = a + 1, a
            pos[a], pos[a + 1] = pb, pa
    return GeneratorWord(tuple(out))


def evaluate_word(w: GeneratorWord | Sequence[int], n: int) -> Permutation:
    """Evaluate a generator word on n letters, rightmost factor first."""
    indices = w.indices if isinstance(w, GeneratorWord) else tuple(w)
    word = list(range(1, n + 1))
    pos = {v: i for i, v in enumerate(word)}
    for a in reversed(indices):
        if not 1 <= a <= n - 1:
            raise ValueError(f"generator index {a} out of range 1..{n - 1}")
        pa, pb = pos[a], pos[a + 1]
        word[pa], word[pb] = a + 1, a
        pos[a], pos[a + 1] = pb, pa
    return Permutation(tuple(word))


def psi(p: Permutation) -> Permutation:
    """Bi-increasing bijection carrying ddes to dexc while preserving the
    excedance letters, the excedance count, and the fixed points.

    The image is the bi-increasing permutation whose excedance set replaces
    every descent position i by the letter at position i + 1 and keeps the
    letters of the non-descent excedances as positions.
    """
    _require_bi_increasing(p, "psi")
    w = p.word
    n = len(w)
    des = set(i for i in range(1, n) if w[i - 1] > w[i])
    exc = [i for i in range(1, n) if w[i - 1] > i]
    new_positions = []
    for i in exc:
        new_positions.append(w[i] if i in des else w[i - 1])
    letters = [w[i - 1] for i in exc]
    return from_excedances(new_positions, letters, n)


def max_inv_permutation(excedances: Iterable[int], letters: Iterable[int], n: int) -> Permutation:
    """The permutation with the given excedance set and letters whose
    inversion number is maximal.

    Working through the excedances from right to left, each takes the
    smallest still-available letter exceeding it; the non-excedances then
    take, left to right, the largest remaining value not exceeding them.
    """
    pos = sorted(set(excedances))
    vals = sorted(set(letters))
    if len(pos) != len(vals):
        raise DomainError("excedance set and letter set must have equal size")
    if pos and (pos[0] < 1 or pos[-1] > n - 1):
        raise DomainError(f"excedances must lie in 1..{n - 1}")
    if vals and (vals[0] < 1 or vals[-1] > n):
        raise DomainError(f"letters must lie in 1..{n}")
    word = [0] * n
    avail = set(vals)
    for i in reversed(pos):
        cand = [a for a in avail if a > i]
        if not cand:
            raise DomainError(f"infeasible pair: no remaining letter exceeds position {i}")
        word[i - 1] = min(cand)
        avail.discard(word[i - 1])
    rest = set(range(1, n + 1)) - set(vals)
    for j in range(1, n + 1):
        if word[j - 1]:
            continue
        cand = [b for b in rest if b <= j]
        if not cand:
            raise DomainError(f"infeasible pair: no remaining value fits position {j}")
        word[j - 1] = max(cand)
        rest.discard(word[j - 1])
    return Permutation(tuple(word))


def extremal_sequence(n: int) -> list[Permutation]:
    """The greedy sequence starting at the identity along which dexc grows by
    one per step while inv stays at 2*dexc - exc; it ends after floor(n^2/4)
    steps at the reversal."""
    if n < 1:
        raise ValueError("n must be at least 1")
    cur = list(range(1, n + 1))
    out = [Permutation(tuple(cur))]
    while True:
        e = next((i for i in range(1, n + 1) if i + cur[i - 1] < n + 1), None)
        if e is None:
            return out
        a = cur[e - 1]
        cur = list(cur)
        cur[e - 1] = a + 1
        if a != e:
            cur[a - 1] = a
        cur[a] = e
        out.append(Permutation(tuple(cur)))


def active_sites(p: Permutation) -> tuple[int, ...]:
    """Positions where n + 1 may be inserted without creating a 321 pattern:
    everything strictly beyond the greatest excedance."""
    _require_bi_increasing(p, "active_sites")
    w = p.word
    gexc = max((i for i in range(1, len(w)) if w[i - 1] > i), default=0)
    return tuple(range(gexc + 1, len(w) + 2))


def insert_at_site(p: Permutation, i: int) -> Permutation:
    """Insert the new largest value n + 1 before position i of p."""
    sites = active_sites(p)
    if i not in sites:
        raise DomainError(f"site {i} is not active for {p.to_text()!r}; active sites are {sites}")
    w = p.word
    return Permutation(w[: i - 1] + (len(w) + 1,) + w[i - 1 :])


def deutsch_insert(p: Permutation) -> Permutation:
    """From a bi-increasing p of length n - 1 with equal excedance and
    descent numbers and at least one fixed point, build the derangement of
    length n obtained by inserting n before the smallest fixed point and
    re-sorting the descent-top letters increasingly."""
    b = stats(p)
    if not is_bi_increasing(p) or b.exc != b.des:
        raise DomainError("deutsch_insert needs a bi-increasing permutation with exc == des")
    if b.fix == 0:
        raise DomainError("deutsch_insert needs at least one fixed point")
    i = b.fixed_point_set[0]
    w = p.word
    word = list(w[: i - 1] + (p.n + 1,) + w[i - 1 :])
    des = [j for j in range(len(word) - 1) if word[j] > word[j + 1]]
    tops = sorted(word[j] for j in des)
    for j, v in zip(des, tops):
        word[j] = v
    return Permutation(tuple(word))
