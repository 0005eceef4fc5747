"""Dyck paths, 2-Motzkin paths, and every path-valued bijection.

Dyck words use uppercase U/D, 2-Motzkin words lowercase u/d/s/b (up, down,
solid level, broken level). The height h_i of step i is the ordinate at the
step's start. M*_n is the set of 2-Motzkin paths of length n with no broken
step at height 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate

from .errors import DomainError
from .permbij import from_excedances
from .permstats import Permutation, is_bi_increasing
from .polyomino import ParallelogramPolyomino

__all__ = [
    "DyckPath",
    "TwoMotzkinPath",
    "PathStats",
    "DeutschShapiroPaths",
    "bjs",
    "bjs_inverse",
    "delest_viennot",
    "delest_viennot_inverse",
    "francon_viennot",
    "francon_viennot_inverse",
    "fv_extended",
    "fv_extended_inverse",
    "foata_zeilberger",
    "fz_inverse_bi",
    "polyomino_to_2motzkin",
    "two_motzkin_to_parallelogram",
    "deutsch_shapiro",
    "deutsch_shapiro_inverse",
    "two_motzkin_to_dyck",
    "path_stats",
    "is_partition_path",
]


@dataclass(frozen=True)
class DyckPath:
    word: str

    def __post_init__(self) -> None:
        h = 0
        for ch in self.word:
            if ch == "U":
                h += 1
            elif ch == "D":
                h -= 1
            else:
                raise ValueError(f"Dyck words use U and D only, got {ch!r}")
            if h < 0:
                raise ValueError("Dyck path dips below the axis")
        if h != 0:
            raise ValueError("Dyck path must end on the axis")

    def __len__(self) -> int:
        return len(self.word)

    def runs(self) -> list[tuple[int, int]]:
        """Alternating (ups, downs) run lengths from left to right."""
        out = []
        i = 0
        w = self.word
        while i < len(w):
            u = 0
            while i < len(w) and w[i] == "U":
                u += 1
                i += 1
            d = 0
            while i < len(w) and w[i] == "D":
                d += 1
                i += 1
            out.append((u, d))
        return out

    def peak_heights(self) -> list[int]:
        out = []
        h = 0
        for u, d in self.runs():
            h += u
            out.append(h)
            h -= d
        return out

    def valley_heights(self) -> list[int]:
        out = []
        h = 0
        runs = self.runs()
        for k, (u, d) in enumerate(runs):
            h += u - d
            if k < len(runs) - 1:
                out.append(h)
        return out


@dataclass(frozen=True)
class TwoMotzkinPath:
    word: str

    def __post_init__(self) -> None:
        h = 0
        for ch in self.word:
            if ch == "u":
                h += 1
            elif ch == "d":
                h -= 1
            elif ch not in ("s", "b"):
                raise ValueError(f"2-Motzkin words use u, d, s, b only, got {ch!r}")
            if h < 0:
                raise ValueError("2-Motzkin path dips below the axis")
        if h != 0:
            raise ValueError("2-Motzkin path must end on the axis")

    def __len__(self) -> int:
        return len(self.word)

    def heights(self) -> tuple[int, ...]:
        """Ordinate at the start of each step."""
        out = []
        h = 0
        for ch in self.word:
            out.append(h)
            if ch == "u":
                h += 1
            elif ch == "d":
                h -= 1
        return tuple(out)

    @property
    def in_m_star(self) -> bool:
        return all(ch != "b" or h > 0 for ch, h in zip(self.word, self.heights()))


def _require_m_star(c: TwoMotzkinPath, op: str) -> None:
    if not c.in_m_star:
        raise DomainError(f"{op} needs a path with no broken step at height 0")


@dataclass(frozen=True)
class PathStats:
    ups: int
    downs: int
    solids: int
    brokens: int
    height_sum: int
    level0_solids: int
    dd: int
    db: int
    sd: int
    sb: int
    uu: int
    us: int
    bu: int
    bs: int
    rank_from_path: int


def path_stats(c: TwoMotzkinPath) -> PathStats:
    """Step counts, the height sum, and the adjacent-pair counts that encode
    the rank of the corresponding skew diagram."""
    w = c.word
    hs = c.heights()
    pairs = {k: 0 for k in ("dd", "db", "sd", "sb", "uu", "us", "bu", "bs")}
    for x, y in zip(w, w[1:]):
        if x + y in pairs:
            pairs[x + y] += 1
    return PathStats(
        ups=w.count("u"),
        downs=w.count("d"),
        solids=w.count("s"),
        brokens=w.count("b"),
        height_sum=sum(hs),
        level0_solids=sum(1 for ch, h in zip(w, hs) if ch == "s" and h == 0),
        rank_from_path=1 + pairs["dd"] + pairs["db"] + pairs["sd"] + pairs["sb"],
        **pairs,
    )


def bjs(p: Permutation) -> DyckPath:
    """Dyck path of a bi-increasing permutation: for every excedance, in
    order, adjoin (letter gap) up-steps then (position gap) down-steps. The
    valleys count the excedances and their heights, each increased by one,
    sum to dexc."""
    if not is_bi_increasing(p):
        raise DomainError("bjs needs a bi-increasing permutation")
    w = p.word
    n = len(w)
    exc = [i for i in range(1, n) if w[i - 1] > i]
    a = [0] + [w[i - 1] - 1 for i in exc] + [n]
    b = [0] + exc + [n]
    word = "".join(
        "U" * (a[k] - a[k - 1]) + "D" * (b[k] - b[k - 1]) for k in range(1, len(a))
    )
    return DyckPath(word)


def bjs_inverse(d: DyckPath) -> Permutation:
    runs = d.runs()
    if any(u == 0 or dn == 0 for u, dn in runs):
        raise DomainError("not in the image: runs must alternate starting with an up-step")
    n = sum(u for u, _ in runs)
    ups = list(accumulate(u for u, _ in runs))
    downs = list(accumulate(dn for _, dn in runs))
    excedances = downs[:-1]
    letters = [v + 1 for v in ups[:-1]]
    return from_excedances(excedances, letters, n)


def delest_viennot(pp: ParallelogramPolyomino) -> DyckPath:
    """Dyck path whose peak heights are the column cell counts and whose
    valley heights are one less than the cell overlaps of adjacent columns."""
    cols = pp.column_heights
    spans = pp.column_spans()
    word = ["U" * cols[0]]
    for j in range(pp.width - 1):
        overlap = min(spans[j][1], spans[j + 1][1]) - max(spans[j][0], spans[j + 1][0])
        valley = overlap - 1
        word.append("D" * (cols[j] - valley) + "U" * (cols[j + 1] - valley))
    word.append("D" * cols[-1])
    return DyckPath("".join(word))


def delest_viennot_inverse(d: DyckPath) -> ParallelogramPolyomino:
    runs = d.runs()
    if any(u == 0 or dn == 0 for u, dn in runs):
        raise DomainError("not in the image: runs must alternate starting with an up-step")
    peaks = d.peak_heights()
    valleys = d.valley_heights()
    tops = [peaks[0]]
    bottoms = [0]
    for k, v in enumerate(valleys):
        bottoms.append(tops[k] - (v + 1))
        tops.append(bottoms[k + 1] + peaks[k + 1])
    gamma = tuple(t - s for t, s in zip(tops, [0] + tops[:-1]))
    delta = tuple(b - s for b, s in zip(bottoms[1:] + [tops[-1]], bottoms))
    return ParallelogramPolyomino(gamma, delta)


def _fv_code(p: Permutation, mark_excedance_rises: bool) -> TwoMotzkinPath:
    w = (0,) + p.word + (p.n + 1,)
    code = [""] * p.n
    for i in range(1, p.n + 1):
        prev, cur, nxt = w[i - 1], w[i], w[i + 1]
        if prev < cur < nxt:
            if mark_excedance_rises and cur > i:
                code[cur - 1] = "b"
            else:
                code[cur - 1] = "s"
        elif prev > cur > nxt:
            code[cur - 1] = "b"
        elif prev < cur > nxt:
            code[cur - 1] = "d"
        else:
            code[cur - 1] = "u"
    return TwoMotzkinPath("".join(code))


def francon_viennot(p: Permutation) -> TwoMotzkinPath:
    """Value-indexed path: the letter at a double rise is solid, at a double
    descent broken, a descent top gives a down-step and a descent bottom an
    up-step (with 0 prepended and n + 1 appended). The height sum equals
    ddes for every permutation."""
    return _fv_code(p, mark_excedance_rises=False)


def fv_extended(p: Permutation) -> TwoMotzkinPath:
    """Bi-increasing refinement of the value-indexed path: a double-rise
    letter sitting at an excedance position becomes broken instead of solid,
    so the path lands in M*_n with des up-steps and height sum ddes."""
    if not is_bi_increasing(p):
        raise DomainError("fv_extended needs a bi-increasing permutation")
    return _fv_code(p, mark_excedance_rises=True)


def _units_to_permutation(units: list[list[int]], n: int) -> Permutation:
    units = sorted(units, key=lambda u: u[-1])
    word: list[int] = []
    for u in units:
        word.extend(u)
    return Permutation(tuple(word))


def francon_viennot_inverse(c: TwoMotzkinPath) -> Permutation:
    """Inverse on plain Motzkin paths: pair the k-th down-step with the k-th
    up-step into a two-letter block, treat solid steps as singleton blocks,
    and order all blocks increasingly by last letter."""
    w = c.word
    if "b" in w:
        raise DomainError("francon_viennot_inverse needs a path with no broken step")
    downs = [i + 1 for i, ch in enumerate(w) if ch == "d"]
    ups = [i + 1 for i, ch in enumerate(w) if ch == "u"]
    units = [[d, u] for d, u in zip(downs, ups)]
    units += [[i + 1] for i, ch in enumerate(w) if ch == "s"]
    return _units_to_permutation(units, len(w))


def fv_extended_inverse(c: TwoMotzkinPath) -> Permutation:
    """Inverse of the extended map on M*_n.

    The down-step and broken-step values, read in increasing order, split
    into groups of consecutive broken values closed by one down value: each
    group is a run of consecutive excedance positions. A group's word is its
    values in increasing order followed by the paired descent bottom (the
    matching up-step value); solid values stay singleton blocks and all
    blocks are ordered by last letter.
    """
    _require_m_star(c, "fv_extended_inverse")
    w = c.word
    flagged = sorted(
        (i + 1, ch) for i, ch in enumerate(w) if ch in ("d", "b")
    )
    ups = [i + 1 for i, ch in enumerate(w) if ch == "u"]
    if sum(1 for _, ch in flagged if ch == "d") != len(ups):
        raise DomainError("down-step and up-step counts differ")
    units: list[list[int]] = [[i + 1] for i, ch in enumerate(w) if ch == "s"]
    run: list[int] = []
    k = 0
    for v, ch in flagged:
        run.append(v)
        if ch == "d":
            units.append(run + [ups[k]])
            k += 1
            run = []
    if run:
        raise DomainError("broken values above every down value cannot be placed")
    return _units_to_permutation(units, len(w))


def foata_zeilberger(p: Permutation) -> TwoMotzkinPath:
    """Position-indexed path: step i is broken when i is both an excedance
    and an excedance letter, solid when neither, up for excedance only, and
    down for excedance letter only. The height sum equals dexc."""
    w = p.word
    n = len(w)
    exc = {i for i in range(1, n + 1) if w[i - 1] > i}
    letters = {w[i - 1] for i in exc}
    code = []
    for i in range(1, n + 1):
        if i in exc:
            code.append("b" if i in letters else "u")
        else:
            code.append("d" if i in letters else "s")
    return TwoMotzkinPath("".join(code))


def fz_inverse_bi(c: TwoMotzkinPath) -> Permutation:
    """The unique bi-increasing permutation whose excedances are the up and
    broken indices and whose excedance letters are the down and broken
    indices."""
    _require_m_star(c, "fz_inverse_bi")
    w = c.word
    excedances = [i + 1 for i, ch in enumerate(w) if ch in ("u", "b")]
    letters = [i + 1 for i, ch in enumerate(w) if ch in ("d", "b")]
    return from_excedances(excedances, letters, len(w))


def polyomino_to_2motzkin(pp: ParallelogramPolyomino) -> TwoMotzkinPath:
    """Border-sum encoding: with A and B the shifted partial sums of gamma
    and delta, index i maps to d on A only, u on B only, b on both, s on
    neither. Solid steps at height 0 mark the singleton rows."""
    w = pp.width
    gsum = list(accumulate(pp.gamma))
    dsum = list(accumulate(pp.delta))
    a = {gsum[i - 1] + i for i in range(1, w)}
    b = {dsum[i - 1] + i for i in range(1, w)}
    n = w + pp.height - 1
    code = []
    for i in range(1, n + 1):
        in_a, in_b = i in a, i in b
        if in_a and in_b:
            code.append("b")
        elif in_a:
            code.append("d")
        elif in_b:
            code.append("u")
        else:
            code.append("s")
    return TwoMotzkinPath("".join(code))


def two_motzkin_to_parallelogram(c: TwoMotzkinPath) -> ParallelogramPolyomino:
    _require_m_star(c, "two_motzkin_to_parallelogram")
    w = c.word
    n = len(w)
    a = [i + 1 for i, ch in enumerate(w) if ch in ("d", "b")]
    b = [i + 1 for i, ch in enumerate(w) if ch in ("u", "b")]
    width = len(a) + 1
    height = n + 1 - width
    gsum = [v - i for i, v in enumerate(a, start=1)] + [height]
    dsum = [v - i for i, v in enumerate(b, start=1)] + [height]
    gamma = tuple(x - y for x, y in zip(gsum, [0] + gsum[:-1]))
    delta = tuple(x - y for x, y in zip(dsum, [0] + dsum[:-1]))
    return ParallelogramPolyomino(gamma, delta)


@dataclass(frozen=True)
class DeutschShapiroPaths:
    """Raw border-pair encoding (length n + 1) and its trimmed form (length
    n - 1, first and last step removed)."""

    raw: TwoMotzkinPath
    trimmed: TwoMotzkinPath


def deutsch_shapiro(pp: ParallelogramPolyomino) -> DeutschShapiroPaths:
    """Read both border paths step by step: north/east pairs of the upper and
    lower path become u, d, b, or s. The raw word starts with u, ends with d,
    and stays at height one or more in between; the trimmed word drops that
    wrapper."""
    upper = "".join("N" * g + "E" for g in pp.gamma)
    lower = "".join("E" + "N" * d for d in pp.delta)
    code = []
    for x, y in zip(upper, lower):
        if x == "N" and y == "E":
            code.append("u")
        elif x == "E" and y == "N":
            code.append("d")
        elif x == "E" and y == "E":
            code.append("b")
        else:
            code.append("s")
    raw = "".join(code)
    return DeutschShapiroPaths(TwoMotzkinPath(raw), TwoMotzkinPath(raw[1:-1]))


def deutsch_shapiro_inverse(trimmed: TwoMotzkinPath) -> ParallelogramPolyomino:
    raw = "u" + trimmed.word + "d"
    upper = []
    lower = []
    for ch in raw:
        if ch == "u":
            upper.append("N")
            lower.append("E")
        elif ch == "d":
            upper.append("E")
            lower.append("N")
        elif ch == "b":
            upper.append("E")
            lower.append("E")
        else:
            upper.append("N")
            lower.append("N")
    gamma = tuple(len(run) for run in "".join(upper).split("E")[:-1])
    delta = tuple(len(run) for run in "".join(lower).split("E")[1:])
    return ParallelogramPolyomino(gamma, delta)


def two_motzkin_to_dyck(c: TwoMotzkinPath) -> DyckPath:
    """Substitute u -> UU, d -> DD, s -> UD, b -> DU and wrap the word in one
    extra up-step and down-step; injective into Dyck paths of length 2n + 2."""
    sub = {"u": "UU", "d": "DD", "s": "UD", "b": "DU"}
    return DyckPath("U" + "".join(sub[ch] for ch in c.word) + "D")


def is_partition_path(c: TwoMotzkinPath) -> bool:
    """True iff the word is a {u, s} prefix followed by a {d, b} suffix,
    which happens exactly when the corresponding polyomino is a partition."""
    w = c.word
    k = 0
    while k < len(w) and w[k] in ("u", "s"):
        k += 1
    return all(ch in ("d", "b") for ch in w[k:])
