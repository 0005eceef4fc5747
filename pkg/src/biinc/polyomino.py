"""Step and parallelogram polyominoes, staircase Young diagrams, skew
diagrams, and the conversions between them and bi-increasing permutations.

Polyominoes are stored by their border compositions, never as cell grids.

A step polyomino is the pair (alpha, beta) of equal-length positive
compositions of n with alpha dominating beta; it has width w = len(alpha) and
height n + 1, and its column j spans the rows beta_1+..+beta_{j-1} + 1
through alpha_1+..+alpha_j + 1 (rows are counted from the bottom, starting
at 1).

A parallelogram polyomino is the pair (gamma, delta) of equal-length
non-negative compositions with equal sums; column j spans the rows
delta_1+..+delta_{j-1} + 1 through gamma_1+..+gamma_j. Cells are addressed
as (column, row).

Diagonal d of a parallelogram polyomino collects the cells with
column + row == d + 1, so d runs from 1 to width + height - 1; this is the
orientation in which the diagonal lengths of the running example multiply
to 16.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate

from .errors import DomainError
from .permbij import from_excedances
from .permstats import Permutation, is_bi_increasing

__all__ = [
    "StepPolyomino",
    "ParallelogramPolyomino",
    "StaircaseDiagram",
    "SkewDiagram",
    "PolyominoMetrics",
    "perm_to_step",
    "step_to_perm",
    "step_to_staircase",
    "staircase_to_step",
    "step_to_parallelogram",
    "parallelogram_to_step",
    "perm_to_parallelogram",
    "polyomino_metrics",
    "row_overlaps",
    "rotate180",
    "polyomino_to_skew",
    "skew_to_polyomino",
    "reduced_code",
    "rank",
]


@dataclass(frozen=True)
class StepPolyomino:
    """Pair of positive compositions (alpha, beta) with alpha dominating."""

    alpha: tuple[int, ...]
    beta: tuple[int, ...]

    def __post_init__(self) -> None:
        alpha = tuple(int(a) for a in self.alpha)
        beta = tuple(int(b) for b in self.beta)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        if not alpha or len(alpha) != len(beta):
            raise ValueError("alpha and beta must be non-empty and of equal length")
        if min(alpha) < 1 or min(beta) < 1:
            raise ValueError("compositions must have positive parts")
        if sum(alpha) != sum(beta):
            raise ValueError("alpha and beta must be compositions of the same n")
        asum = bsum = 0
        for a, b in zip(alpha, beta):
            asum += a
            bsum += b
            if asum < bsum:
                raise DomainError(
                    f"dominance fails: partial sums {asum} < {bsum}; border paths intersect"
                )

    @property
    def n(self) -> int:
        return sum(self.alpha)

    @property
    def width(self) -> int:
        return len(self.alpha)

    @property
    def height(self) -> int:
        return self.n + 1

    def column_spans(self) -> list[tuple[int, int]]:
        """(bottom, top) levels per column; column cells are rows bottom+1..top."""
        atop = list(accumulate(self.alpha))
        bbot = [0] + list(accumulate(self.beta))[:-1]
        return [(b, a + 1) for a, b in zip(atop, bbot)]

    @property
    def area(self) -> int:
        return sum(top - bot for bot, top in self.column_spans())

    def cells(self) -> set[tuple[int, int]]:
        return {
            (j + 1, r)
            for j, (bot, top) in enumerate(self.column_spans())
            for r in range(bot + 1, top + 1)
        }


@dataclass(frozen=True)
class ParallelogramPolyomino:
    """Pair of non-negative compositions (gamma, delta): the vertical segment
    lengths of the upper and lower border paths."""

    gamma: tuple[int, ...]
    delta: tuple[int, ...]

    def __post_init__(self) -> None:
        gamma = tuple(int(g) for g in self.gamma)
        delta = tuple(int(d) for d in self.delta)
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "delta", delta)
        if not gamma or len(gamma) != len(delta):
            raise ValueError("gamma and delta must be non-empty and of equal length")
        if min(gamma) < 0 or min(delta) < 0:
            raise ValueError("compositions must have non-negative parts")
        if sum(gamma) != sum(delta):
            raise ValueError("gamma and delta must have the same sum")
        for bot, top in self.column_spans():
            if top - bot < 1:
                raise DomainError("border paths touch: every column needs at least one cell")

    @property
    def width(self) -> int:
        return len(self.gamma)

    @property
    def height(self) -> int:
        return sum(self.gamma)

    @property
    def perimeter(self) -> int:
        return 2 * (self.width + self.height)

    def column_spans(self) -> list[tuple[int, int]]:
        gtop = list(accumulate(self.gamma))
        dbot = [0] + list(accumulate(self.delta))[:-1]
        return [(b, a) for a, b in zip(gtop, dbot)]

    @property
    def column_heights(self) -> tuple[int, ...]:
        return tuple(top - bot for bot, top in self.column_spans())

    @property
    def area(self) -> int:
        return sum(self.column_heights)

    def cells(self) -> set[tuple[int, int]]:
        return {
            (j + 1, r)
            for j, (bot, top) in enumerate(self.column_spans())
            for r in range(bot + 1, top + 1)
        }


@dataclass(frozen=True)
class StaircaseDiagram:
    """A partition fitting inside the staircase (n-1, n-2, ..., 1)."""

    parts: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        parts = tuple(int(v) for v in self.parts if int(v) > 0)
        object.__setattr__(self, "parts", parts)
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError("parts must be weakly decreasing")
        if self.n < 1:
            raise ValueError("n must be at least 1")
        for i, v in enumerate(parts, start=1):
            if v > self.n - i:
                raise DomainError(
                    f"row {i} of length {v} exceeds the staircase bound {self.n - i}"
                )

    def corners(self) -> list[tuple[int, int]]:
        """(row, column) of each inner corner, rows counted from the top."""
        out = []
        rows = 0
        for v in sorted(set(self.parts), reverse=True):
            rows += sum(1 for x in self.parts if x == v)
            out.append((rows, v))
        return out


@dataclass(frozen=True)
class SkewDiagram:
    """The cells of outer minus inner, for partitions inner within outer."""

    outer: tuple[int, ...]
    inner: tuple[int, ...]

    def __post_init__(self) -> None:
        outer = tuple(int(v) for v in self.outer if int(v) > 0)
        inner = tuple(int(v) for v in self.inner if int(v) > 0)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        if not outer:
            raise ValueError("outer partition must be non-empty")
        if any(a < b for a, b in zip(outer, outer[1:])) or any(
            a < b for a, b in zip(inner, inner[1:])
        ):
            raise ValueError("partitions must be weakly decreasing")
        if len(inner) > len(outer):
            raise ValueError("inner partition has more rows than outer")
        if any(i > o for i, o in zip(inner, outer)):
            raise ValueError("inner partition must fit inside outer")

    def inner_padded(self) -> tuple[int, ...]:
        return self.inner + (0,) * (len(self.outer) - len(self.inner))

    @property
    def is_connected(self) -> bool:
        inner = self.inner_padded()
        if any(i >= o for i, o in zip(inner, self.outer)):
            return False
        return all(inner[r] < self.outer[r + 1] for r in range(len(self.outer) - 1))

    @property
    def perimeter(self) -> int:
        return 2 * (self.outer[0] + len(self.outer))

    def cells(self) -> set[tuple[int, int]]:
        """(row, column) pairs, rows counted from the top."""
        inner = self.inner_padded()
        return {
            (r + 1, c)
            for r, (o, i) in enumerate(zip(self.outer, inner))
            for c in range(i + 1, o + 1)
        }


def _excedance_data(p: Permutation) -> tuple[list[int], list[int]]:
    w = p.word
    exc = [i for i in range(1, len(w)) if w[i - 1] > i]
    return exc, [w[i - 1] for i in exc]


def perm_to_step(p: Permutation) -> StepPolyomino:
    """Encode a bi-increasing permutation as a step polyomino of width
    exc + 1, height n + 1, and area dexc + n + 1. The partial sums of beta
    are the excedances and the partial sums of alpha, plus one, the
    excedance letters."""
    if not is_bi_increasing(p):
        raise DomainError("perm_to_step needs a bi-increasing permutation")
    n = p.n
    exc, letters = _excedance_data(p)
    a = [0] + [v - 1 for v in letters] + [n]
    b = [0] + exc + [n]
    alpha = tuple(a[k] - a[k - 1] for k in range(1, len(a)))
    beta = tuple(b[k] - b[k - 1] for k in range(1, len(b)))
    return StepPolyomino(alpha, beta)


def step_to_perm(sp: StepPolyomino) -> Permutation:
    asum = list(accumulate(sp.alpha))
    bsum = list(accumulate(sp.beta))
    excedances = bsum[:-1]
    letters = [v + 1 for v in asum[:-1]]
    return from_excedances(excedances, letters, sp.n)


def step_to_staircase(sp: StepPolyomino) -> StaircaseDiagram:
    """The Young diagram inside the staircase (n-1, ..., 1) whose corners sit
    at (excedance, n + 1 - letter)."""
    n = sp.n
    asum = list(accumulate(sp.alpha))
    bsum = list(accumulate(sp.beta))
    lam = [n - v for v in asum[:-1]]
    mu_rev = bsum[:-1]
    parts: list[int] = []
    prev_rows = 0
    for rows, col in zip(mu_rev, lam):
        parts.extend([col] * (rows - prev_rows))
        prev_rows = rows
    return StaircaseDiagram(tuple(parts), n)


def staircase_to_step(d: StaircaseDiagram, n: int | None = None) -> StepPolyomino:
    if n is None:
        n = d.n
    elif n != d.n:
        raise ValueError(f"diagram was built for n={d.n}, got n={n}")
    corners = d.corners()
    asum = [n - col for _, col in corners] + [n]
    bsum = [row for row, _ in corners] + [n]
    alpha = tuple(a - b for a, b in zip(asum, [0] + asum[:-1]))
    beta = tuple(a - b for a, b in zip(bsum, [0] + bsum[:-1]))
    return StepPolyomino(alpha, beta)


def step_to_parallelogram(sp: StepPolyomino) -> ParallelogramPolyomino:
    """Shrink every horizontal border segment overlap by one: the result has
    perimeter 2n + 2, the same width, and area smaller by the width."""
    w = sp.width
    gamma = (sp.alpha[0],) + tuple(a - 1 for a in sp.alpha[1:])
    delta = tuple(b - 1 for b in sp.beta[: w - 1]) + (sp.beta[-1],)
    return ParallelogramPolyomino(gamma, delta)


def parallelogram_to_step(pp: ParallelogramPolyomino) -> StepPolyomino:
    w = pp.width
    alpha = (pp.gamma[0],) + tuple(g + 1 for g in pp.gamma[1:])
    beta = tuple(d + 1 for d in pp.delta[: w - 1]) + (pp.delta[-1],)
    return StepPolyomino(alpha, beta)


def perm_to_parallelogram(p: Permutation) -> ParallelogramPolyomino:
    """Parallelogram polyomino of perimeter 2n + 2, width exc + 1, and area
    n + dexc - exc; its singleton rows mark the fixed points."""
    return step_to_parallelogram(perm_to_step(p))


@dataclass(frozen=True)
class PolyominoMetrics:
    width: int
    height: int
    perimeter: int
    area: int
    column_heights: tuple[int, ...]
    row_lengths: tuple[int, ...]
    singleton_rows: int
    diagonal_lengths: tuple[int, ...]
    last_column_cells: int
    cells_with_right_neighbor: int


def polyomino_metrics(pp: ParallelogramPolyomino) -> PolyominoMetrics:
    """Cell-level measurements, computed on demand from the border
    compositions. Row 1 is the bottom row; diagonal lengths are listed for
    column + row = 2, 3, ..., width + height."""
    spans = pp.column_spans()
    w, h = pp.width, pp.height
    row_lengths = tuple(
        sum(1 for bot, top in spans if bot < r <= top) for r in range(1, h + 1)
    )
    diag = [0] * (w + h - 1)
    for j, (bot, top) in enumerate(spans, start=1):
        for r in range(bot + 1, top + 1):
            diag[j + r - 2] += 1
    overlap = sum(
        max(0, min(spans[j][1], spans[j + 1][1]) - max(spans[j][0], spans[j + 1][0]))
        for j in range(w - 1)
    )
    return PolyominoMetrics(
        width=w,
        height=h,
        perimeter=pp.perimeter,
        area=pp.area,
        column_heights=pp.column_heights,
        row_lengths=row_lengths,
        singleton_rows=sum(1 for x in row_lengths if x == 1),
        diagonal_lengths=tuple(diag),
        last_column_cells=pp.column_heights[-1],
        cells_with_right_neighbor=overlap,
    )


def row_overlaps(sp: StepPolyomino) -> tuple[int, ...]:
    """For each pair of adjacent rows of a step polyomino, the number of
    columns containing both; the product of these n values is the size of
    the underlying hat-equivalence class."""
    spans = sp.column_spans()
    return tuple(
        sum(1 for bot, top in spans if bot < r and r + 1 <= top)
        for r in range(1, sp.height)
    )


def _flip_path(word: str) -> str:
    return "".join("N" if ch == "E" else "E" for ch in reversed(word))


def rotate180(pp: ParallelogramPolyomino) -> ParallelogramPolyomino:
    """Reverse both border paths and exchange north and east steps. An
    involution that swaps width and height and preserves area, perimeter,
    and the multiset of diagonal lengths."""
    upper = "".join("N" * g + "E" for g in pp.gamma)
    lower = "".join("E" + "N" * d for d in pp.delta)
    new_upper = _flip_path(upper)
    new_lower = _flip_path(lower)
    gamma = tuple(len(run) for run in new_upper.split("E")[:-1])
    delta = tuple(len(run) for run in new_lower.split("E")[1:])
    return ParallelogramPolyomino(gamma, delta)


def polyomino_to_skew(pp: ParallelogramPolyomino) -> SkewDiagram:
    """Read (gamma, delta) as the connected skew diagram whose outer rows are
    the multiset {j repeated delta_j} and whose inner rows are
    {j repeated gamma_{j+1}}."""
    outer = sorted(
        (j for j, d in enumerate(pp.delta, start=1) for _ in range(d)), reverse=True
    )
    inner = sorted(
        (j for j, g in enumerate(pp.gamma[1:], start=1) for _ in range(g)), reverse=True
    )
    return SkewDiagram(tuple(outer), tuple(inner))


def skew_to_polyomino(sd: SkewDiagram) -> ParallelogramPolyomino:
    if not sd.is_connected:
        raise DomainError("skew diagram is disconnected")
    w = sd.outer[0]
    h = len(sd.outer)
    delta = tuple(sum(1 for v in sd.outer if v == j) for j in range(1, w + 1))
    gamma_tail = [sum(1 for v in sd.inner if v == j) for j in range(1, w)]
    gamma = (h - len(sd.inner),) + tuple(gamma_tail)
    return ParallelogramPolyomino(gamma, delta)


def reduced_code(sd: SkewDiagram) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Boundary words (a, b) of a connected skew diagram: unit steps along the
    lower and upper borders, vertical steps written 0 and horizontal steps 1,
    both read from the lower-left edge moving north and east."""
    pp = skew_to_polyomino(sd)
    size = pp.width + pp.height
    gsum = list(accumulate(pp.gamma))
    dsum = list(accumulate(pp.delta))
    b_ones = {gsum[i - 1] + i for i in range(1, pp.width + 1)}
    a_ones = {1} | {dsum[i - 1] + i + 1 for i in range(1, pp.width)}
    a = tuple(1 if i in a_ones else 0 for i in range(1, size + 1))
    b = tuple(1 if i in b_ones else 0 for i in range(1, size + 1))
    return a, b


def rank(sd: SkewDiagram) -> int:
    """Number of (0 over 1) columns of the reduced code; the Durfee rank when
    the diagram is a plain partition."""
    a, b = reduced_code(sd)
    return sum(1 for x, y in zip(a, b) if x == 0 and y == 1)
