"""Monospace renderings of the object kinds, stable enough for golden-file
tests.

Cell pictures draw each cell as "[]". Polyominoes are drawn bottom row last
(Cartesian, like the border-path coordinates); skew and staircase diagrams
are drawn top row first with the inner partition as indentation. Dyck paths
use / and \\ placed at the step's upper level; 2-Motzkin level steps use _
(solid) and = (broken).
"""

from __future__ import annotations

from .paths import DyckPath, TwoMotzkinPath
from .permstats import Permutation
from .polyomino import (
    ParallelogramPolyomino,
    SkewDiagram,
    StaircaseDiagram,
    StepPolyomino,
)

__all__ = ["render"]


def _render_spans(spans: list[tuple[int, int]]) -> str:
    """Rows from top to bottom for columns spanning (bottom, top) levels."""
    height = max(top for _, top in spans)
    lines = []
    for r in range(height, 0, -1):
        cells = ["[]" if bot < r <= top else "  " for bot, top in spans]
        lines.append("".join(cells).rstrip())
    return "\n".join(lines)


def _render_rows_top_first(rows: list[tuple[int, int]]) -> str:
    """Rows given as (indent, length) pairs, top row first."""
    lines = []
    for indent, length in rows:
        lines.append(("  " * indent + "[]" * length).rstrip())
    return "\n".join(lines)


def _render_dyck(d: DyckPath) -> str:
    heights = []
    h = 0
    for ch in d.word:
        if ch == "U":
            h += 1
            heights.append(h)  # row of the rising stroke
        else:
            heights.append(h)  # row of the falling stroke
            h -= 1
    top = max(heights) if heights else 0
    lines = []
    for row in range(top, 0, -1):
        line = []
        for ch, hh in zip(d.word, heights):
            line.append(("/" if ch == "U" else "\\") if hh == row else " ")
        lines.append("".join(line).rstrip())
    return "\n".join(lines)


def _render_motzkin2(c: TwoMotzkinPath) -> str:
    rows = []
    h = 0
    for ch in c.word:
        if ch == "u":
            rows.append(h + 1)
            h += 1
        elif ch == "d":
            rows.append(h)
            h -= 1
        else:
            rows.append(h)
    top = max(rows) if rows else 0
    glyph = {"u": "/", "d": "\\", "s": "_", "b": "="}
    lines = []
    for row in range(top, -1, -1):
        line = []
        for ch, hh in zip(c.word, rows):
            line.append(glyph[ch] if hh == row else " ")
        text = "".join(line).rstrip()
        if text:
            lines.append(text)
    return "\n".join(lines)


def _render_perm(p: Permutation) -> str:
    n = p.n
    lines = []
    for v in range(n, 0, -1):
        col = p.word.index(v)
        lines.append(("." * col + "*" + "." * (n - col - 1)))
    return "\n".join(lines)


def render(obj) -> str:
    if isinstance(obj, Permutation):
        return _render_perm(obj)
    if isinstance(obj, (StepPolyomino, ParallelogramPolyomino)):
        return _render_spans(obj.column_spans())
    if isinstance(obj, SkewDiagram):
        inner = obj.inner_padded()
        return _render_rows_top_first(
            [(i, o - i) for o, i in zip(obj.outer, inner)]
        )
    if isinstance(obj, StaircaseDiagram):
        if not obj.parts:
            return "(empty diagram)"
        return _render_rows_top_first([(0, v) for v in obj.parts])
    if isinstance(obj, DyckPath):
        return _render_dyck(obj)
    if isinstance(obj, TwoMotzkinPath):
        return _render_motzkin2(obj)
    raise TypeError(f"cannot render {type(obj).__name__}")
