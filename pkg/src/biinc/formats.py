"""Text serialization for every object kind handled by the command line.

Kinds and grammars:

    perm           "2 6 1 3 7 4 5 8 10 9"      whitespace-separated values
    step           "alpha=1,4,1,3,1 beta=1,1,3,4,1"
    parallelogram  "gamma=1,3,0,2,0 delta=0,0,2,3,1"
    skew           "outer=5,4,4,4,3,3 inner=3,3,1,1,1"   (inner may be empty)
    staircase      "n=10 lambda=9,5,4,4,4,1,1,1,1"       (lambda may be empty)
    dyck           "UDUUUUDUDDDUUUDDDDUD"
    motzkin2       "ubsusddsud"
"""

from __future__ import annotations

from .errors import ParseError
from .paths import DyckPath, TwoMotzkinPath
from .permstats import Permutation
from .polyomino import ParallelogramPolyomino, SkewDiagram, StaircaseDiagram, StepPolyomino

__all__ = ["KINDS", "parse", "serialize"]

KINDS = ("perm", "step", "parallelogram", "skew", "staircase", "dyck", "motzkin2")


def _int_list(text: str, rule: str) -> list[int]:
    if text == "":
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise ParseError(f"{rule}: expected comma-separated integers, got {text!r}") from exc


def _keyed_fields(payload: str, keys: tuple[str, ...], rule: str) -> list[str]:
    parts = payload.split()
    if len(parts) != len(keys):
        raise ParseError(f"{rule}: expected fields {' '.join(k + '=...' for k in keys)}")
    values = []
    for part, key in zip(parts, keys):
        prefix = key + "="
        if not part.startswith(prefix):
            raise ParseError(f"{rule}: field {part!r} should start with {prefix!r}")
        values.append(part[len(prefix):])
    return values


def parse(kind: str, payload: str):
    payload = payload.strip()
    try:
        if kind == "perm":
            try:
                return Permutation.from_text(payload)
            except ValueError as exc:
                raise ParseError(f"perm: {exc}") from exc
        if kind == "step":
            a, b = _keyed_fields(payload, ("alpha", "beta"), "step")
            return StepPolyomino(tuple(_int_list(a, "step")), tuple(_int_list(b, "step")))
        if kind == "parallelogram":
            g, d = _keyed_fields(payload, ("gamma", "delta"), "parallelogram")
            return ParallelogramPolyomino(
                tuple(_int_list(g, "parallelogram")), tuple(_int_list(d, "parallelogram"))
            )
        if kind == "skew":
            o, i = _keyed_fields(payload, ("outer", "inner"), "skew")
            return SkewDiagram(tuple(_int_list(o, "skew")), tuple(_int_list(i, "skew")))
        if kind == "staircase":
            n, lam = _keyed_fields(payload, ("n", "lambda"), "staircase")
            try:
                size = int(n)
            except ValueError as exc:
                raise ParseError(f"staircase: n must be an integer, got {n!r}") from exc
            return StaircaseDiagram(tuple(_int_list(lam, "staircase")), size)
        if kind == "dyck":
            try:
                return DyckPath(payload)
            except ValueError as exc:
                raise ParseError(f"dyck: {exc}") from exc
        if kind == "motzkin2":
            try:
                return TwoMotzkinPath(payload)
            except ValueError as exc:
                raise ParseError(f"motzkin2: {exc}") from exc
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(f"{kind}: {exc}") from exc
    raise ParseError(f"unknown object kind {kind!r}; expected one of {KINDS}")


def serialize(obj) -> str:
    if isinstance(obj, Permutation):
        return obj.to_text()
    if isinstance(obj, StepPolyomino):
        return "alpha={} beta={}".format(
            ",".join(map(str, obj.alpha)), ",".join(map(str, obj.beta))
        )
    if isinstance(obj, ParallelogramPolyomino):
        return "gamma={} delta={}".format(
            ",".join(map(str, obj.gamma)), ",".join(map(str, obj.delta))
        )
    if isinstance(obj, SkewDiagram):
        return "outer={} inner={}".format(
            ",".join(map(str, obj.outer)), ",".join(map(str, obj.inner))
        )
    if isinstance(obj, StaircaseDiagram):
        return "n={} lambda={}".format(obj.n, ",".join(map(str, obj.parts)))
    if isinstance(obj, (DyckPath, TwoMotzkinPath)):
        return obj.word
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def kind_of(obj) -> str:
    if isinstance(obj, Permutation):
        return "perm"
    if isinstance(obj, StepPolyomino):
        return "step"
    if isinstance(obj, ParallelogramPolyomino):
        return "parallelogram"
    if isinstance(obj, SkewDiagram):
        return "skew"
    if isinstance(obj, StaircaseDiagram):
        return "staircase"
    if isinstance(obj, DyckPath):
        return "dyck"
    if isinstance(obj, TwoMotzkinPath):
        return "motzkin2"
    raise TypeError(f"no kind for {type(obj).__name__}")
