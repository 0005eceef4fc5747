"""The bijection graph used by the convert command.

Each named edge joins two object kinds; applying an edge name picks the
direction that matches the current kind. When no explicit route is given,
the unique shortest label sequence is used, and ambiguity is an error
rather than a guess (the pair perm -> motzkin2, for instance, always needs
an explicit route because three single edges reach it).
"""

from __future__ import annotations

from . import paths, permbij, polyomino
from .errors import DomainError

__all__ = ["ROUTE_NAMES", "apply_route", "default_route", "apply_edge"]

# name -> {source kind: (target kind, function)}
_EDGES: dict[str, dict[str, tuple[str, object]]] = {
    "step": {
        "perm": ("step", polyomino.perm_to_step),
        "step": ("perm", polyomino.step_to_perm),
    },
    "para": {
        "step": ("parallelogram", polyomino.step_to_parallelogram),
        "parallelogram": ("step", polyomino.parallelogram_to_step),
    },
    "staircase": {
        "step": ("staircase", polyomino.step_to_staircase),
        "staircase": ("step", polyomino.staircase_to_step),
    },
    "skew": {
        "parallelogram": ("skew", polyomino.polyomino_to_skew),
        "skew": ("parallelogram", polyomino.skew_to_polyomino),
    },
    "bjs": {
        "perm": ("dyck", paths.bjs),
        "dyck": ("perm", paths.bjs_inverse),
    },
    "dv": {
        "parallelogram": ("dyck", paths.delest_viennot),
        "dyck": ("parallelogram", paths.delest_viennot_inverse),
    },
    "fv": {
        "perm": ("motzkin2", paths.francon_viennot),
        "motzkin2": ("perm", paths.francon_viennot_inverse),
    },
    "fvx": {
        "perm": ("motzkin2", paths.fv_extended),
        "motzkin2": ("perm", paths.fv_extended_inverse),
    },
    "fz": {
        "perm": ("motzkin2", paths.foata_zeilberger),
        "motzkin2": ("perm", paths.fz_inverse_bi),
    },
    "abc": {
        "parallelogram": ("motzkin2", paths.polyomino_to_2motzkin),
        "motzkin2": ("parallelogram", paths.two_motzkin_to_parallelogram),
    },
    "ds": {
        "parallelogram": ("motzkin2", lambda pp: paths.deutsch_shapiro(pp).trimmed),
        "motzkin2": ("parallelogram", paths.deutsch_shapiro_inverse),
    },
    "psi": {"perm": ("perm", permbij.psi)},
    "hat": {"perm": ("perm", permbij.hat)},
    "foata": {"perm": ("perm", permbij.foata_phi)},
}

ROUTE_NAMES = tuple(sorted(_EDGES))


def apply_edge(name: str, obj, kind: str):
    if name not in _EDGES:
        raise DomainError(f"unknown route edge {name!r}; known edges: {', '.join(ROUTE_NAMES)}")
    directions = _EDGES[name]
    if kind not in directions:
        raise DomainError(f"edge {name!r} does not start at kind {kind!r}")
    target, fn = directions[kind]
    return fn(obj), target


def apply_route(obj, kind: str, names: list[str]):
    for name in names:
        obj, kind = apply_edge(name, obj, kind)
    return obj, kind


def default_route(src: str, dst: str) -> list[str]:
    """The unique shortest label sequence from src to dst; raises when no
    route exists or several shortest ones do."""
    if src == dst:
        return []
    adjacency: dict[str, list[tuple[str, str]]] = {}
    for name, directions in _EDGES.items():
        for s, (t, _) in directions.items():
            if s != t:  # self-loops never shorten a route
                adjacency.setdefault(s, []).append((name, t))
    frontier = [(src, [])]
    seen_depth = {src: 0}
    depth = 0
    while frontier:
        depth += 1
        nxt: list[tuple[str, list[str]]] = []
        hits: list[list[str]] = []
        for node, trail in frontier:
            for name, target in adjacency.get(node, []):
                if seen_depth.get(target, depth) < depth:
                    continue
                seen_depth[target] = depth
                path = trail + [name]
                if target == dst:
                    hits.append(path)
                else:
                    nxt.append((target, path))
        if hits:
            if len(hits) > 1:
                routes = " | ".join(",".join(h) for h in hits)
                raise DomainError(
                    f"route {src} -> {dst} is ambiguous ({routes}); pass --route explicitly"
                )
            return hits[0]
        frontier = nxt
    raise DomainError(f"no route from {src} to {dst}")
