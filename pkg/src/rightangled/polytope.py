"""Combinatorial model of an edge-simple right-angled polytope.

A polytope is stored as nothing more than its vertex-facet incidences:
every face is derived from them on demand (see :mod:`rightangled.lattice`).
Instances are immutable; derived data is cached per instance.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping

FINITE = "finite"
IDEAL = "ideal"
VERTEX_KINDS = (FINITE, IDEAL)

_TOP_KEYS = {"dim", "facet_count", "vertices", "pairings"}
_VERTEX_KEYS = {"id", "type", "facets"}


class StructureError(ValueError):
    """Input is malformed (bad JSON shape, index out of range, duplicate id).

    Distinct from a validation failure: a structurally sound polytope may
    still violate the combinatorial rules checked by ``validate``.
    """


@dataclass(frozen=True)
class Vertex:
    id: str
    kind: str
    facets: frozenset[int]

    @property
    def is_ideal(self) -> bool:
        return self.kind == IDEAL


Pairs = tuple[tuple[int, int], ...]


def _normalize_pairs(pairs) -> Pairs:
    out = []
    for pair in pairs:
        pair = tuple(pair)
        if len(pair) != 2:
            raise StructureError(f"cusp pair must have 2 entries, got {list(pair)}")
        a, b = pair
        out.append((min(a, b), max(a, b)))
    return tuple(sorted(out))


@dataclass(frozen=True)
class CombinatorialPolytope:
    dim: int
    facet_count: int
    vertices: tuple[Vertex, ...]
    pairings: Mapping[str, Pairs] | None = field(default=None)

    def __post_init__(self):
        if not isinstance(self.dim, int) or isinstance(self.dim, bool) or self.dim < 2:
            raise StructureError(f"dim must be an integer >= 2, got {self.dim!r}")
        if not isinstance(self.facet_count, int) or self.facet_count < 1:
            raise StructureError(f"facet_count must be a positive integer, got {self.facet_count!r}")
        object.__setattr__(self, "vertices", tuple(self.vertices))
        seen = set()
        for v in self.vertices:
            if v.id in seen:
                raise StructureError(f"duplicate vertex id {v.id!r}")
            seen.add(v.id)
            if v.kind not in VERTEX_KINDS:
                raise StructureError(f"vertex {v.id!r}: unknown type {v.kind!r}")
            for f in v.facets:
                if not isinstance(f, int) or not 0 <= f < self.facet_count:
                    raise StructureError(f"vertex {v.id!r}: facet index {f!r} out of range")
        if self.pairings is not None:
            norm = {}
            for vid, pairs in self.pairings.items():
                if vid not in seen:
                    raise StructureError(f"pairing given for unknown vertex {vid!r}")
                pairs = _normalize_pairs(pairs)
                for a, b in pairs:
                    for f in (a, b):
                        if not isinstance(f, int) or not 0 <= f < self.facet_count:
                            raise StructureError(f"pairing at {vid!r}: facet index {f!r} out of range")
                norm[vid] = pairs
            object.__setattr__(self, "pairings", dict(sorted(norm.items())))

    @cached_property
    def vertex_by_id(self) -> dict[str, Vertex]:
        return {v.id: v for v in self.vertices}

    @cached_property
    def facet_vertices(self) -> tuple[frozenset[str], ...]:
        """For each facet index, the ids of the vertices lying on it."""
        acc: list[set[str]] = [set() for _ in range(self.facet_count)]
        for v in self.vertices:
            for f in v.facets:
                acc[f].add(v.id)
        return tuple(frozenset(s) for s in acc)

    @cached_property
    def _cache(self) -> dict:
        return {}

    @property
    def v_fin(self) -> int:
        return sum(1 for v in self.vertices if not v.is_ideal)

    @property
    def v_inf(self) -> int:
        return sum(1 for v in self.vertices if v.is_ideal)

    def shared_vertices(self, f: int, g: int) -> frozenset[str]:
        return self.facet_vertices[f] & self.facet_vertices[g]

    def vertex(self, vid: str) -> Vertex:
        try:
            return self.vertex_by_id[vid]
        except KeyError:
            raise KeyError(f"unknown vertex id {vid!r}") from None


def to_dict(p: CombinatorialPolytope) -> dict:
    d = {
        "dim": p.dim,
        "facet_count": p.facet_count,
        "vertices": [
            {"id": v.id, "type": v.kind, "facets": sorted(v.facets)} for v in p.vertices
        ],
    }
    if p.pairings is not None:
        d["pairings"] = {vid: [list(pair) for pair in pairs] for vid, pairs in p.pairings.items()}
    return d


def dumps(p: CombinatorialPolytope) -> str:
    return json.dumps(to_dict(p), indent=2, ensure_ascii=False) + "\n"


def from_dict(d) -> CombinatorialPolytope:
    if not isinstance(d, dict):
        raise StructureError("polytope must be a JSON object")
    unknown = set(d) - _TOP_KEYS
    if unknown:
        raise StructureError(f"unknown keys: {sorted(unknown)}")
    for key in ("dim", "facet_count", "vertices"):
        if key not in d:
            raise StructureError(f"missing key {key!r}")
    if not isinstance(d["vertices"], list):
        raise StructureError("'vertices' must be an array")
    vertices = []
    for raw in d["vertices"]:
        if not isinstance(raw, dict):
            raise StructureError("vertex entries must be objects")
        unknown = set(raw) - _VERTEX_KEYS
        if unknown:
            raise StructureError(f"unknown vertex keys: {sorted(unknown)}")
        if set(raw) != _VERTEX_KEYS:
            raise StructureError(f"vertex entry missing keys: {sorted(_VERTEX_KEYS - set(raw))}")
        if not isinstance(raw["id"], str):
            raise StructureError("vertex id must be a string")
        facets = raw["facets"]
        if not isinstance(facets, list) or not all(
            isinstance(f, int) and not isinstance(f, bool) for f in facets
        ):
            raise StructureError(f"vertex {raw['id']!r}: facets must be an integer array")
        if len(set(facets)) != len(facets):
            raise StructureError(f"vertex {raw['id']!r}: repeated facet index")
        vertices.append(Vertex(raw["id"], raw["type"], frozenset(facets)))
    pairings = d.get("pairings")
    if pairings is not None and not isinstance(pairings, dict):
        raise StructureError("'pairings' must be an object")
    return CombinatorialPolytope(d["dim"], d["facet_count"], tuple(vertices), pairings)


def loads(text: str) -> CombinatorialPolytope:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructureError(f"invalid JSON: {exc}") from None
    return from_dict(d)


def load(path) -> CombinatorialPolytope:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def dump(p: CombinatorialPolytope, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(p))
