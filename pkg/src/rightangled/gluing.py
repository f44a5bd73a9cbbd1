"""Doubling a right-angled polytope across one of its facets.

The double of P along facet h is P glued to its mirror image along h.
Facets meeting h along a ridge are orthogonal to it, so each merges with its
mirror into one facet.  Every other facet, including those tangent to h at a
cusp, appears twice.  h itself becomes interior.

Identifier scheme (deterministic):
  * surviving original facets keep their relative order and are renumbered
    0..r-1; mirror copies follow as r.. in the order of their originals;
  * vertices off h keep their id, their mirror gets the id with a prime
    appended (more primes if that id is taken); ideal vertices on h keep
    their id; finite vertices on h disappear.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .lattice import adjacent, partner_map
from .polytope import CombinatorialPolytope, Vertex

REMOVED = "removed"
MERGED = "merged"
KEPT_PAIR = "kept_pair"
DROPPED = "dropped"
IDENTIFIED = "identified"
DUPLICATED = "duplicated"


class DegenerateDoublingError(ValueError):
    pass


@dataclass(frozen=True)
class Fate:
    kind: str
    ids: tuple = ()


@dataclass(frozen=True)
class GluingMap:
    facet: int
    facet_fate: tuple[Fate, ...]
    vertex_fate: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "gluing_facet": self.facet,
            "facet_fate": [{"facet": i, "fate": f.kind, "ids": list(f.ids)} for i, f in enumerate(self.facet_fate)],
            "vertex_fate": [{"id": vid, "fate": f.kind, "ids": list(f.ids)} for vid, f in self.vertex_fate.items()],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"


def _mirror_id(vid: str, taken: set[str]) -> str:
    new = vid + "'"
    while new in taken:
        new += "'"
    taken.add(new)
    return new


def predict_counts(P: CombinatorialPolytope, h: int) -> tuple[int, int, int]:
    """(facets, v_fin, v_inf) of the double along h, without building it."""
    _check_facet(P, h)
    m = sum(1 for g in range(P.facet_count) if g != h and adjacent(P, g, h))
    on_h = [P.vertex(vid) for vid in P.facet_vertices[h]]
    f_h = sum(1 for v in on_h if not v.is_ideal)
    i_h = len(on_h) - f_h
    return 2 * (P.facet_count - 1) - m, 2 * (P.v_fin - f_h), i_h + 2 * (P.v_inf - i_h)


def _check_facet(P, h):
    if not isinstance(h, int) or not 0 <= h < P.facet_count:
        raise IndexError(f"facet {h!r} out of range 0..{P.facet_count - 1}")


def double(P: CombinatorialPolytope, h: int) -> tuple[CombinatorialPolytope, GluingMap]:
    _check_facet(P, h)
    partner = partner_map(P)

    merged = {g for g in range(P.facet_count) if g != h and adjacent(P, g, h)}
    survivors = [g for g in range(P.facet_count) if g != h]
    orig = {g: i for i, g in enumerate(survivors)}
    doubled = [g for g in survivors if g not in merged]
    mirror = {g: len(survivors) + i for i, g in enumerate(doubled)}
    for g in merged:
        mirror[g] = orig[g]

    facet_fate = []
    for g in range(P.facet_count):
        if g == h:
            facet_fate.append(Fate(REMOVED))
        elif g in merged:
            facet_fate.append(Fate(MERGED, (orig[g],)))
        else:
            facet_fate.append(Fate(KEPT_PAIR, (orig[g], mirror[g])))

    taken = {v.id for v in P.vertices}
    front: list[Vertex] = []
    back: list[Vertex] = []
    pairings: dict[str, list[tuple[int, int]]] = {}
    vertex_fate = {}
    for v in P.vertices:
        if h in v.facets:
            if not v.is_ideal:
                vertex_fate[v.id] = Fate(DROPPED)
                continue
            p = partner[v.id][h]
            rest = v.facets - {h, p}
            facets = frozenset(orig[g] for g in rest) | {orig[p], mirror[p]}
            front.append(Vertex(v.id, v.kind, facets))
            pairs = [(orig[a], orig[b]) for a, b in partner[v.id].items() if a < b and h not in (a, b)]
            pairings[v.id] = pairs + [(orig[p], mirror[p])]
            vertex_fate[v.id] = Fate(IDENTIFIED, (v.id,))
            continue
        twin = _mirror_id(v.id, taken)
        front.append(Vertex(v.id, v.kind, frozenset(orig[g] for g in v.facets)))
        back.append(Vertex(twin, v.kind, frozenset(mirror[g] for g in v.facets)))
        if v.is_ideal:
            pairs = [(a, b) for a, b in partner[v.id].items() if a < b]
            pairings[v.id] = [(orig[a], orig[b]) for a, b in pairs]
            pairings[twin] = [(mirror[a], mirror[b]) for a, b in pairs]
        vertex_fate[v.id] = Fate(DUPLICATED, (v.id, twin))

    vertices = tuple(front + back)
    seen: dict[frozenset[int], str] = {}
    for v in vertices:
        if v.facets in seen:
            raise DegenerateDoublingError(
                f"doubling degenerate: vertices {seen[v.facets]!r} and {v.id!r} get the same facets; "
                "input not realizable"
            )
        seen[v.facets] = v.id

    out = CombinatorialPolytope(P.dim, len(survivors) + len(doubled), vertices, pairings)
    return out, GluingMap(h, tuple(facet_fate), vertex_fate)


@dataclass(frozen=True)
class ReductionStep:
    facet: int
    common_before: int
    common_after: int
    dim_before: int
    dim_after: int


@dataclass
class ReductionTrace:
    u: str
    v: str
    steps: list[ReductionStep]
    polytope: CombinatorialPolytope

    @property
    def final_common(self) -> frozenset[int]:
        return self.polytope.vertex(self.u).facets & self.polytope.vertex(self.v).facets


def smallest(common) -> int:
    return min(common)


def reduce_ideal_pair(P: CombinatorialPolytope, u: str, v: str, target_dim: int = 4,
                      choose=smallest) -> ReductionTrace:
    """Double along shared facets until the minimal common face of u and v
    has dimension >= target_dim or they share no facet at all.

    Dimensions are reported as ``n - |common facets|`` (n once nothing is
    shared).  ``choose`` picks the gluing facet from the common set.
    """
    if u == v:
        raise ValueError("reduction needs two distinct vertices")
    for vid in (u, v):
        if not P.vertex(vid).is_ideal:
            raise ValueError(f"vertex {vid!r} is not ideal")
    n = P.dim
    steps = []
    while True:
        common = P.vertex(u).facets & P.vertex(v).facets
        if not common or n - len(common) >= target_dim:
            break
        h = choose(common)
        P, gmap = double(P, h)
        # ideal vertices on h are identified with their mirror, never dropped
        u = gmap.vertex_fate[u].ids[0]
        v = gmap.vertex_fate[v].ids[0]
        after = P.vertex(u).facets & P.vertex(v).facets
        steps.append(ReductionStep(h, len(common), len(after), n - len(common), n - len(after)))
    return ReductionTrace(u, v, steps, P)
