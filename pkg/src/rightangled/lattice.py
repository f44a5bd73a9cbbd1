"""Face lattice of a combinatorial right-angled polytope.

Faces are never stored.  A k-face is a set of ``n - k`` facets that is an
*admissible* subset of some vertex's facet set: any subset at a finite
vertex, and at an ideal vertex a subset taking at most one facet from each
cusp pair (the opposite-facet pairs of the cube link).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .polytope import CombinatorialPolytope, Vertex


class CuspPairingError(ValueError):
    """The facets at some ideal vertex do not form a cube link."""


class UndefinedAverageError(ZeroDivisionError):
    pass


@dataclass(frozen=True)
class Face:
    facet_set: frozenset[int]
    dim: int
    vertex_ids: frozenset[str]


@dataclass(frozen=True)
class WholePolytope:
    """Marker returned when two vertices share no facet."""

    dim: int


@dataclass(frozen=True)
class FaceVector:
    a: tuple[int, ...]
    v_fin: int
    v_inf: int


@dataclass(frozen=True)
class Violation:
    rule: str
    message: str

    def __str__(self):
        return f"[{self.rule}] {self.message}"


# rule identifiers, in report order
DEGREE_RULE = "vertex-degree"
FACET_COUNT_RULE = "facet-count"
FACET_COVER_RULE = "facet-cover"
DISTINCT_RULE = "distinct-facet-sets"
ADJACENCY_RULE = "facet-adjacency"
PAIRING_RULE = "cusp-pairing"
EDGE_RULE = "edge-simple"
SUPPORT_RULE = "face-support"
CONNECTIVITY_RULE = "face-connectivity"
DEGREE_SUM_RULE = "degree-sum-3d"

ALL_RULES = (
    DEGREE_RULE, FACET_COUNT_RULE, FACET_COVER_RULE, DISTINCT_RULE, ADJACENCY_RULE,
    PAIRING_RULE, EDGE_RULE, SUPPORT_RULE, CONNECTIVITY_RULE, DEGREE_SUM_RULE,
)


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def rules_fired(self) -> list[str]:
        return sorted({v.rule for v in self.violations}, key=ALL_RULES.index)

    def lines(self) -> list[str]:
        out = [str(v) for v in self.violations]
        out += [f"[skipped] {rule}" for rule in self.skipped]
        return out


def expected_degree(n: int, vertex: Vertex) -> int:
    return 2 * (n - 1) if vertex.is_ideal else n


# -- cusp pairings -------------------------------------------------------

def _pairing_problems(P: CombinatorialPolytope):
    """Derive partner maps; return (pairings, problems).

    ``pairings`` maps each ideal vertex id to ``{facet: partner}``; vertices
    whose link is not a parallelepiped are omitted and listed in problems.
    """
    pairings: dict[str, dict[int, int]] = {}
    problems: list[str] = []
    for v in P.vertices:
        if not v.is_ideal:
            continue
        partner: dict[int, int] = {}
        bad = False
        for h in sorted(v.facets):
            cands = [g for g in sorted(v.facets) if g != h and P.shared_vertices(h, g) == {v.id}]
            if len(cands) != 1:
                what = "no partner" if not cands else f"partners {cands}"
                problems.append(
                    f"ideal vertex {v.id!r}: facet {h} has {what}; cusp link is not a parallelepiped"
                )
                bad = True
                break
            partner[h] = cands[0]
        if not bad and any(partner[partner[h]] != h for h in partner):
            problems.append(f"ideal vertex {v.id!r}: tangency relation is not a matching")
            bad = True
        if not bad:
            pairings[v.id] = partner
    return pairings, problems


def derive_cusp_pairing(P: CombinatorialPolytope) -> dict[str, tuple[tuple[int, int], ...]]:
    """For every ideal vertex, the matching of its facets into tangent pairs.

    Facets ``H, H'`` at ideal vertex ``v`` are paired iff the only vertex
    they share is ``v``.  Raises :class:`CuspPairingError` when some facet
    has zero or several such partners, or when two facets meet in a single
    finite vertex (only possible in an invalid input when ``n >= 3``).
    """
    if P.dim >= 3:
        bad = _finite_point_contacts(P)
        if bad:
            f, g, w = bad[0]
            raise CuspPairingError(f"facets {f} and {g} share only the finite vertex {w!r}")
    pairings, problems = _pairing_problems(P)
    if problems:
        raise CuspPairingError(problems[0])
    return {vid: _as_pairs(partner) for vid, partner in pairings.items()}


def _as_pairs(partner: dict[int, int]) -> tuple[tuple[int, int], ...]:
    return tuple(sorted({(min(a, b), max(a, b)) for a, b in partner.items()}))


def _finite_point_contacts(P: CombinatorialPolytope):
    out = []
    for f, g in itertools.combinations(range(P.facet_count), 2):
        shared = P.shared_vertices(f, g)
        if len(shared) == 1:
            (w,) = shared
            if not P.vertex(w).is_ideal:
                out.append((f, g, w))
    return out


def partner_map(P: CombinatorialPolytope) -> dict[str, dict[int, int]]:
    """Partner lookup per ideal vertex: explicit pairings win, else derived."""
    cache = P._cache
    if "partner" not in cache:
        if P.pairings is not None and all(v.id in P.pairings for v in P.vertices if v.is_ideal):
            partner = {}
            for vid, pairs in P.pairings.items():
                m = {}
                for a, b in pairs:
                    m[a] = b
                    m[b] = a
                partner[vid] = m
        else:
            partner, problems = _pairing_problems(P)
            if problems:
                raise CuspPairingError(problems[0])
        cache["partner"] = partner
    return cache["partner"]


def adjacent(P: CombinatorialPolytope, f: int, g: int) -> bool:
    """Facets span a common ridge: they share two vertices or a finite one."""
    shared = P.shared_vertices(f, g)
    return len(shared) >= 2 or any(not P.vertex(w).is_ideal for w in shared)


# -- faces ---------------------------------------------------------------

def _admissible_supersets(vertex: Vertex, partner: dict[int, int] | None, base: frozenset[int], size: int):
    """Admissible facet subsets at ``vertex`` of the given size containing ``base``."""
    extra = size - len(base)
    if extra < 0 or not base <= vertex.facets:
        return
    if not vertex.is_ideal:
        rest = sorted(vertex.facets - base)
        for combo in itertools.combinations(rest, extra):
            yield base | frozenset(combo)
        return
    if any(partner[f] in base for f in base):
        return
    free_pairs = sorted(
        {(min(f, partner[f]), max(f, partner[f])) for f in vertex.facets - base}
        - {(min(f, partner[f]), max(f, partner[f])) for f in base}
    )
    for chosen in itertools.combinations(free_pairs, extra):
        for pick in itertools.product(*chosen):
            yield base | frozenset(pick)


def _faces_by_size(P: CombinatorialPolytope, size: int) -> dict[frozenset[int], frozenset[str]]:
    cache = P._cache.setdefault("faces", {})
    if size not in cache:
        partner = partner_map(P)
        acc: dict[frozenset[int], set[str]] = {}
        empty = frozenset()
        for v in P.vertices:
            for s in _admissible_supersets(v, partner.get(v.id), empty, size):
                acc.setdefault(s, set()).add(v.id)
        cache[size] = {s: frozenset(ids) for s, ids in acc.items()}
    return cache[size]


def _sorted_faces(faces):
    return sorted(faces, key=lambda f: sorted(f.facet_set))


def enumerate_faces(P: CombinatorialPolytope, k: int) -> list[Face]:
    """All k-faces, ``1 <= k <= n - 1``, sorted by facet set."""
    n = P.dim
    if not 1 <= k <= n - 1:
        raise ValueError(f"face dimension k={k} out of range 1..{n - 1}")
    table = _faces_by_size(P, n - k)
    return _sorted_faces(Face(s, k, ids) for s, ids in table.items())


def face_vector(P: CombinatorialPolytope) -> FaceVector:
    n = P.dim
    a = [len(P.vertices)] + [len(_faces_by_size(P, n - k)) for k in range(1, n)]
    return FaceVector(tuple(a), P.v_fin, P.v_inf)


def _subfaces(P: CombinatorialPolytope, F: Face, l: int) -> set[frozenset[int]]:
    """Facet sets of the l-faces (l >= 1) contained in F."""
    partner = partner_map(P)
    size = P.dim - l
    out = set()
    for vid in F.vertex_ids:
        out.update(_admissible_supersets(P.vertex(vid), partner.get(vid), F.facet_set, size))
    return out


def count_subfaces(P: CombinatorialPolytope, F: Face, l: int) -> int:
    if l == 0:
        return len(F.vertex_ids)
    return len(_subfaces(P, F, l))


def avg_incidence(P: CombinatorialPolytope, k: int, l: int) -> Fraction:
    """Exact average number of l-faces per k-face."""
    n = P.dim
    if not 0 <= l < k <= n - 1:
        raise ValueError(f"need 0 <= l < k <= n-1, got k={k}, l={l}, n={n}")
    faces = enumerate_faces(P, k)
    if not faces:
        raise UndefinedAverageError(f"no {k}-faces; average undefined")
    total = sum(count_subfaces(P, F, l) for F in faces)
    return Fraction(total, len(faces))


def minimal_common_face(P: CombinatorialPolytope, u: str, v: str) -> Face | WholePolytope:
    if u == v:
        raise ValueError("minimal common face needs two distinct vertices")
    common = P.vertex(u).facets & P.vertex(v).facets
    if not common:
        return WholePolytope(P.dim)
    ids = frozenset(w.id for w in P.vertices if common <= w.facets)
    return Face(frozenset(common), P.dim - len(common), ids)


def induced_polytope(P: CombinatorialPolytope, F: Face) -> CombinatorialPolytope:
    """The face F as a polytope of its own dimension.

    Its facets are the (m-1)-faces of P inside F, numbered by sorted facet
    set; vertex ids and types carry over.
    """
    m = F.dim
    if m < 2:
        raise ValueError(f"induced polytope needs a face of dimension >= 2, got {m}")
    partner = partner_map(P)
    ridges = sorted(_subfaces(P, F, m - 1), key=sorted)
    index = {s: i for i, s in enumerate(ridges)}
    vertices = []
    pairings = {}
    for w in P.vertices:
        if w.id not in F.vertex_ids:
            continue
        local = partner.get(w.id)
        own = set(_admissible_supersets(w, local, F.facet_set, len(F.facet_set) + 1))
        vertices.append(Vertex(w.id, w.kind, frozenset(index[s] for s in own)))
        if w.is_ideal:
            pairs = set()
            for s in own:
                (extra,) = s - F.facet_set
                mate = F.facet_set | {local[extra]}
                pairs.add((min(index[s], index[mate]), max(index[s], index[mate])))
            pairings[w.id] = sorted(pairs)
    return CombinatorialPolytope(m, len(ridges), tuple(vertices), pairings)


def facet_polytope(P: CombinatorialPolytope, facet: int) -> CombinatorialPolytope:
    ids = P.facet_vertices[facet]
    return induced_polytope(P, Face(frozenset({facet}), P.dim - 1, ids))


# -- validation ----------------------------------------------------------

def _edge_graph_connected(vertex_ids, edges) -> bool:
    ids = set(vertex_ids)
    if len(ids) <= 1:
        return True
    adj = {vid: set() for vid in ids}
    for e in edges:
        a, b = tuple(e)
        adj[a].add(b)
        adj[b].add(a)
    start = next(iter(ids))
    seen = {start}
    stack = [start]
    while stack:
        for nb in adj[stack.pop()]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return seen == ids


def validate(P: CombinatorialPolytope) -> ValidationReport:
    """Evaluate every combinatorial rule and report all violations together.

    Face-level rules need the cusp pairings and correct vertex degrees; when
    those fail, the face-level rules are listed as skipped.
    """
    n = P.dim
    report = ValidationReport()
    add = lambda rule, msg: report.violations.append(Violation(rule, msg))  # noqa: E731

    degrees_ok = True
    for v in P.vertices:
        want = expected_degree(n, v)
        if len(v.facets) != want:
            degrees_ok = False
            if v.is_ideal:
                add(DEGREE_RULE, f"ideal vertex {v.id!r} has {len(v.facets)} != 2(n-1)={want} facets")
            else:
                add(DEGREE_RULE, f"finite vertex {v.id!r} has {len(v.facets)} != n={want} facets")

    if P.facet_count < n + 1:
        add(FACET_COUNT_RULE, f"{P.facet_count} facets < n+1={n + 1}")

    for f, ids in enumerate(P.facet_vertices):
        if not ids:
            add(FACET_COVER_RULE, f"facet {f} contains no vertex")

    by_set: dict[frozenset[int], list[str]] = {}
    for v in P.vertices:
        by_set.setdefault(v.facets, []).append(v.id)
    for s, ids in by_set.items():
        if len(ids) > 1:
            add(DISTINCT_RULE, f"vertices {ids} share the facet set {sorted(s)}")

    if n >= 3:
        for f, g, w in _finite_point_contacts(P):
            add(ADJACENCY_RULE, f"facets {f} and {g} meet only in the finite vertex {w!r}")

    derived, problems = _pairing_problems(P)
    for msg in problems:
        add(PAIRING_RULE, msg)
    if P.pairings is not None:
        for vid, pairs in P.pairings.items():
            v = P.vertex(vid)
            if not v.is_ideal:
                add(PAIRING_RULE, f"pairing given for finite vertex {vid!r}")
                continue
            flat = [f for pair in pairs for f in pair]
            if len(flat) != len(set(flat)) or set(flat) != v.facets or len(pairs) != n - 1:
                add(PAIRING_RULE, f"pairing at {vid!r} is not a perfect matching on its {len(v.facets)} facets")
            elif vid in derived and _as_pairs(derived[vid]) != tuple(pairs):
                add(PAIRING_RULE, f"given pairing at {vid!r} disagrees with derived {list(_as_pairs(derived[vid]))}")

    face_rules = [EDGE_RULE, SUPPORT_RULE, CONNECTIVITY_RULE]
    if n == 3:
        face_rules.append(DEGREE_SUM_RULE)
    if not degrees_ok or any(v.rule == PAIRING_RULE for v in report.violations):
        report.skipped.extend(face_rules)
        return report

    edges = enumerate_faces(P, 1)
    edge_vertex_pairs = []
    for e in edges:
        if len(e.vertex_ids) != 2:
            add(EDGE_RULE, f"edge {sorted(e.facet_set)} has {len(e.vertex_ids)} endpoints, expected 2")
            continue
        a, b = (P.vertex(x) for x in sorted(e.vertex_ids))
        common = a.facets & b.facets
        if common != e.facet_set:
            add(EDGE_RULE, f"edge {sorted(e.facet_set)} lies in {len(common)} facets, expected n-1={n - 1}")
        edge_vertex_pairs.append((e.facet_set, e.vertex_ids))

    for size in range(1, n):
        for s, ids in _faces_by_size(P, size).items():
            holders = {w.id for w in P.vertices if s <= w.facets}
            if holders != ids:
                stray = sorted(holders - ids)
                add(SUPPORT_RULE, f"face {sorted(s)} also meets vertices {stray} through a cusp pair")

    for size in range(0, n - 1):
        faces = _faces_by_size(P, size) if size else {frozenset(): frozenset(v.id for v in P.vertices)}
        for s, ids in faces.items():
            inside = [vs for fs, vs in edge_vertex_pairs if s <= fs]
            if not _edge_graph_connected(ids, inside):
                what = "polytope" if not s else f"face {sorted(s)}"
                add(CONNECTIVITY_RULE, f"vertex-edge graph of {what} is disconnected")

    if n == 3:
        a1 = len(edges)
        if 2 * a1 != 3 * P.v_fin + 4 * P.v_inf:
            add(DEGREE_SUM_RULE, f"2*a_1={2 * a1} != 3*v_fin+4*v_inf={3 * P.v_fin + 4 * P.v_inf}")
    return report


def check_counting_identity(P: CombinatorialPolytope) -> list[str]:
    """Per-vertex face counts against C(n, n-k) and C(n-1, n-k) 2^(n-k)."""
    n = P.dim
    out = []
    for k in range(1, n):
        s = n - k
        per_vertex: dict[str, int] = {}
        for ids in _faces_by_size(P, s).values():
            for vid in ids:
                per_vertex[vid] = per_vertex.get(vid, 0) + 1
        for v in P.vertices:
            want = comb(n - 1, s) * 2 ** s if v.is_ideal else comb(n, s)
            got = per_vertex.get(v.id, 0)
            if got != want:
                out.append(f"vertex {v.id!r} lies in {got} {k}-faces, expected {want}")
    return out
