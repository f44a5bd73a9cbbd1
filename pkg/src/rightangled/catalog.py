"""Known right-angled polytopes, built from exact combinatorial descriptions.

No coordinates beyond small integers are used: incidences come from sign
patterns or from clique structure, never from floating-point geometry.
"""

from __future__ import annotations

import itertools

from .polytope import FINITE, IDEAL, CombinatorialPolytope, Vertex


class UnknownEntryError(KeyError):
    pass


def _from_incidence(dim, facet_keys, vertex_specs) -> CombinatorialPolytope:
    """vertex_specs: iterable of (id, kind, iterable of facet keys)."""
    index = {key: i for i, key in enumerate(facet_keys)}
    vertices = tuple(Vertex(vid, kind, frozenset(index[k] for k in keys)) for vid, kind, keys in vertex_specs)
    return CombinatorialPolytope(dim, len(facet_keys), vertices)


def _signed_id(vec) -> str:
    axes = "xyzw"
    parts = []
    for axis, c in zip(axes, vec):
        if c:
            parts.append(("+" if c > 0 else "-") + axis)
    return "".join(parts)


def ideal_octahedron() -> CombinatorialPolytope:
    """Vertices ±e_i; faces are the 8 sign octants."""
    faces = list(itertools.product((1, -1), repeat=3))
    specs = []
    for axis in range(3):
        for sign in (1, -1):
            vec = [0, 0, 0]
            vec[axis] = sign
            specs.append((_signed_id(vec), IDEAL, [s for s in faces if s[axis] == sign]))
    return _from_incidence(3, faces, specs)


def _icosahedron_graph():
    # top T, upper ring u0..u4, lower ring l0..l4, bottom B; antiprism band
    adj = {x: set() for x in ["T", "B"] + [f"u{i}" for i in range(5)] + [f"l{i}" for i in range(5)]}

    def link(a, b):
        adj[a].add(b)
        adj[b].add(a)

    for i in range(5):
        j = (i + 1) % 5
        link("T", f"u{i}")
        link("B", f"l{i}")
        link(f"u{i}", f"u{j}")
        link(f"l{i}", f"l{j}")
        link(f"u{i}", f"l{i}")
        link(f"u{i}", f"l{j}")
    return adj


def right_angled_dodecahedron() -> CombinatorialPolytope:
    """Dual of the icosahedron: faces are icosahedron vertices, vertices its triangles."""
    adj = _icosahedron_graph()
    faces = sorted(adj)
    triangles = sorted(
        t for t in itertools.combinations(faces, 3)
        if t[1] in adj[t[0]] and t[2] in adj[t[0]] and t[2] in adj[t[1]]
    )
    specs = [(f"v{i:02d}", FINITE, t) for i, t in enumerate(triangles)]
    return _from_incidence(3, faces, specs)


def triangular_bipyramid() -> CombinatorialPolytope:
    """Finite apexes N, S over an ideal equator v1 v2 v3."""
    eq = ["v1", "v2", "v3"]
    faces = []
    for apex in ("N", "S"):
        for i in range(3):
            faces.append((apex,) + tuple(sorted((eq[i], eq[(i + 1) % 3]))))
    specs = [("N", FINITE, [f for f in faces if f[0] == "N"]),
             ("S", FINITE, [f for f in faces if f[0] == "S"])]
    specs += [(v, IDEAL, [f for f in faces if v in f]) for v in eq]
    return _from_incidence(3, faces, specs)


def ideal_24_cell() -> CombinatorialPolytope:
    """Vertices are the permutations of (±1, ±1, 0, 0).

    Cells are indexed by the dual 24-cell: ±e_i and (±1, ±1, ±1, ±1) (scaled).
    A vertex lies on cell c exactly when <x, c> attains its maximum over the
    vertices (1 for the axis cells, 2 for the sign cells).
    """
    cells = []
    for axis in range(4):
        for sign in (1, -1):
            c = [0, 0, 0, 0]
            c[axis] = sign
            cells.append(tuple(c))
    cells += list(itertools.product((1, -1), repeat=4))
    specs = []
    for i, j in itertools.combinations(range(4), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            x = [0, 0, 0, 0]
            x[i], x[j] = si, sj
            on = [c for c in cells if sum(a * b for a, b in zip(x, c)) == min(2, sum(map(abs, c)))]
            specs.append((_signed_id(x), IDEAL, on))
    return _from_incidence(4, cells, specs)


def cube_3d() -> CombinatorialPolytope:
    """Negative fixture: locally valid incidences, excluded by Nonaka's bound."""
    faces = [(axis, sign) for axis in range(3) for sign in (1, -1)]
    specs = []
    for signs in itertools.product((1, -1), repeat=3):
        specs.append((_signed_id(signs), FINITE, [(axis, signs[axis]) for axis in range(3)]))
    return _from_incidence(3, faces, specs)


def simplex(n: int) -> CombinatorialPolytope:
    """Combinatorial n-simplex; vertex i misses facet i."""
    facets = list(range(n + 1))
    specs = [(f"p{i}", FINITE, [f for f in facets if f != i]) for i in facets]
    return _from_incidence(n, facets, specs)


_BUILDERS = {
    "ideal-24-cell": ideal_24_cell,
    "ideal-octahedron": ideal_octahedron,
    "right-angled-dodecahedron": right_angled_dodecahedron,
    "triangular-bipyramid": triangular_bipyramid,
}

# (a_0, ..., a_{n-1}), v_fin, v_inf
EXPECTED = {
    "ideal-24-cell": ((24, 96, 96, 24), 0, 24),
    "ideal-octahedron": ((6, 12, 8), 0, 6),
    "right-angled-dodecahedron": ((20, 30, 12), 20, 0),
    "triangular-bipyramid": ((5, 9, 6), 2, 3),
}

PROVENANCE = {
    "ideal-24-cell": "regular 24-cell with all vertices ideal; octahedral cells, cube vertex links",
    "ideal-octahedron": "regular ideal octahedron; square vertex links",
    "right-angled-dodecahedron": "compact right-angled dodecahedron, all 20 vertices finite",
    "triangular-bipyramid": "two finite apexes, three ideal equatorial vertices; minimal-volume 3D example",
}


def names() -> list[str]:
    return sorted(_BUILDERS)


def build(name: str) -> CombinatorialPolytope:
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise UnknownEntryError(f"unknown catalog entry {name!r}; known: {', '.join(names())}") from None
    return builder()
