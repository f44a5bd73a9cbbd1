import itertools

import pytest

from rightangled import catalog
from rightangled.polytope import CombinatorialPolytope, Vertex

CATALOG = catalog.names()


@pytest.fixture(params=CATALOG)
def entry(request):
    return request.param, catalog.build(request.param)


@pytest.fixture
def octahedron():
    return catalog.build("ideal-octahedron")


@pytest.fixture
def dodecahedron():
    return catalog.build("right-angled-dodecahedron")


@pytest.fixture
def bipyramid():
    return catalog.build("triangular-bipyramid")


@pytest.fixture
def cell24():
    return catalog.build("ideal-24-cell")


# -- brute-force oracles, written without the library's lattice code ------

def brute_pairs(P):
    """Partner of each facet at each ideal vertex: the facet sharing only v."""
    holders = {f: {v.id for v in P.vertices if f in v.facets} for f in range(P.facet_count)}
    out = {}
    for v in P.vertices:
        if v.kind != "ideal":
            continue
        out[v.id] = {
            h: g for h in v.facets for g in v.facets if g != h and holders[h] & holders[g] == {v.id}
        }
    return out


def brute_faces(P, k):
    """All facet subsets of size n-k met by some vertex and admissible at each."""
    pairs = brute_pairs(P)
    out = set()
    for S in itertools.combinations(range(P.facet_count), P.dim - k):
        S = frozenset(S)
        holders = [v for v in P.vertices if S <= v.facets]
        if not holders:
            continue
        ok = all(v.kind == "finite" or not any(pairs[v.id][f] in S for f in S) for v in holders)
        if ok:
            out.add(S)
    return out


def brute_edge_count_3d(P):
    """Edges of a 3D polytope as pairs of facets sharing two or more vertices."""
    count = 0
    for f, g in itertools.combinations(range(P.facet_count), 2):
        shared = [v for v in P.vertices if f in v.facets and g in v.facets]
        if len(shared) >= 2:
            count += 1
    return count


# -- synthetic inputs for count-based screens ---------------------------

def ideal_lattice(n):
    """Two ideal vertices with disjoint facet sets and explicit pairings.

    Not a polytope; enough for count-based rules to evaluate.
    """
    deg = 2 * (n - 1)
    verts, pairings = [], {}
    for i, vid in enumerate(("a", "b")):
        facets = list(range(i * deg, (i + 1) * deg))
        verts.append(Vertex(vid, "ideal", frozenset(facets)))
        pairings[vid] = [facets[j:j + 2] for j in range(0, deg, 2)]
    return CombinatorialPolytope(n, 2 * deg, tuple(verts), pairings)


def odd_3d():
    # three finite corners of a tetrahedron; structurally fine, v_fin odd
    verts = (
        Vertex("a", "finite", frozenset({0, 1, 2})),
        Vertex("b", "finite", frozenset({0, 1, 3})),
        Vertex("c", "finite", frozenset({0, 2, 3})),
    )
    return CombinatorialPolytope(3, 4, verts)


# -- acceptance summary ---------------------------------------------------

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
