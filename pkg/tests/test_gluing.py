import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rightangled import catalog
from rightangled import gluing as G
from rightangled import lattice as L
from rightangled.polytope import CombinatorialPolytope, Vertex

from conftest import brute_faces


@pytest.mark.parametrize("name, counts", [
    ("ideal-octahedron", (11, 0, 9)),
    ("triangular-bipyramid", (7, 2, 4)),
    ("right-angled-dodecahedron", (17, 30, 0)),
    ("ideal-24-cell", (38, 0, 42)),
])
def test_double_every_facet(name, counts):
    P = catalog.build(name)
    for h in range(P.facet_count):
        Q, gmap = G.double(P, h)
        assert (Q.facet_count, Q.v_fin, Q.v_inf) == counts
        assert G.predict_counts(P, h) == counts
        report = L.validate(Q)
        assert report.ok, report.lines()
        fv = L.face_vector(Q)
        assert (fv.a[-1], fv.v_fin, fv.v_inf) == counts
        if Q.dim == 3:
            assert 2 * fv.a[1] == 3 * fv.v_fin + 4 * fv.v_inf
            assert fv.v_fin % 2 == 0


def test_doubled_octahedron_full_vector(octahedron):
    Q, _ = G.double(octahedron, 0)
    assert L.face_vector(Q).a == (9, 18, 11)
    for k in (1, 2):
        assert {F.facet_set for F in L.enumerate_faces(Q, k)} == brute_faces(Q, k)


def test_doubled_24_cell_matches_brute_force(cell24):
    Q, _ = G.double(cell24, 5)
    for k in (1, 2, 3):
        assert {F.facet_set for F in L.enumerate_faces(Q, k)} == brute_faces(Q, k)


def test_gluing_map_partitions(entry):
    _, P = entry
    Q, gmap = G.double(P, 0)
    kinds = [f.kind for f in gmap.facet_fate]
    assert kinds.count(G.REMOVED) == 1 and kinds[0] == G.REMOVED
    new_ids = [i for f in gmap.facet_fate for i in f.ids]
    assert sorted(new_ids) == list(range(Q.facet_count))
    assert set(gmap.vertex_fate) == {v.id for v in P.vertices}
    produced = [i for f in gmap.vertex_fate.values() for i in f.ids]
    assert sorted(produced) == sorted(v.id for v in Q.vertices)


def test_tangent_facets_are_duplicated(bipyramid):
    # facet 0 = N-v1v2 is tangent to S-v2v3 (at v2) and S-v1v3 (at v1)
    _, gmap = G.double(bipyramid, 0)
    fates = {i: f.kind for i, f in enumerate(gmap.facet_fate)}
    assert fates == {0: G.REMOVED, 1: G.MERGED, 2: G.MERGED, 3: G.MERGED, 4: G.KEPT_PAIR, 5: G.KEPT_PAIR}
    assert gmap.vertex_fate["N"].kind == G.DROPPED
    assert gmap.vertex_fate["S"].kind == G.DUPLICATED
    assert gmap.vertex_fate["v1"].kind == G.IDENTIFIED
    assert gmap.vertex_fate["v3"].kind == G.DUPLICATED


def test_cube_link_preserved(entry):
    _, P = entry
    n = P.dim
    for h in range(P.facet_count):
        Q, gmap = G.double(P, h)
        for vid in P.facet_vertices[h]:
            if P.vertex(vid).is_ideal:
                assert len(Q.vertex(vid).facets) == 2 * (n - 1)
                assert len(Q.pairings[vid]) == n - 1


def test_double_is_deterministic(cell24):
    a = G.double(cell24, 3)
    b = G.double(catalog.build("ideal-24-cell"), 3)
    assert a[0] == b[0]
    assert a[1].dumps() == b[1].dumps()


def test_mirror_ids_avoid_collisions():
    P = catalog.build("triangular-bipyramid")
    verts = tuple(Vertex("S'" if v.id == "N" else v.id, v.kind, v.facets) for v in P.vertices)
    P2 = CombinatorialPolytope(3, 6, verts)
    # facet 0 carries the old apex N (now "S'"), which is dropped; S is mirrored
    Q, gmap = G.double(P2, 0)
    assert gmap.vertex_fate["S"].ids == ("S", "S''")
    assert len({v.id for v in Q.vertices}) == len(Q.vertices)


def test_degenerate_doubling():
    # vertex a lies off facet 4 but every facet at a is adjacent to 4,
    # so a and its mirror receive the same merged facets
    verts = (
        Vertex("a", "finite", frozenset({0, 1, 2})),
        Vertex("b", "finite", frozenset({0, 1, 3})),
        Vertex("c", "finite", frozenset({0, 2, 3})),
        Vertex("d", "finite", frozenset({1, 2, 3})),
        Vertex("e", "finite", frozenset({1, 2, 4})),
        Vertex("f", "finite", frozenset({0, 3, 4})),
    )
    P = CombinatorialPolytope(3, 5, verts)
    with pytest.raises(G.DegenerateDoublingError):
        G.double(P, 4)


def test_bad_facet(octahedron):
    with pytest.raises(IndexError):
        G.double(octahedron, 8)
    with pytest.raises(IndexError):
        G.predict_counts(octahedron, -1)


# -- reduction ----------------------------------------------------------

def test_reduce_24_cell_one_step(cell24):
    assert len(cell24.vertex("+x+y").facets & cell24.vertex("+x-y").facets) == 1
    trace = G.reduce_ideal_pair(cell24, "+x+y", "+x-y")
    assert [(s.dim_before, s.dim_after) for s in trace.steps] == [(3, 4)]
    assert trace.final_common == frozenset()


def test_reduce_octahedron_adjacent_two_steps(octahedron):
    trace = G.reduce_ideal_pair(octahedron, "+x", "+y")
    assert [(s.common_before, s.common_after) for s in trace.steps] == [(2, 1), (1, 0)]
    assert trace.final_common == frozenset()
    assert L.validate(trace.polytope).ok


def test_reduce_disjoint_pair_no_steps(octahedron):
    trace = G.reduce_ideal_pair(octahedron, "+x", "-x")
    assert trace.steps == []
    assert trace.polytope is octahedron


def test_reduce_target_dim(octahedron):
    trace = G.reduce_ideal_pair(octahedron, "+x", "+y", target_dim=2)
    assert len(trace.steps) == 1


def test_reduce_custom_choice(octahedron):
    trace = G.reduce_ideal_pair(octahedron, "+x", "+y", choose=max)
    common = octahedron.vertex("+x").facets & octahedron.vertex("+y").facets
    assert trace.steps[0].facet == max(common)


def test_reduce_rejects_finite(bipyramid):
    with pytest.raises(ValueError, match="not ideal"):
        G.reduce_ideal_pair(bipyramid, "N", "v1")


def _ideal_pairs(P):
    ideal = [v.id for v in P.vertices if v.is_ideal]
    return list(itertools.combinations(ideal, 2))


def _check_trace(P, u, v):
    start = len(P.vertex(u).facets & P.vertex(v).facets)
    trace = G.reduce_ideal_pair(P, u, v)
    for s in trace.steps:
        assert s.common_after == s.common_before - 1
        assert s.dim_after == s.dim_before + 1
    assert len(trace.steps) <= start
    return trace


def test_reduction_monotone_all_pairs(entry):
    _, P = entry
    for u, v in _ideal_pairs(P):
        _check_trace(P, u, v)


def test_reduction_monotone_on_doubles(entry):
    _, P = entry
    for h in range(0, P.facet_count, max(1, P.facet_count // 4)):
        Q, _ = G.double(P, h)
        for u, v in _ideal_pairs(Q):
            _check_trace(Q, u, v)


@settings(max_examples=40, deadline=None)
@given(
    st.sampled_from(["ideal-octahedron", "triangular-bipyramid", "right-angled-dodecahedron"]),
    st.lists(st.integers(0, 10**6), min_size=1, max_size=3),
)
def test_random_doubling_sequences(name, picks):
    P = catalog.build(name)
    for pick in picks:
        h = pick % P.facet_count
        want = G.predict_counts(P, h)
        P, _ = G.double(P, h)
        assert (P.facet_count, P.v_fin, P.v_inf) == want
        assert L.validate(P).ok
        fv = L.face_vector(P)
        assert 2 * fv.a[1] == 3 * fv.v_fin + 4 * fv.v_inf
