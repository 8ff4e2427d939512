import pytest

from zzpers import (
    FiltrationEvent,
    GraphZigzag,
    InvalidInputError,
    Simplex,
    ZigzagFiltration,
    dual_filtration,
    manifold_absolute_barcode,
    multiset_equal,
    oracle_absolute,
    oracle_relative,
    reduce,
    relative_top_barcode,
    zero_dim_zigzag,
    zigzag_barcode,
)
from zzpers.manifold import ADD_EDGE, ADD_VERTEX, DEL_EDGE, DEL_VERTEX
from zzpers.rng import SplitMix64
from conftest import (
    grid_torus,
    octahedron,
    random_nonrepetitive,
    random_updown,
    sx,
    tetra_boundary,
)


def test_dual_filtration_complement_shape():
    K = tetra_boundary()
    rng = SplitMix64(1)
    f = random_nonrepetitive(rng, sorted(K.simplex_set()), walk=0)  # up-down
    g = dual_filtration(f, K, 2)
    # empty complex dualizes to the full graph
    snaps = list(g.snapshots())
    assert snaps[0] == (frozenset(range(4)), frozenset(range(6)))
    # at the midpoint the complex is all of K, so the dual graph is empty
    n = len(f) // 2
    assert snaps[n] == (frozenset(), frozenset())
    # a primal triangle addition deletes exactly its dual vertex
    for idx, e in enumerate(f.events):
        if e.direction == "a" and e.simplex.dim == 2:
            op, payload = g.events[idx]
            assert op == DEL_VERTEX
            assert g.dual.vertex_simplices[payload] == e.simplex
            break


def test_dual_filtration_snapshots_are_subgraphs():
    K = octahedron()
    rng = SplitMix64(2)
    f = random_nonrepetitive(rng, sorted(K.simplex_set()))
    g = dual_filtration(f, K, 2)
    for vs, es in g.snapshots():
        for ei in es:
            a, b = g.edges[ei]
            assert a in vs and b in vs


def test_dual_filtration_rejects_foreign_simplex():
    K = octahedron()
    f = ZigzagFiltration([FiltrationEvent.add(sx(99))])
    with pytest.raises(InvalidInputError):
        dual_filtration(f, K, 2)


def test_zero_dim_zigzag_two_vertex_example():
    g = GraphZigzag(
        n_vertices=2,
        edges=((0, 1),),
        events=(
            (ADD_VERTEX, 0),
            (ADD_VERTEX, 1),
            (ADD_EDGE, 0),
            (DEL_EDGE, 0),
            (DEL_VERTEX, 1),
            (DEL_VERTEX, 0),
        ),
    )
    bars = zero_dim_zigzag(g)
    assert sorted((i.b, i.d) for i in bars) == [(1, 5), (2, 2), (4, 4)]


def test_zero_dim_zigzag_empty():
    g = GraphZigzag(n_vertices=0, edges=(), events=())
    assert len(zero_dim_zigzag(g)) == 0


def test_zero_dim_zigzag_additions_only_matches_reduction():
    # grow a path, one vertex or edge at a time
    g = GraphZigzag(
        n_vertices=3,
        edges=((0, 1), (1, 2)),
        events=(
            (ADD_VERTEX, 0),
            (ADD_VERTEX, 1),
            (ADD_EDGE, 0),
            (ADD_VERTEX, 2),
            (ADD_EDGE, 1),
        ),
    )
    bars = zero_dim_zigzag(g)
    order = [sx(0), sx(1), sx(0, 1), sx(2), sx(1, 2)]
    st = reduce(order)
    m = len(order)
    expected = {(i + 1, j) for i, j in st.pairs if order[i].dim == 0}
    expected |= {(i + 1, m) for i in st.essentials if order[i].dim == 0}
    assert {(i.b, i.d) for i in bars} == expected


def test_zero_dim_zigzag_agrees_with_pipeline_on_updown_graph():
    # the same up-down sequence run as a graph zigzag and as a filtration
    rng = SplitMix64(3)
    circle = [sx(0), sx(1), sx(2), sx(0, 1), sx(0, 2), sx(1, 2)]
    from zzpers.complexes import SimplicialComplex

    U = random_updown(rng, sorted(SimplicialComplex.closure(circle).simplex_set()))
    vertex_ids = {}
    edge_ids = {}
    edges = []
    events = []
    for e in U.events:
        s = e.simplex
        if s.dim == 0:
            vid = vertex_ids.setdefault(s, len(vertex_ids))
            events.append((ADD_VERTEX if e.direction == "a" else DEL_VERTEX, vid))
        else:
            if s not in edge_ids:
                edge_ids[s] = len(edges)
                edges.append(tuple(vertex_ids[Simplex([v])] for v in s.vertices))
            events.append((ADD_EDGE if e.direction == "a" else DEL_EDGE, edge_ids[s]))
    g = GraphZigzag(len(vertex_ids), tuple(edges), tuple(events))
    graph_bars = {(i.b, i.d): c for i, c in zero_dim_zigzag(g).counts().items()}
    pipeline_bars = {}
    for i, c in zigzag_barcode(U).counts().items():
        if i.dim == 0:
            pipeline_bars[(i.b, i.d)] = c
    assert graph_bars == pipeline_bars


def test_relative_top_barcode_sphere_boundary_counts():
    K = octahedron()
    rng = SplitMix64(4)
    f = random_nonrepetitive(rng, sorted(K.simplex_set()))
    rel = relative_top_barcode(f, K, 2)
    m = len(f)
    assert sum(c for i, c in rel.counts().items() if i.b == 0) == 1
    assert sum(c for i, c in rel.counts().items() if i.d == m) == 1
    assert multiset_equal(rel, oracle_relative(f).in_dim(2)).equal


def test_relative_top_barcode_allows_repetitive_with_noop_tail():
    K = octahedron()
    rng = SplitMix64(5)
    base = random_nonrepetitive(rng, sorted(K.simplex_set()))
    v = sx(0)
    f = ZigzagFiltration(
        list(base.events) + [FiltrationEvent.add(v), FiltrationEvent.delete(v)]
    )
    # repetitive: vertex 0 was deleted earlier and returns at the tail
    rel = relative_top_barcode(f, K, 2)
    assert multiset_equal(rel, oracle_relative(f).in_dim(2)).equal


def test_manifold_absolute_barcode_torus_instance():
    K = grid_torus()
    rng = SplitMix64(6)
    f = random_nonrepetitive(rng, sorted(K.simplex_set()))
    got = manifold_absolute_barcode(f, K, 2)
    want = oracle_absolute(f).filter(
        lambda i: i.dim == 2 or (i.dim == 1 and i.type_code != "cc")
    )
    assert multiset_equal(got, want).equal
