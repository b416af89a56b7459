"""Digraph construction, distances, and neighbourhood operators.

networkx is used as an independent oracle for shortest paths and strong
connectivity so the hand-rolled BFS is checked against code we did not write.
"""

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kernelkit import (
    UNREACHABLE,
    Digraph,
    Distance,
    as_vertex_set,
    build_digraph,
    directed_cycle,
)
from kernelkit.digraph import iter_arc_pairs
from kernelkit.errors import (
    DuplicateArcError,
    EmptySetError,
    LoopArcError,
    VertexOutOfRangeError,
)
from kernelkit.generators import random_digraph


def to_networkx(d: Digraph) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_nodes_from(d.vertices())
    g.add_edges_from(d.arcs)
    return g


# -- construction ------------------------------------------------------------


def test_build_rejects_loops():
    with pytest.raises(LoopArcError):
        build_digraph(3, [(0, 0)])


def test_build_rejects_duplicates():
    with pytest.raises(DuplicateArcError):
        build_digraph(3, [(0, 1), (0, 1)])


def test_build_rejects_out_of_range():
    with pytest.raises(VertexOutOfRangeError):
        build_digraph(3, [(0, 3)])
    with pytest.raises(VertexOutOfRangeError):
        build_digraph(-1, [])


def test_empty_digraph():
    d = build_digraph(0, [])
    assert d.vertex_count == 0
    assert d.is_strongly_connected()


def test_as_vertex_set_sorts_and_dedupes():
    assert as_vertex_set([3, 1, 3, 2]) == (1, 2, 3)
    assert as_vertex_set([]) == ()


# -- Distance ordering -------------------------------------------------------


def test_distance_total_order():
    assert Distance(1) < Distance(2) < UNREACHABLE
    assert not UNREACHABLE < UNREACHABLE
    assert max(Distance(5), UNREACHABLE) == UNREACHABLE


def test_distance_predicates():
    assert UNREACHABLE.at_least(10 ** 9)
    assert not UNREACHABLE.at_most(10 ** 9)
    assert Distance(2).at_least(2)
    assert Distance(2).at_most(2)
    assert not Distance(2).at_least(3)


# -- distances against the networkx oracle -----------------------------------


@pytest.mark.parametrize("seed", range(10))
def test_distance_matrix_matches_networkx(seed):
    d = random_digraph(8, 0.25, seed)
    g = to_networkx(d)
    oracle = dict(nx.all_pairs_shortest_path_length(g))
    for u in d.vertices():
        for v in d.vertices():
            mine = d.distance(u, v)
            if v in oracle[u]:
                assert mine.hops == oracle[u][v]
            else:
                assert mine.unreachable


@pytest.mark.parametrize("seed", range(10))
def test_strong_connectivity_matches_networkx(seed):
    d = random_digraph(7, 0.3, seed)
    assert d.is_strongly_connected() == nx.is_strongly_connected(to_networkx(d))


def test_cycle_distances():
    d = directed_cycle(6)
    assert d.distance(0, 3).hops == 3
    assert d.distance(3, 0).hops == 3
    assert d.distance(2, 1).hops == 5
    assert d.distance(4, 4).hops == 0


arc_lists = st.integers(1, 7).flatmap(
    lambda n: st.builds(
        lambda picks: build_digraph(n, [p for p, keep in zip(iter_arc_pairs(n), picks) if keep]),
        st.lists(st.booleans(), min_size=n * (n - 1), max_size=n * (n - 1)),
    )
)


@given(arc_lists)
@settings(max_examples=60, deadline=None)
def test_triangle_inequality(d):
    raw = d._raw_matrix
    n = d.vertex_count
    for u in range(n):
        for v in range(n):
            for w in range(n):
                if raw[u][v] is not None and raw[v][w] is not None:
                    assert raw[u][w] is not None
                    assert raw[u][w] <= raw[u][v] + raw[v][w]


# -- subdigraphs and neighbourhoods ------------------------------------------


def test_induced_relabels_in_order():
    d = build_digraph(5, [(0, 2), (2, 4), (4, 0), (1, 3)])
    sub, mapping = d.induced([4, 0, 2])
    assert mapping == {0: 0, 2: 1, 4: 2}
    assert sub.vertex_count == 3
    assert sub.arcs == frozenset({(0, 1), (1, 2), (2, 0)})


def test_induced_rejects_bad_vertex():
    d = build_digraph(3, [])
    with pytest.raises(VertexOutOfRangeError):
        d.induced([0, 5])


def test_in_neighborhood_exact_distance():
    d = directed_cycle(6)
    assert d.in_neighborhood_at_distance([0], 1) == (5,)
    assert d.in_neighborhood_at_distance([0], 2) == (4,)
    # members themselves are excluded even when another member is nearby
    assert d.in_neighborhood_at_distance([0, 1], 1) == (5,)


def test_in_neighborhood_empty_set_raises():
    with pytest.raises(EmptySetError):
        directed_cycle(4).in_neighborhood_at_distance([], 1)


def test_out_cone():
    d = directed_cycle(6)
    assert d.out_cone([0], 2) == (1, 2)
    assert d.out_cone([0, 3], 1) == (1, 4)
    with pytest.raises(EmptySetError):
        d.out_cone([], 2)


def test_out_cone_excludes_distance_zero():
    d = build_digraph(3, [(0, 1), (1, 0)])
    # d(0, 0) = 0, so the source never lands in its own cone
    assert d.out_cone([0], 2) == (1,)
    assert d.out_cone([0], 1) == (1,)
