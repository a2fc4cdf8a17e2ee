import math
import random

import pytest

from strategies import random_tree_edges
from taskswap.errors import NotATreeError, TopologyError, UnknownTopologyError
from taskswap.oracle import cayley_graph
from taskswap.perm import Transposition as T
from taskswap.topology import (
    TopologySpec,
    build_graph,
    complete,
    complete_bipartite,
    is_edge,
    line,
    ring,
    star,
    tree,
    tree_distance,
)


def pairs(g):
    return {(t.a, t.b) for t in g.generators}


def test_line_edges():
    assert pairs(line(4)) == {(1, 2), (2, 3), (3, 4)}


def test_star_edges():
    assert pairs(star(4)) == {(1, 2), (1, 3), (1, 4)}


def test_bipartite_edges():
    g = complete_bipartite(8, 3)
    assert pairs(g) == {(i, j) for i in range(1, 4) for j in range(4, 9)}
    assert len(g.generators) == 15


@pytest.mark.parametrize("n", range(3, 8))
def test_edge_counts(n):
    assert len(line(n).generators) == n - 1
    assert len(star(n).generators) == n - 1
    assert len(ring(n).generators) == n
    assert len(complete(n).generators) == n * (n - 1) // 2
    for k in range(1, n):
        assert len(complete_bipartite(n, k).generators) == k * (n - k)


@pytest.mark.parametrize("n", range(3, 7))
def test_every_generating_set_reaches_all_permutations(n):
    rng = random.Random(n)
    graphs = [line(n), star(n), ring(n), complete(n), tree(n, random_tree_edges(rng, n))]
    graphs += [complete_bipartite(n, k) for k in range(1, n)]
    for g in graphs:
        assert cayley_graph(n, g.generators).reachable == math.factorial(n)


def test_is_edge():
    assert is_edge(line(8), T(1, 2))
    assert not is_edge(line(8), T(1, 8))
    assert is_edge(ring(8), T(1, 8))
    assert not is_edge(star(9), T(2, 3))


def test_tree_distance_examples():
    assert tree_distance(line(5), 1, 5) == 4
    assert tree_distance(star(9), 2, 5) == 2
    assert tree_distance(star(9), 4, 4) == 0


@pytest.mark.parametrize("n", range(3, 8))
def test_line_distance_is_absolute_difference(n):
    g = line(n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            assert g.tree_distance(i, j) == abs(i - j)


def test_tree_distance_is_a_metric():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(3, 9)
        g = tree(n, random_tree_edges(rng, n))
        vs = range(1, n + 1)
        for a in vs:
            for b in vs:
                assert g.tree_distance(a, b) == g.tree_distance(b, a)
                assert (g.tree_distance(a, b) == 0) == (a == b)
                for c in vs:
                    assert g.tree_distance(a, c) <= g.tree_distance(a, b) + g.tree_distance(b, c)


def test_next_hop_walks_the_path():
    g = tree(5, [(1, 2), (2, 3), (2, 4), (4, 5)])
    assert g.next_hop(1, 5) == 2
    assert g.next_hop(2, 5) == 4
    assert g.next_hop(3, 3) == 3


def test_ring_is_not_a_tree():
    with pytest.raises(NotATreeError):
        ring(5).tree_distance(1, 3)
    assert line(5).is_tree and star(5).is_tree and not complete(5).is_tree


@pytest.mark.parametrize(
    "spec",
    [
        dict(kind="line", n=2),
        dict(kind="complete_bipartite", n=5, k=0),
        dict(kind="complete_bipartite", n=5, k=5),
        dict(kind="tree", n=4, edges=((1, 2), (2, 3))),
        dict(kind="tree", n=4, edges=((1, 2), (2, 3), (1, 3))),
        dict(kind="tree", n=3, edges=((1, 2), (2, 4))),
        dict(kind="tree", n=3, edges=((1, 1), (2, 3))),
    ],
)
def test_invalid_graphs(spec):
    with pytest.raises(TopologyError):
        build_graph(TopologySpec(**spec))


def test_spec_validation():
    with pytest.raises(UnknownTopologyError):
        TopologySpec("hypercube", 8)
    with pytest.raises(TopologyError):
        TopologySpec("line", 5, k=2)
    with pytest.raises(TopologyError):
        TopologySpec("complete_bipartite", 5)
    with pytest.raises(TopologyError):
        TopologySpec("tree", 5)
    with pytest.raises(TopologyError):
        TopologySpec("ring", 5, edges=((1, 2),))


def test_spec_round_trip():
    for d in ({"kind": "complete_bipartite", "n": 8, "k": 3},
              {"kind": "tree", "n": 5, "edges": [[1, 2], [2, 3], [2, 4], [4, 5]]},
              {"kind": "ring", "n": 6}):
        assert TopologySpec.from_dict(d).to_dict() == d
    with pytest.raises(TopologyError):
        TopologySpec.from_dict({"kind": "line"})
