import random
from itertools import permutations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gparking import (
    DiffuseState,
    Graph,
    Orientation,
    complete_graph,
    count_unique_source,
    cycle_graph,
    diffuse_to_orientation,
    enumerate_acyclic,
    enumerate_diffuse,
    enumerate_unique_source,
    hat_graph,
    is_diffuse,
    named_graph,
    orientation_to_diffuse,
    path_graph,
    tutte_polynomial,
)
from gparking.errors import NegativeChips, NotAcyclic, NotDiffuse, WrongChipTotal
from gparking.graph import random_connected_graph
from oracles import atlas, diffuse_by_definition

K3 = complete_graph(3)


def test_is_diffuse_examples():
    for g in atlas(5):
        assert is_diffuse(g, g.degrees())
    ok = is_diffuse(K3, (0, 1, 2))
    assert ok and ok.order == (2, 1, 0)
    stuck = is_diffuse(K3, (1, 1, 1))
    assert not stuck and stuck.residual == {0, 1, 2}
    with pytest.raises(NegativeChips):
        is_diffuse(K3, (0, -1, 2))


def test_state_constructor():
    with pytest.raises(NotDiffuse) as exc:
        DiffuseState(K3, (1, 1, 1))
    assert exc.value.residual == {0, 1, 2}
    s = DiffuseState(K3, (2, 1, 0))
    assert s.norm == 3 and s[0] == 2


def test_orientation_to_diffuse_examples():
    o = Orientation.from_arcs(K3, [(0, 1), (0, 2), (1, 2)])
    assert orientation_to_diffuse(o).chips == (2, 1, 0)
    g = named_graph("p3")
    (away,) = enumerate_unique_source(g, 0)
    assert orientation_to_diffuse(away).chips == (1, 1, 0)
    c4 = cycle_graph(4)
    states = {orientation_to_diffuse(o) for o in enumerate_acyclic(c4)}
    assert len(states) == 14
    with pytest.raises(NotAcyclic):
        orientation_to_diffuse(Orientation.from_arcs(K3, [(0, 1), (1, 2), (2, 0)]))


def test_diffuse_to_orientation_examples():
    o = diffuse_to_orientation(DiffuseState(K3, (2, 1, 0)))
    assert sorted(o.arcs()) == [(0, 1), (0, 2), (1, 2)]
    g = path_graph(4)
    (away,) = enumerate_unique_source(g, 0)
    assert diffuse_to_orientation(orientation_to_diffuse(away)) == away
    images = {diffuse_to_orientation(DiffuseState(K3, p)) for p in permutations(range(3))}
    assert images == set(enumerate_acyclic(K3))
    with pytest.raises(WrongChipTotal):
        diffuse_to_orientation(DiffuseState(K3, (2, 2, 2)))


def test_recognizer_matches_definition():
    for g in atlas(5):
        for chips in product(*(range(g.degree(v) + 2) for v in range(g.n))):
            assert bool(is_diffuse(g, chips)) == diffuse_by_definition(g, chips)


def test_bijection_exhaustive():
    for g in atlas(5):
        orients = list(enumerate_acyclic(g))
        states = list(enumerate_diffuse(g, total=g.m))
        assert len(states) == len(orients) == tutte_polynomial(g)(2, 0)
        assert {orientation_to_diffuse(o) for o in orients} == set(states)
        for o in orients:
            assert diffuse_to_orientation(orientation_to_diffuse(o)) == o
        for s in states:
            assert orientation_to_diffuse(diffuse_to_orientation(s)) == s


def test_no_diffuse_state_above_degree():
    # states with |E| chips never put more than deg(v) on a vertex
    for g in atlas(4):
        for chips in product(*(range(g.degree(v) + 3) for v in range(g.n))):
            if sum(chips) == g.m and is_diffuse(g, chips):
                assert all(c <= g.degree(v) for v, c in enumerate(chips))


def test_zero_chip_set_is_independent():
    for g in atlas(5):
        for s in enumerate_diffuse(g, total=g.m):
            zeros = [v for v in range(g.n) if s[v] == 0]
            assert zeros
            assert not any(g.has_edge(a, b) for a in zeros for b in zeros if a < b)
            # observed: some vertex carries its full degree
            assert any(s[v] == g.degree(v) for v in range(g.n))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 7), st.integers(0, 2**32))
def test_peeling_order_independence(n, seed):
    rng = random.Random(seed)
    g = random_connected_graph(n, 0.5, rng) if n > 1 else Graph(1, [])
    chips = [rng.randint(0, g.degree(v)) for v in range(g.n)]
    verdict = bool(is_diffuse(g, chips))
    for _ in range(4):
        assert bool(is_diffuse(g, chips, rng=rng)) == verdict


def test_hat_graph_examples():
    h, apex = hat_graph(Graph(1, []))
    assert (h.n, h.m, apex) == (2, 1, 1)
    h, apex = hat_graph(K3)
    assert h.n == 4 and h.m == 6 and apex == 3
    h, _ = hat_graph(path_graph(3))
    assert (h.n, h.m) == (4, 5)
    assert sorted(h.degrees()) == [2, 2, 3, 3]


def test_hat_graph_counts_acyclic_orientations():
    for g in atlas(5):
        h, apex = hat_graph(g)
        assert count_unique_source(h, apex) == sum(1 for _ in enumerate_acyclic(g))
