import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gparking import (
    Orientation,
    ParkingFunction,
    complete_graph,
    count_unique_source,
    enumerate_acyclic,
    enumerate_maximum,
    enumerate_unique_source,
    extended_dhar,
    hypercube,
    is_acyclic,
    is_maximum,
    orientation_to_parking,
    path_graph,
    star_graph,
)
from gparking.errors import NotAcyclic, NotMaximum, SourceNotUnique, WrongSource
from gparking.graph import random_connected_graph
from oracles import acyclic_directions, atlas, relabel_edges, unique_source_directions

K3 = complete_graph(3)


def arcs(g, *pairs):
    return Orientation.from_arcs(g, list(pairs))


def test_is_acyclic_examples():
    g = path_graph(4)
    for o in enumerate_acyclic(g):
        assert is_acyclic(o)
    assert sum(1 for _ in enumerate_acyclic(g)) == 8
    assert not is_acyclic(arcs(K3, (0, 1), (1, 2), (2, 0)))
    assert is_acyclic(arcs(K3, (0, 1), (0, 2), (1, 2)))


def test_unique_source_examples():
    assert sum(1 for _ in enumerate_unique_source(K3, 0)) == 2
    assert sum(1 for _ in enumerate_unique_source(hypercube(2), 0)) == 3
    g = star_graph(3)
    (o,) = enumerate_unique_source(g, 2)
    assert o.sources() == [2]
    assert sorted(o.arcs()) == [(0, 1), (0, 3), (2, 0)]


def test_orientation_to_parking_examples():
    f = orientation_to_parking(arcs(K3, (0, 1), (0, 2), (1, 2)), 0)
    assert f.values == (-1, 0, 1)
    g = path_graph(4)
    (o,) = enumerate_unique_source(g, 0)
    assert orientation_to_parking(o, 0).values == (-1, 0, 0, 0)
    for o in enumerate_unique_source(hypercube(2), 0):
        assert is_maximum(orientation_to_parking(o, 0))


def test_orientation_to_parking_errors():
    with pytest.raises(NotAcyclic):
        orientation_to_parking(arcs(K3, (0, 1), (1, 2), (2, 0)), 0)
    with pytest.raises(WrongSource):
        orientation_to_parking(arcs(K3, (1, 0), (0, 2), (1, 2)), 0)
    g = path_graph(3)
    with pytest.raises(SourceNotUnique):
        orientation_to_parking(arcs(g, (0, 1), (2, 1)), 0)


def test_extended_dhar_examples():
    o = extended_dhar(ParkingFunction(K3, 0, (-1, 0, 1)))
    assert sorted(o.arcs()) == [(0, 1), (0, 2), (1, 2)]
    o = extended_dhar(ParkingFunction(K3, 0, (-1, 1, 0)))
    assert sorted(o.arcs()) == [(0, 1), (0, 2), (2, 1)]
    g = path_graph(4)
    o = extended_dhar(ParkingFunction(g, 1, (0, -1, 0, 0)))
    assert sorted(o.arcs()) == [(1, 0), (1, 2), (2, 3)]
    with pytest.raises(NotMaximum):
        extended_dhar(ParkingFunction(K3, 0, (-1, 0, 0)))


def test_enumeration_matches_brute_force():
    for g in atlas(5):
        assert {o.direction for o in enumerate_acyclic(g)} == set(acyclic_directions(g))
        for q in range(g.n):
            found = [o.direction for o in enumerate_unique_source(g, q)]
            assert len(found) == len(set(found))
            assert set(found) == set(unique_source_directions(g, q))
            assert count_unique_source(g, q) == len(found)


def test_dhar_bijection_exhaustive():
    for g in atlas(6):
        for q in range(g.n):
            maxima = list(enumerate_maximum(g, q))
            orients = list(enumerate_unique_source(g, q))
            images = {orientation_to_parking(o, q) for o in orients}
            assert images == set(maxima)
            assert len(images) == len(orients)
            for f in maxima:
                o = extended_dhar(f)
                assert o.sources() == [q] and is_acyclic(o)
                assert orientation_to_parking(o, q) == f
            for o in orients:
                assert extended_dhar(orientation_to_parking(o, q)) == o


def test_source_count_independent_of_root():
    for g in atlas(6):
        counts = {count_unique_source(g, q) for q in range(g.n)}
        assert len(counts) == 1


def test_outdegrees_determine_acyclic_orientation():
    for g in atlas(5):
        seen = {}
        for o in enumerate_acyclic(g):
            key = tuple(o.outdegrees())
            assert key not in seen
            seen[key] = o


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 7), st.integers(0, 2**32))
def test_dhar_round_trip_random_order(n, seed):
    rng = random.Random(seed)
    g = relabel_edges(random_connected_graph(n, 0.5, rng), rng)
    q = rng.randrange(n)
    for f in enumerate_maximum(g, q):
        assert orientation_to_parking(extended_dhar(f), q) == f


def test_unique_source_count_on_cubes():
    assert count_unique_source(hypercube(2), 0) == 3
    assert count_unique_source(hypercube(3), 0) == 133
