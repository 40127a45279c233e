from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from angulata import (
    BudgetExceeded,
    ClusterTilting,
    ModelParams,
    NotMutable,
    ValidationError,
    complete_to_tilting,
    enumerate_objects,
    enumerate_tiltings,
    exchange_angles,
    exchange_graph,
    find_replacement,
    intertwines,
    is_cluster_tilting,
    mutable_positions,
    mutate,
    tilting_size,
)
from angulata.tilting import cached_exchange_graph, frame_for
from angulata.errors import InvariantViolation

P12 = ModelParams(1, 2)
P13 = ModelParams(1, 3)
P31 = ModelParams(3, 1)
P32 = ModelParams(3, 2)
P33 = ModelParams(3, 3)


def brute_force_tiltings(p):
    """Largest pairwise non-intertwining subsets, by exhaustive search."""
    objs = enumerate_objects(p)
    for size in range(len(objs), 0, -1):
        found = [
            c for c in combinations(objs, size) if not any(intertwines(a, b) for a, b in combinations(c, 2))
        ]
        if found:
            return sorted(found)
    return []


@pytest.mark.parametrize("d, n", [(1, 1), (1, 2), (1, 3), (1, 4), (2, 2), (3, 1), (3, 2)])
def test_enumeration_matches_brute_force(d, n):
    p = ModelParams(d, n)
    assert [t.key for t in enumerate_tiltings(p)] == brute_force_tiltings(p)


def test_enumeration_examples():
    assert len(enumerate_tiltings(P12)) == 5
    assert len(enumerate_tiltings(P13)) == 14
    ts = enumerate_tiltings(P31)
    assert [t.summands for t in ts] == [((0, 2, 4, 6),), ((1, 3, 5, 7),)]
    assert tilting_size(P33) == 10 and all(len(t) == 10 for t in enumerate_tiltings(P33))


def test_enumeration_budget():
    with pytest.raises(BudgetExceeded) as info:
        enumerate_tiltings(P33, max_nodes=5)
    assert isinstance(info.value.partial, list)


def test_is_cluster_tilting():
    assert is_cluster_tilting([(0, 2), (0, 3)], P12)
    assert not is_cluster_tilting([(0, 2)], P12)
    assert not is_cluster_tilting([(0, 2), (1, 3)], P12)


def test_small_maximal_sets_are_not_tilting():
    # in (3,2) some non-intertwining sets admit no extension yet are too small
    objs = enumerate_objects(P32)
    stuck = []
    for c in combinations(objs, 3):
        if any(intertwines(a, b) for a, b in combinations(c, 2)):
            continue
        if all(any(intertwines(o, x) for x in c) for o in objs if o not in c):
            stuck.append(c)
    assert stuck
    for c in stuck:
        assert not is_cluster_tilting(c, P32)
        with pytest.raises(ValidationError):
            ClusterTilting(P32, c)
        with pytest.raises(ValidationError):
            complete_to_tilting(c, P32)


def test_constructor_validation():
    with pytest.raises(ValidationError):
        ClusterTilting.from_lists(P12, [(0, 2), (1, 3)])
    with pytest.raises(ValidationError):
        ClusterTilting.from_lists(P12, [(0, 2), (0, 2)])
    with pytest.raises(ValidationError):
        ClusterTilting.from_lists(P12, [(0, 1), (0, 3)])
    with pytest.raises(ValidationError):
        ClusterTilting.from_lists(P12, [(0, 2)])


def test_complete_to_tilting():
    assert complete_to_tilting([(1, 4)], P12).summands == ((1, 3), (1, 4))
    assert complete_to_tilting([], P12).key == enumerate_tiltings(P12)[0].key
    assert complete_to_tilting([(0, 2, 4, 6)], P31).summands == ((0, 2, 4, 6),)
    with pytest.raises(ValidationError):
        complete_to_tilting([(0, 2), (1, 3)], P12)


def test_find_replacement_examples(pentagon, fan):
    assert find_replacement(pentagon, 0) == (1, 3)
    assert find_replacement(ClusterTilting.from_lists(P31, [(0, 2, 4, 6)]), 0) == (1, 3, 5, 7)
    assert find_replacement(fan, 1) == (2, 4)


def test_mutate_examples(pentagon, fan):
    new, frame = mutate(pentagon, 0)
    assert new.summands == ((1, 3), (0, 3))
    assert frame.b == (0, 1, 2, 3) and frame.r_parity == 0
    new, frame = mutate(fan, 1)
    assert frame.b == (0, 2, 3, 4) and frame.outgoing == (0, 3) and frame.incoming == (2, 4)


def test_exchange_angle_examples(pentagon, fan):
    angles = exchange_angles(fan, mutate(fan, 1)[1])
    assert angles.left == (((0, 4),),) and angles.right == (((0, 2),),)
    angles = exchange_angles(pentagon, mutate(pentagon, 0)[1])
    assert angles.left == (((0, 3),),) and angles.right == ((),)
    t = ClusterTilting.from_lists(P31, [(0, 2, 4, 6)])
    angles = exchange_angles(t, mutate(t, 0)[1])
    assert all(term == () for term in angles.left + angles.right)


def test_not_mutable():
    t = complete_to_tilting([], P33)
    frozen = [i for i in range(len(t)) if i not in mutable_positions(t)]
    assert frozen
    with pytest.raises(NotMutable):
        mutate(t, frozen[0])
    assert find_replacement(t, frozen[0]) is None


def test_frame_for_rejects_bad_pairs():
    with pytest.raises(InvariantViolation):
        frame_for((0, 2), (2, 4))
    with pytest.raises(InvariantViolation):
        frame_for((0, 3), (1, 2))


SWEEP = [P12, P13, ModelParams(1, 4), ModelParams(2, 2), ModelParams(2, 3), P31, P32, P33]


@given(st.sampled_from(SWEEP), st.data())
def test_mutation_is_an_involution(p, data):
    ts = enumerate_tiltings(p)
    t = data.draw(st.sampled_from(ts))
    positions = mutable_positions(t)
    assert positions
    pos = data.draw(st.sampled_from(positions))
    new, frame = mutate(t, pos)
    assert new.summands[pos] == frame.incoming and t.summands[pos] == frame.outgoing
    back, back_frame = mutate(new, pos)
    assert back == t
    assert back_frame.b == frame.b and back_frame.r_parity != frame.r_parity


def test_every_frame_alternates_and_middles_are_summands():
    for p in SWEEP:
        for t in enumerate_tiltings(p):
            for pos in mutable_positions(t):
                _, frame = mutate(t, pos)
                b = frame.b
                assert len(b) == 2 * p.d + 2
                assert b[frame.r_parity :: 2] == t.summands[pos]
                angles = exchange_angles(t, frame)
                others = set(t.summands) - {t.summands[pos]}
                for term in angles.left + angles.right:
                    assert set(term) <= others


def test_exchange_graph_examples():
    g = exchange_graph(P12)
    assert len(g.nodes) == 5 and len(g.edges) == 5
    assert all(len(nbrs) == 2 for nbrs in g.adjacency)
    g = exchange_graph(P31)
    assert g.edges == [(0, 1, (0, 2, 4, 6), (1, 3, 5, 7))]


@pytest.mark.parametrize(
    "d, n, nodes, edges",
    [(1, 3, 14, 21), (1, 4, 42, 84), (2, 2, 7, 7), (2, 3, 40, 64), (3, 2, 9, 9), (3, 3, 102, 180)],
)
def test_exchange_graph_sizes(d, n, nodes, edges):
    p = ModelParams(d, n)
    g = cached_exchange_graph(p)
    assert (len(g.nodes), len(g.edges)) == (nodes, edges)
    assert not g.truncated
    assert sorted(g.nodes) == [t.key for t in enumerate_tiltings(p)]
    assert all(x is not None for x in g.distances_to(0))


def test_exchange_graph_truncation_and_dot():
    g = exchange_graph(P33, max_nodes=10)
    assert g.truncated and len(g.nodes) <= 11
    dot = exchange_graph(P12).to_dot()
    assert dot.startswith("graph exchange {") and dot.count(" -- ") == 5


def test_tilting_helpers(pentagon):
    assert len(pentagon) == 2 and (0, 3) in pentagon and [0, 2] in pentagon
    assert pentagon.slot((0, 3)) == 1
    swapped = pentagon.reordered([(0, 3), (0, 2)])
    assert swapped.summands == ((0, 3), (0, 2)) and swapped.same_object(pentagon) and swapped != pentagon
    assert str(pentagon) == "{0,2; 0,3}"
    with pytest.raises(ValidationError):
        pentagon.slot((1, 3))
