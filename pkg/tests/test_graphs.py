from collections import Counter

import pytest

from oberwolfach.graphs import (
    INF,
    CycleMultiset,
    GraphSpec,
    LabeledGraph,
    Refused,
    affine_map,
    classify_single_flip,
    cycle_type,
    cycles_from_edges,
    difference_list,
    graph_from_json,
    graph_to_json,
)


def test_difference_list_cycle_and_path():
    g = LabeledGraph(cycles=((2, 3, 5),))
    assert Counter(difference_list(g)) == Counter([1, -1, 2, -2, 3, -3])
    edge = LabeledGraph(path=(0, 1))
    assert sorted(difference_list(edge)) == [-1, 1]
    p = LabeledGraph(path=(1, 6, 0, 4))
    assert Counter(abs(d) for d in difference_list(p)) == Counter({5: 2, 6: 2, 4: 2})


def test_two_cycle_contributes_twice():
    g = LabeledGraph(cycles=((0, 3),))
    assert Counter(difference_list(g)) == Counter({3: 2, -3: 2})


def test_infinity_never_in_differences():
    g = LabeledGraph(cycles=((INF, 0, 1),))
    assert Counter(difference_list(g)) == Counter([1, -1])


def test_affine_map_examples():
    edge = LabeledGraph(path=(0, 1))
    assert affine_map(edge, 1, 5).path == (5, 6)
    c = LabeledGraph(cycles=((2, 3, 5),))
    assert affine_map(c, -1, 6).cycles == ((4, 3, 1),)
    with pytest.raises(ValueError):
        affine_map(edge, 0, 1)


def test_affine_scales_differences():
    g = LabeledGraph(cycles=((2, 3, 5),), path=(1, 6, 0, 4))
    for a, b in [(2, 1), (-1, 6), (3, -4)]:
        want = Counter(a * d for d in difference_list(g))
        assert Counter(difference_list(affine_map(g, a, b))) == want


def test_affine_composition():
    g = LabeledGraph(cycles=((2, 3, 5),), path=(1, 6, 0, 4))
    lhs = affine_map(affine_map(g, 2, 3), -1, 5)
    rhs = affine_map(g, -2, 2)
    assert lhs == rhs


def test_modulus_normalizes_labels():
    g = LabeledGraph(path=(9, -1), modulus=7)
    assert g.path == (2, 6)
    assert sorted(difference_list(g)) == [3, 4]


def test_repeated_label_rejected():
    with pytest.raises(ValueError):
        LabeledGraph(cycles=((0, 1, 2),), path=(2, 3))


def test_cycle_type():
    g = LabeledGraph(cycles=((2, 3, 5),), path=(1, 6, 0, 4))
    assert cycle_type(g) == CycleMultiset.of(3)
    assert cycle_type(LabeledGraph(path=(0,))) == CycleMultiset.of()


def test_cycle_multiset_basics():
    cm = CycleMultiset.of(9, 3, 3)
    assert cm.lengths == (3, 3, 9)
    assert cm.size == 15 and len(cm) == 3
    assert cm.max_length == 9 and cm.count(3) == 2
    assert cm.without(3).lengths == (3, 9)
    assert CycleMultiset.of().max_length == 0
    with pytest.raises(ValueError):
        CycleMultiset.of(1)


def test_graph_spec():
    s = GraphSpec.of([3, 3], 7)
    assert s.size == 13 and s.order == 14
    with pytest.raises(ValueError):
        GraphSpec.of([2, 2], 1)


def test_classify_single_flip_examples():
    flip = classify_single_flip(CycleMultiset.of(4, 5))
    assert flip is not None and flip.reflected == 5
    assert flip.flips == (2,) and flip.pairs == ()
    assert classify_single_flip(CycleMultiset.of(3, 3)) is None
    flip = classify_single_flip(CycleMultiset.of(6, 5, 5))
    assert flip.reflected == 6 and flip.pairs == (5,) and flip.flips == ()
    with pytest.raises(Refused):
        classify_single_flip(CycleMultiset.of(2, 3, 3))


def test_classify_more_shapes():
    # repeated evens migrate into the paired list
    flip = classify_single_flip(CycleMultiset.of(9, 4, 4))
    assert flip.reflected == 9 and flip.pairs == (4,) and flip.flips == ()
    # odd order needs exactly one odd length of odd multiplicity
    assert classify_single_flip(CycleMultiset.of(3, 5, 7)) is None
    flip = classify_single_flip(CycleMultiset.of(3, 3, 5))
    assert flip.reflected == 5 and flip.pairs == (3,)
    # even order with no even cycle is not single-flip
    assert classify_single_flip(CycleMultiset.of(3, 3, 5, 5)) is None
    flip = classify_single_flip(CycleMultiset.of(8, 6, 4))
    assert flip.reflected == 8 and flip.flips == (2, 3) and flip.pairs == ()


def test_json_round_trip():
    g = LabeledGraph(cycles=((INF, 0, 1), (2, 5)), path=(3, 4), modulus=None)
    data = graph_to_json(g)
    assert data["cycles"][0][0] == "inf"
    assert graph_from_json(data) == g


def test_cycles_from_edges():
    g = LabeledGraph(cycles=((0, 1, 2), (3, 4, 5, 6)))
    rebuilt = cycles_from_edges(list(g.edges()))
    assert cycle_type(LabeledGraph(cycles=rebuilt)) == CycleMultiset.of(3, 4)
    doubled = cycles_from_edges([(0, 3), (0, 3)])
    assert cycle_type(LabeledGraph(cycles=doubled)) == CycleMultiset.of(2)
    with pytest.raises(ValueError):
        cycles_from_edges([(0, 1), (1, 2)])
