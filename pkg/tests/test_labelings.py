import pytest

from oberwolfach.graphs import GraphSpec, LabeledGraph, Refused
from oberwolfach.labelings import (
    Alpha,
    ALParams,
    Graceful,
    GLParams,
    bipartite_shift,
    fold,
    necessary_conditions,
    normalize_al,
    reflect,
    translate_labeling,
    verify_al,
    verify_gl,
)

GL_3_3 = Graceful(
    LabeledGraph(cycles=((2, 3, 5),), path=(1, 6, 0, 4)), GLParams((0, 6), 1, 4)
)


def test_verify_gl_base_case():
    assert GL_3_3.check().ok


def test_verify_gl_trivial_edge():
    rep = verify_gl(LabeledGraph(path=(0, 1)), GraphSpec.of([], 1), GLParams((0, 1), 0, 1))
    assert rep.ok


def test_verify_gl_two_cycle_variant():
    # corrected [2 | 1] base: the 2-cycle (0,3) with the edge {1,2}
    g = LabeledGraph(cycles=((0, 3),), path=(1, 2))
    assert verify_gl(g, GraphSpec.of([2], 1), GLParams((0, 3), 1, 2)).ok
    # the misprinted variant "path 2,3" reuses the label 3
    with pytest.raises(ValueError):
        LabeledGraph(cycles=((0, 3),), path=(2, 3))


def test_verify_gl_failures_name_clauses():
    spec = GraphSpec.of([3], 3)
    bad_ends = verify_gl(GL_3_3.graph, spec, GLParams((0, 6), 1, 5))
    assert not bad_ends.ok and bad_ends.violations[0].clause == "path-ends"
    bad_shape = verify_gl(GL_3_3.graph, GraphSpec.of([3], 2), GLParams((0, 6), 1, 4))
    assert not bad_shape.ok and bad_shape.violations[0].clause == "shape"
    shifted = translate_labeling(GL_3_3, 1)
    bad_j = verify_gl(shifted.graph, spec, GLParams((0, 6), 2, 5))
    assert not bad_j.ok and bad_j.violations[0].clause == "vertex-set"
    broken = LabeledGraph(cycles=((2, 3, 6),), path=(1, 5, 0, 4))
    bad_diff = verify_gl(broken, spec, GLParams((0, 6), 1, 4))
    assert not bad_diff.ok and bad_diff.violations[0].clause == "differences"


def test_verify_al_six_cycle_example():
    g = LabeledGraph(
        cycles=((2, 23, 4, 20, 5, 22),),
        path=(6, 18, 9, 15, 10, 17, 7, 21, 3, 25, 0, 24, 1, 14, 11, 13, 12, 16, 8, 19),
    )
    rep = verify_al(g, GraphSpec.of([6], 19), ALParams((0, 12), (13, 25), 6, 19))
    assert rep.ok


def test_verify_al_edge_and_odd_cycle():
    edge = LabeledGraph(path=(0, 2))
    assert verify_al(edge, GraphSpec.of([], 1), ALParams((0, 0), (2, 2), 0, 2)).ok
    rep = verify_al(GL_3_3.graph, GraphSpec.of([3], 3), ALParams((0, 2), (3, 6), 1, 4))
    assert not rep.ok and rep.violations[0].clause == "parts"


def test_consecutive_alpha_is_graceful():
    from oberwolfach.alpha import al_chain

    al = al_chain([4, 6])
    assert al.check().ok and al.is_consecutive()
    assert al.as_gl().check().ok


def test_bipartite_shift_examples():
    edge = Alpha(LabeledGraph(path=(0, 2)), ALParams((0, 0), (2, 2), 0, 2))
    moved = bipartite_shift(edge, 0, 1)
    assert moved.graph.path == (0, 3) and moved.params.span == (3, 3)
    # equal shifts reduce to a translate
    both = bipartite_shift(edge, 4, 4)
    assert both.graph == translate_labeling(edge, 4).graph
    with pytest.raises(Refused):
        bipartite_shift(edge, 2, 0)  # parts would collide


def test_normalize_al():
    from oberwolfach.alpha import al_chain

    al = bipartite_shift(al_chain([4]), 3, 9)
    norm = normalize_al(al)
    assert norm.params.j1[0] == 0 and norm.is_consecutive()
    assert norm.check().ok


def test_reflect():
    r = reflect(GL_3_3)
    assert (r.x, r.y) == (2, 5)
    assert sorted(r.graph.cycles[0]) == [1, 3, 4]
    assert r.check().ok
    assert reflect(r) == GL_3_3
    with pytest.raises(Refused):
        reflect(GL_3_3, 5)


def test_fold():
    from oberwolfach.alpha import al_chain

    al = al_chain([4])  # size 13, standard parts
    f = fold(al, 13)
    assert f.check().ok
    assert fold(f, 13) == al
    # f_3 acts pointwise as (1, 0, 3, 2)
    probe = Alpha(LabeledGraph(path=(1, 2, 0, 3)), ALParams((0, 1), (2, 3), 1, 3))
    assert probe.check().ok
    folded = fold(probe, 3)
    assert folded.graph.path == (0, 3, 1, 2)
    edge = Alpha(LabeledGraph(path=(0, 2)), ALParams((0, 0), (2, 2), 0, 2))
    with pytest.raises(Refused):
        fold(edge, 3)  # parts are not the standard halves


def test_necessary_conditions():
    rosa = necessary_conditions(GraphSpec.of([3, 3], 0))
    assert [v.clause for v in rosa] == ["rosa"]
    kotzig = necessary_conditions(GraphSpec.of([3, 3], 1))
    assert [v.clause for v in kotzig] == ["kotzig"]
    assert necessary_conditions(GraphSpec.of([3], 0)) == ()
    assert necessary_conditions(GraphSpec.of([4], 5)) == ()


def test_gl_pass_implies_difference_count():
    lab = GL_3_3
    from oberwolfach.graphs import difference_list

    diffs = difference_list(lab.graph)
    assert len(diffs) == 2 * lab.eps and 0 not in diffs
