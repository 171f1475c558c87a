import pytest

from oberwolfach.alpha import (
    EVEN_CYCLE_EDGE_EXCEPTIONS,
    al_chain,
    base_even_cycle,
    build_al,
    build_al_for_path,
    chain_size,
    even_cycle_path,
)
from oberwolfach.graphs import CycleMultiset, GraphSpec, Refused


def _interval(lo, hi):
    return set(range(lo, hi + 1))


def test_base_even_cycle_paths_and_exceptions():
    al = base_even_cycle(2, 0)
    assert al.check().ok and al.graph.path == (2, 7)
    al31 = base_even_cycle(3, 1)
    assert al31.check().ok and al31.graph.path == (2, 10, 3, 9)
    for lam, i in EVEN_CYCLE_EDGE_EXCEPTIONS:
        with pytest.raises(Refused):
            base_even_cycle(lam, i)


def test_base_even_cycle_table_matches_oracle():
    from oberwolfach.oracle import search

    for lam, i in [(2, 0), (3, 1)]:
        al = base_even_cycle(lam, i)
        res = search(
            GraphSpec.of([4 * lam - 2 * i], 2 * i + 1),
            "AL",
            pinned_path=al.graph.path,
            limit=4 * lam + 1,
        )
        assert res.first is not None
        assert res.first.cycles == (al.graph.cycles[0],)


def test_even_cycle_path_examples():
    al = even_cycle_path(4, 9)
    assert al.check().ok and (al.x, al.y) == (3, 10)
    assert al.graph.cycles == ((4, 7, 6, 8),)
    al6 = even_cycle_path(6, 19)
    assert al6.check().ok and (al6.x, al6.y) == (6, 19)
    al8 = even_cycle_path(8, 1)
    assert al8.check().ok and (al8.x, al8.y) == (2, 7)


def test_even_cycle_path_grid():
    for ell in (4, 6, 8, 10, 12):
        for m in range(1, 42, 2):
            if (ell + m) % 4 != 1:
                continue
            ok = (m in (1, 3) and ell >= 8) or m >= ell + 5
            if not ok:
                with pytest.raises(Refused):
                    even_cycle_path(ell, m)
                continue
            al = even_cycle_path(ell, m)
            q = (ell + m - 1) // 4
            assert al.check().ok and {al.x, al.y} == {q, 3 * q + 1}, (ell, m)


def test_al_chain_examples():
    one = al_chain([4])
    assert one.check().ok and one.eps == 13 and (one.x, one.y) == (3, 10)
    two = al_chain([4, 6])
    assert two.check().ok and two.eps == 35 and (two.x, two.y) == (4, 22)
    twin = al_chain([4, 4])
    assert twin.check().ok and twin.eps == 27 and (twin.x, twin.y) == (3, 17)
    with pytest.raises(Refused):
        al_chain([])
    with pytest.raises(Refused):
        al_chain([4, 5])


def test_al_chain_bridge_differences():
    from oberwolfach.graphs import path_difference_list

    L = CycleMultiset.of(4, 6, 6)
    al = al_chain(L)
    w = L.max_length + 3
    t = len(L) - 1
    bridges = {2 * (t - i) * w for i in range(t)}
    assert bridges <= al.path_diffs()


def test_build_al():
    out = build_al([4], 27)
    assert out.check().ok and _interval(14, 27) <= out.path_diffs()
    with pytest.raises(Refused):
        build_al([4], 20)
    assert build_al([4], 13).eps == chain_size(CycleMultiset.of(4))
    viapath = build_al_for_path([4], 53)
    assert viapath.check().ok and viapath.spec().path_len == 53
    with pytest.raises(Refused):
        build_al_for_path([4], 22)
