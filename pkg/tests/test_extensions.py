import pytest

from oberwolfach.alpha import al_chain
from oberwolfach.extensions import (
    extend_even,
    extend_high,
    extend_low,
    join_al_gl,
    join_budget,
)
from oberwolfach.graceful import base_odd
from oberwolfach.graphs import Refused


def _interval(lo, hi):
    return set(range(lo, hi + 1))


def test_extend_low_examples():
    g = base_odd(3)  # GL(1,4) of [3|3], size 6
    out = extend_low(g, 4)
    assert out.check().ok and (out.x, out.y) == (1, 6) and out.eps == 10
    assert _interval(7, 10) <= out.path_diffs()
    odd = extend_low(g, 3)
    assert odd.check().ok and (odd.x, odd.y) == (8, 5) and odd.eps == 9
    with pytest.raises(Refused):
        extend_low(g, 5)  # mu = 4x+1
    with pytest.raises(Refused):
        extend_low(g, 2)  # mu < 2x+1


def test_extend_low_mu_one_is_the_exception():
    from oberwolfach.paths import zigzag_path

    g = zigzag_path(3).as_gl()  # ends (0, 2)
    with pytest.raises(Refused):
        extend_low(g, 1)  # mu = 1 = 4x+1 when x = 0
    out = extend_low(g, 2)
    assert out.check().ok and (out.x, out.y) == (0, 3)


def test_extend_high_examples():
    g = base_odd(3)
    out = extend_high(g, 5)
    assert out.check().ok and (out.x, out.y) == (4, 2) and out.eps == 11
    assert _interval(7, 11) <= out.path_diffs()
    even = extend_high(g, 6)
    assert even.check().ok and (even.x, even.y) == (4, 10)
    with pytest.raises(Refused):
        extend_high(g, 9)  # mu = 4(eps-y)+1
    with pytest.raises(Refused):
        extend_high(g, 4)


def test_extend_preserves_alpha():
    al = al_chain([4])  # AL(3,10) of [4|9], size 13
    out = extend_low(al, 8)
    assert out.check().ok and out.is_consecutive()
    assert (out.x, out.y) == (3, 14)


def test_extend_even_examples():
    al = al_chain([4])
    out = extend_even(al, 8)
    assert out.check().ok and (out.x, out.y) == (7, 18) and out.eps == 21
    with pytest.raises(Refused):
        extend_even(al, 7)  # odd mu
    with pytest.raises(Refused):
        extend_even(al, 6)  # mu <= eps - 2x
    with pytest.raises(Refused):
        extend_even(extend_low(al, 7), 30)  # even size input


def test_join_budget_example():
    b = join_budget(al_chain([4]), base_odd(3))
    assert b.bound == 84
    assert b.bound <= 5 * 13 + 6 * 6 + 9


def test_join_budget_upper_bound_property():
    import random

    rng = random.Random(7)
    for _ in range(200):
        e0 = 2 * rng.randrange(3, 40) + 1
        e1 = rng.randrange(2, 40)
        x0 = rng.randrange(0, (e0 - 1) // 2 + 1)
        y0 = rng.randrange((e0 + 1) // 2, e0 + 1)
        x1 = rng.randrange(0, e1)
        y1 = rng.randrange(x1 + 1, e1 + 1)
        bound = 2 * e0 + 6 * e1 + 4 * x1 - 6 * y1 + 2 * x0 + 2 * y0 + 16
        assert bound <= 5 * e0 + 6 * e1 + 9


def test_join_al_gl():
    al, gl = al_chain([4]), base_odd(3)
    out = join_al_gl(al, gl, 84)
    assert out.check().ok
    assert out.spec().cycles.lengths == (3, 4)
    assert out.eps == 13 + 6 + 84
    with pytest.raises(Refused):
        join_al_gl(al, gl, 83)


def test_join_cycle_multiset_is_union():
    al, gl = al_chain([4, 6]), base_odd(5)
    out = join_al_gl(al, gl, join_budget(al, gl).bound + 3)
    assert out.check().ok and out.spec().cycles.lengths == (4, 5, 6)
