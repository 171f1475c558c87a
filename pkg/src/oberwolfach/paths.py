"""Alpha labelings of paths with a prescribed end vertex.

Given two intervals J1 = I(w1, w1+g1) < J2 = I(w2, w2+g2) with |g1-g2| <= 1,
there is a path on all of J1 u J2 alternating between the parts whose edge
differences realize the whole band +-(w2-z1 .. z2-w1), and one end can be
prescribed:

  case 1 (g1 = g2+1): ends (w1+i, w1+g1-i), i in 0..g1, i != g1/2
  case 2 (g1 = g2):   ends (w1+i, w2+i),    i in 0..g1
  case 3 (g1 = g2-1): ends (w2+i, w2+g2-i), i in 0..g2, i != g2/2

The construction below peels a zig-zag through the interval extremes,
consuming the largest differences, and recurses on the middle; the halfway
cases have a closed form.  It runs in linear time and is exhaustively checked
against brute-force search in the tests.
"""

from __future__ import annotations

from .graphs import LabeledGraph, Refused
from .labelings import Alpha, ALParams


def _zigzag(count: int, eps: int) -> list[int]:
    """0, eps, 1, eps-1, ... with `count` low values."""
    seq: list[int] = []
    for k in range(count):
        seq.append(k)
        seq.append(eps - k)
    return seq


def _case2(g: int, i: int) -> list[int]:
    """Normalized case 2: parts I(0,g), I(g+1, 2g+1), ends (i, g+1+i)."""
    eps = 2 * g + 1
    if 2 * i > g:
        return [eps - v for v in _case2(g, g - i)][::-1]
    if i == 0:
        return _zigzag(g + 1, eps)
    if 2 * i == g:
        # low run i..g interleaved with highs g+i..g+1, then the top zig-zag
        seq = []
        for k in range(i):
            seq.append(i + k)
            seq.append(g + i - k)
        seq.append(g)
        for k in range(i):
            seq.append(eps - k)
            seq.append(k)
        seq.append(eps - i)
        return seq
    # peel [i, eps-i, i-1, eps-i+1, ..., 0, eps], join eps -> 2i+1, recurse
    seq = []
    for k in range(i + 1):
        seq.append(i - k)
        seq.append(eps - i + k)
    return seq + [v + i + 1 for v in _case2(g - i - 1, i)]


def _case1(p: int, i: int) -> list[int]:
    """Normalized case 1: parts I(0,p), I(p+1, 2p), ends (i, p-i)."""
    eps = 2 * p
    i = min(i, p - i)
    if i == 0:
        return _zigzag(p, eps) + [p]
    # peel [i, eps-i+1, ..., 1, eps, 0], join 0 -> eps-2i, then a case-2 tail
    seq = []
    for k in range(i):
        seq.append(i - k)
        seq.append(eps - i + 1 + k)
    seq.append(0)
    tail = _case2(p - i - 1, p - 2 * i - 1)[::-1]
    return seq + [v + i + 1 for v in tail]


def path_al(j1: tuple[int, int], j2: tuple[int, int], i: int) -> Alpha:
    """Alpha labeling of a path on all of J1 u J2 with the prescribed end.

    The case is read off the part sizes; `i` selects the end pair as in the
    table above.  The returned path sequence starts at the designated x end.
    """
    (w1, z1), (w2, z2) = j1, j2
    g1, g2 = z1 - w1, z2 - w2
    if g1 < 0 or g2 < 0:
        raise Refused("both intervals must be nonempty")
    if z1 >= w2:
        raise Refused("intervals must satisfy z1 < w2")
    if abs(g1 - g2) > 1:
        raise Refused(f"interval sizes differ by {abs(g1 - g2)} > 1")
    if g1 == g2:
        if not 0 <= i <= g1:
            raise Refused(f"i={i} outside 0..{g1}")
        seq = _case2(g1, i)
        x, y = w1 + i, w2 + i
    elif g1 == g2 + 1:
        if not 0 <= i <= g1 or 2 * i == g1:
            raise Refused(f"i={i} invalid for case 1 with g1={g1}")
        seq = _case1(g1, i)
        x, y = w1 + i, w1 + g1 - i
    else:
        if not 0 <= i <= g2 or 2 * i == g2:
            raise Refused(f"i={i} invalid for case 3 with g2={g2}")
        eps = g1 + g2 + 1
        seq = [eps - v for v in _case1(g2, i)][::-1]
        x, y = w2 + i, w2 + g2 - i
    # place the normalized sequence onto the actual intervals
    cut = g1  # normalized low part is I(0, g1)
    placed = [v + w1 if v <= cut else v + (w2 - g1 - 1) for v in seq]
    if placed[-1] == x:
        placed.reverse()
    graph = LabeledGraph(path=tuple(placed))
    return Alpha(graph, ALParams(j1, j2, x, y))


def zigzag_path(m: int) -> Alpha:
    """Canonical alpha-labeled m-path on I(0, m) with standard parts."""
    if m < 1:
        raise Refused("need path length >= 1")
    return path_al((0, (m - 1) // 2), ((m + 1) // 2, m), 0)
