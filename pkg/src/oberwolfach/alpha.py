"""Alpha-labeling constructors for graphs with even cycles and one path.

The ladder: a single even cycle plus a short path (imported base labelings,
realized by exhaustive search and cached), a single even cycle plus a long
path (four case constructions), a chain of even cycles (each piece shifted
into its own slot and the paths threaded through), and finally arbitrary
target sizes by path extension.
"""

from __future__ import annotations

from functools import lru_cache

from .extensions import extend_low
from .graphs import CycleMultiset, GraphSpec, LabeledGraph, Refused
from .labelings import Alpha, ALParams, bipartite_shift
from .paths import path_al

# Alpha labelings of one (4*lam - 2i)-cycle plus a (2i+1)-path with the path
# pinned to (lam, 3lam+1) for i=0 and (lam-1, 3lam+1, lam, 3lam) for i=1.
# No labeling exists for (1,0), (1,1), (2,1); the cycles below are the
# lexicographically least completions found by oracle.search.
EVEN_CYCLE_EDGE_EXCEPTIONS = {(1, 0), (1, 1), (2, 1)}

_EVEN_CYCLE_EDGE = {
    (2, 0): (0, 8, 1, 5, 4, 6, 3, 9),
    (3, 0): (0, 12, 1, 11, 2, 8, 4, 9, 6, 7, 5, 13),
    (3, 1): (0, 12, 1, 11, 6, 7, 5, 8, 4, 13),
    (4, 0): (0, 16, 1, 15, 2, 14, 3, 11, 6, 12, 5, 9, 8, 10, 7, 17),
    (4, 1): (0, 16, 1, 15, 2, 14, 7, 9, 8, 11, 5, 10, 6, 17),
    (5, 0): (0, 20, 1, 19, 2, 18, 3, 17, 4, 14, 6, 15, 8, 12, 7, 13, 10, 11, 9, 21),
    (5, 1): (0, 20, 7, 12, 8, 14, 6, 13, 10, 11, 9, 18, 1, 19, 3, 17, 2, 21),
    (6, 0): (0, 24, 1, 23, 2, 22, 3, 21, 4, 20, 5, 17, 7, 18, 9, 14, 10, 16, 8, 15, 12, 13, 11, 25),
    (6, 1): (0, 24, 1, 23, 2, 22, 3, 21, 4, 20, 9, 15, 8, 16, 7, 17, 12, 13, 11, 14, 10, 25),
}


def _pinned_path(lam: int, i: int) -> tuple[int, ...]:
    if i == 0:
        return (lam, 3 * lam + 1)
    return (lam - 1, 3 * lam + 1, lam, 3 * lam)


@lru_cache(maxsize=None)
def base_even_cycle(lam: int, i: int) -> Alpha:
    """Alpha labeling of [4*lam - 2i | 2i+1] with the standard short path."""
    if i not in (0, 1) or lam < 1:
        raise Refused(f"need lam >= 1 and i in {{0,1}}, got ({lam}, {i})")
    if (lam, i) in EVEN_CYCLE_EDGE_EXCEPTIONS:
        raise Refused(f"no such labeling exists for (lam, i) = ({lam}, {i})")
    eps = 4 * lam + 1
    path = _pinned_path(lam, i)
    cycle = _EVEN_CYCLE_EDGE.get((lam, i))
    if cycle is None:
        from .oracle import search

        res = search(
            GraphSpec.of([4 * lam - 2 * i], 2 * i + 1),
            "AL",
            pinned_path=path,
            limit=eps,
        )
        if res.first is None:
            raise Refused(f"no labeling found for (lam, i) = ({lam}, {i})")
        cycle = res.first.cycles[0]
    g = LabeledGraph(cycles=(tuple(cycle),), path=path)
    al = Alpha(g, ALParams((0, 2 * lam), (2 * lam + 1, eps), path[0], path[-1]))
    rep = al.check()
    if not rep.ok:
        raise RuntimeError(f"corrupt base labeling ({lam}, {i}): {rep.to_json()}")
    return al


def _al_0mod4(lam: int, mu: int) -> Alpha:
    """[4*lam | 4*mu+1] for lam >= 2 and mu = 0 or mu >= lam+1."""
    base = base_even_cycle(lam, 0)
    if mu == 0:
        return base
    p1 = path_al((0, mu - 1), (4 * lam + 3 * mu + 2, 4 * lam + 4 * mu + 1), lam)
    p2 = path_al((2 * lam + mu + 1, 2 * lam + 2 * mu), (2 * lam + 2 * mu + 1, 2 * lam + 3 * mu), lam)
    shifted = bipartite_shift(base, mu, 3 * mu)
    xp, yp = shifted.x, shifted.y  # (lam+mu, 3lam+3mu+1)
    seq = (
        (xp,)
        + p1.oriented_path()[::-1]
        + p2.oriented_path()[::-1]
        + (yp,)
    )
    g = LabeledGraph(cycles=shifted.graph.cycles, path=seq)
    eps = 4 * lam + 4 * mu + 1
    return Alpha(g, ALParams((0, 2 * lam + 2 * mu), (2 * lam + 2 * mu + 1, eps), xp, yp))


def _al_2mod4(lam: int, mu: int) -> Alpha:
    """[4*lam - 2 | 4*mu+3] for lam >= 3 and mu = 0 or mu >= lam."""
    base = base_even_cycle(lam, 1)
    if mu == 0:
        # reroute the 3-path (lam-1, 3lam+1, lam, 3lam) through its ends
        seq = (3 * lam + 1, lam - 1, 3 * lam, lam)
        g = LabeledGraph(cycles=base.graph.cycles, path=seq)
        return Alpha(g, ALParams(base.params.j1, base.params.j2, lam, 3 * lam + 1))
    p1 = path_al((0, mu - 1), (4 * lam + 3 * mu + 2, 4 * lam + 4 * mu + 1), lam - 1)
    p2 = path_al(
        (2 * lam + mu + 1, 2 * lam + 2 * mu), (2 * lam + 2 * mu + 1, 2 * lam + 3 * mu), lam - 1
    )
    shifted = bipartite_shift(base, mu, 3 * mu)
    xp, ypp, xpp, yp = shifted.oriented_path()  # (lam+mu-1, 3lam+3mu+1, lam+mu, 3lam+3mu)
    seq = (
        (ypp, xp)
        + p1.oriented_path()[::-1]
        + p2.oriented_path()[::-1]
        + (yp, xpp)
    )
    g = LabeledGraph(cycles=shifted.graph.cycles, path=seq)
    eps = 4 * lam + 4 * mu + 1
    return Alpha(g, ALParams((0, 2 * lam + 2 * mu), (2 * lam + 2 * mu + 1, eps), xpp, ypp))


_FOUR_CYCLE_SMALL = {
    2: ((4, 7, 6, 8), (10, 5, 13, 0, 12, 1, 11, 2, 9, 3)),
    3: ((6, 9, 8, 10), (4, 12, 7, 14, 5, 11, 0, 17, 1, 16, 2, 15, 3, 13)),
}


def _al_4cycle(mu: int) -> Alpha:
    """[4 | 4*mu+1] for mu >= 2."""
    eps = 4 * mu + 5
    parts = ((0, 2 * mu + 2), (2 * mu + 3, eps))
    if mu in _FOUR_CYCLE_SMALL:
        cycle, q = _FOUR_CYCLE_SMALL[mu]
        g = LabeledGraph(cycles=(cycle,), path=q)
        return Alpha(g, ALParams(*parts, mu + 1, 3 * mu + 4))
    cycle = (mu + 2, 3 * mu + 1, mu + 4, 3 * mu + 2)
    p2 = path_al((mu + 5, 2 * mu + 2), (2 * mu + 3, 3 * mu), mu - 4)
    p3 = [2 * mu + 1]
    for j in range(mu + 1):
        p3 += [4 * mu + 5 - j, j]
    p3 += [3 * mu + 3, mu + 1]
    seq = (3 * mu + 4, mu + 3) + p2.oriented_path()[::-1] + tuple(p3[1:])
    g = LabeledGraph(cycles=(cycle,), path=seq)
    return Alpha(g, ALParams(*parts, mu + 1, 3 * mu + 4))


_SIX_CYCLE_MU4 = (
    (2, 23, 4, 20, 5, 22),
    (6, 18, 9, 15, 10, 17, 7, 21, 3, 25, 0, 24, 1, 14, 11, 13, 12, 16, 8, 19),
)


def _al_6cycle(mu: int) -> Alpha:
    """[6 | 4*mu+3] for mu >= 2."""
    eps = 4 * mu + 9
    parts = ((0, 2 * mu + 4), (2 * mu + 5, eps))
    if mu == 4:
        cycle, q = _SIX_CYCLE_MU4
        g = LabeledGraph(cycles=(cycle,), path=q)
        return Alpha(g, ALParams(*parts, mu + 2, 3 * mu + 7))
    p1 = path_al((0, mu), (3 * mu + 10, 4 * mu + 9), 2)
    p2 = path_al((mu + 5, 2 * mu + 4), (2 * mu + 5, 3 * mu + 5), 2)
    cycle = (mu + 1, 3 * mu + 9, mu + 3, 3 * mu + 6, mu + 4, 3 * mu + 8)
    seq = (3 * mu + 7,) + p1.oriented_path()[::-1] + p2.oriented_path() + (mu + 2,)
    g = LabeledGraph(cycles=(cycle,), path=seq)
    return Alpha(g, ALParams(*parts, mu + 2, 3 * mu + 7))


def even_cycle_path(ell: int, m: int) -> Alpha:
    """Alpha labeling of [ell | m] with ends ((ell+m-1)/4, 3(ell+m-1)/4 + 1).

    Needs ell >= 4 even, m >= 1 odd, ell + m = 1 (mod 4), and either
    m in {1, 3} with ell >= 8, or m >= ell + 5.  The gap 3 < m < ell+5 is
    not covered by any of the constructions and is refused.
    """
    if ell < 4 or ell % 2:
        raise Refused(f"cycle length must be even >= 4, got {ell}")
    if m < 1 or m % 2 == 0 or (ell + m) % 4 != 1:
        raise Refused(f"need odd m with ell + m = 1 (mod 4), got [{ell} | {m}]")
    if not ((m in (1, 3) and ell >= 8) or m >= ell + 5):
        raise Refused(f"[{ell} | {m}] not covered: need m in {{1,3}} with ell >= 8, or m >= {ell + 5}")
    if ell == 4:
        al = _al_4cycle((m - 1) // 4)
    elif ell == 6:
        al = _al_6cycle((m - 3) // 4)
    elif ell % 4 == 0:
        al = _al_0mod4(ell // 4, (m - 1) // 4)
    else:
        al = _al_2mod4((ell + 2) // 4, (m - 3) // 4)
    q = (ell + m - 1) // 4
    assert {al.x, al.y} == {q, 3 * q + 1}, "end vertices drifted from the statement"
    return al


def al_chain(lengths) -> Alpha:
    """Alpha labeling of [L | eps - sum(L)] with eps = 2|L|(max(L)+3) - 1.

    Ends come out at (max(L)/2 + 1, (eps + max(L) + 3)/2).  Each cycle gets
    its own pair of label slots; the piece paths are chained in order.
    """
    L = lengths if isinstance(lengths, CycleMultiset) else CycleMultiset.from_lengths(lengths)
    if not L:
        raise Refused("need at least one cycle")
    if any(ell % 2 or ell < 4 for ell in L.lengths):
        raise Refused(f"cycle lengths must be even >= 4, got {L}")
    k = 2 * L.max_length + 5
    w = (k + 1) // 2
    t = len(L) - 1
    cycles: list[tuple[int, ...]] = []
    seq: tuple[int, ...] = ()
    first_x = last_y = None
    for idx, ell in enumerate(L.lengths):
        piece = even_cycle_path(ell, k - ell)
        shifted = bipartite_shift(piece, idx * w, (2 * t - idx) * w)
        cycles.extend(shifted.graph.cycles)
        seq = seq + shifted.oriented_path()
        if idx == 0:
            first_x = shifted.x
        last_y = shifted.y
    eps = 2 * (t + 1) * w - 1
    g = LabeledGraph(cycles=tuple(cycles), path=seq)
    return Alpha(g, ALParams((0, (eps - 1) // 2), ((eps + 1) // 2, eps), first_x, last_y))


def chain_size(L: CycleMultiset) -> int:
    return 2 * len(L) * (L.max_length + 3) - 1


def build_al(lengths, eps: int) -> Alpha:
    """Alpha labeling of [L | eps - sum(L)] for eps = chain size exactly or
    eps >= 2(|L|+1)(max(L)+3) - 1; the extended form guarantees path
    differences covering I(2|L|(max(L)+3), eps)."""
    L = lengths if isinstance(lengths, CycleMultiset) else CycleMultiset.from_lengths(lengths)
    eps0 = chain_size(L)
    if eps == eps0:
        return al_chain(L)
    floor = 2 * (len(L) + 1) * (L.max_length + 3) - 1
    if eps < floor:
        raise Refused(f"need eps = {eps0} or eps >= {floor}, got {eps}")
    return extend_low(al_chain(L), eps - eps0)


def build_al_for_path(lengths, m: int) -> Alpha:
    """Path-length entry point: an alpha labeling of [L | m] exists for every
    m >= 2(|L|+1)(max(L)+1) + 3."""
    L = lengths if isinstance(lengths, CycleMultiset) else CycleMultiset.from_lengths(lengths)
    floor = 2 * (len(L) + 1) * (L.max_length + 1) + 3
    if m < floor:
        raise Refused(f"need m >= {floor}, got {m}")
    return build_al(L, m + L.size)


def _build_al_relaxed(L: CycleMultiset, eps: int) -> Alpha:
    """Solver lane: accept any eps the chain-plus-extension genuinely reaches
    (mu >= 2x0+1 with mu != 4x0+1), not just the published safe bound."""
    eps0 = chain_size(L)
    if eps == eps0:
        return al_chain(L)
    x0 = L.max_length // 2 + 1
    mu = eps - eps0
    if mu < 2 * x0 + 1 or mu == 4 * x0 + 1:
        raise Refused(f"size {eps} unreachable from the chain (eps0={eps0}, mu={mu})")
    return extend_low(al_chain(L), mu)
