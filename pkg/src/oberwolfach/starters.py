"""2-starters over Z_2n and the doubling constructions that produce them.

A 2-starter is a 2-regular graph on Z_2n u {inf} whose differences cover
every nonzero residue and which is fixed by translation by n.  Doubling a
graceful labeling of size n-1 (a copy, its translate by n, and three linking
edges through infinity) yields one; a 2-cycle in the labeling instead
contributes a 4-cycle through a rerouted infinity cycle; and designated
cycles can be merged with their translates into doubled-length cycles by an
edge swap.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    INF,
    CycleMultiset,
    LabeledGraph,
    Refused,
    _Infinity,
    cycle_type,
    cycles_from_edges,
    difference_list,
)
from .labelings import Graceful, Report, Violation


@dataclass(frozen=True)
class Starter:
    """A 2-starter: graph on Z_2n u {inf}, translation-invariant by n."""

    graph: LabeledGraph
    n: int

    def check(self) -> Report:
        return verify_starter(self.graph, self.n)

    def infinity_cycle(self) -> tuple:
        for c in self.graph.cycles:
            if any(isinstance(v, _Infinity) for v in c):
                return c
        raise ValueError("no cycle through infinity")

    def cycle_type(self) -> CycleMultiset:
        return cycle_type(self.graph)


def _edge_key(u, v, n: int):
    a = u if isinstance(u, _Infinity) else u % (2 * n)
    b = v if isinstance(v, _Infinity) else v % (2 * n)
    ka = (1, a.name) if isinstance(a, _Infinity) else (0, a)
    kb = (1, b.name) if isinstance(b, _Infinity) else (0, b)
    return (ka, kb) if ka <= kb else (kb, ka)


def _edge_multiset(g: LabeledGraph, n: int):
    from collections import Counter

    return Counter(_edge_key(u, v, n) for u, v in g.edges())


def verify_starter(g: LabeledGraph, n: int) -> Report:
    """Check the 2-starter conditions plus the odd-infinity-cycle consequence."""
    if g.modulus != 2 * n:
        return Report.failure("vertex-set", f"modulus {g.modulus}, expected {2 * n}")
    if g.path is not None:
        return Report.failure("vertex-set", "a starter is 2-regular: no path component")
    want = set(range(2 * n))
    got_inf = [v for v in g.vertices() if isinstance(v, _Infinity)]
    got_fin = {v for v in g.vertices() if not isinstance(v, _Infinity)}
    if got_fin != want or got_inf != [INF]:
        return Report.failure("vertex-set", "vertex set is not Z_2n plus one infinity")
    diffs = set(difference_list(g))
    missing = want.difference(diffs, {0})
    if missing:
        return Report.failure("difference-coverage", min(missing))
    edges = _edge_multiset(g, n)
    shifted = _edge_multiset(
        LabeledGraph(
            cycles=tuple(
                tuple(v if isinstance(v, _Infinity) else v + n for v in c) for c in g.cycles
            ),
            modulus=2 * n,
        ),
        n,
    )
    if edges != shifted:
        bad = next(iter(set(edges.items()) ^ set(shifted.items())))
        return Report.failure("translation-invariance", bad[0])
    through_inf = [c for c in g.cycles if any(isinstance(v, _Infinity) for v in c)]
    if len(through_inf) != 1 or len(through_inf[0]) % 2 == 0:
        return Report.failure("infinity-cycle", [len(c) for c in through_inf])
    return Report(True)


def double_simple(lab: Graceful) -> Starter:
    """Double a graceful labeling of [L | m] (no 2-cycle, lengths > 2) into a
    [2m+3, L, L]-starter over Z_2n, n = eps + 1."""
    rep = lab.check()
    if not rep.ok:
        raise Refused(f"input is not a graceful labeling: {rep.to_json()}")
    if lab.lo != 0:
        raise Refused("normalize the labeling to I(0, eps) first")
    if any(len(c) <= 2 for c in lab.graph.cycles):
        raise Refused("doubling a 2-cycle needs the rerouted construction")
    n = lab.eps + 1
    path = lab.oriented_path()
    c_inf = (INF,) + path + tuple(v + n for v in reversed(path))
    cycles = [tuple(c) for c in lab.graph.cycles]
    cycles += [tuple(v + n for v in c) for c in lab.graph.cycles]
    g = LabeledGraph(cycles=(c_inf,) + tuple(cycles), modulus=2 * n)
    return Starter(g, n)


def double_quad(lab: Graceful) -> Starter:
    """Double a graceful labeling of [L, 2 | m] whose path realizes the top
    difference eps into a [2m+7, 4, L, L]-starter over Z_2n, n = eps + 3."""
    rep = lab.check()
    if not rep.ok:
        raise Refused(f"input is not a graceful labeling: {rep.to_json()}")
    if lab.lo != 0:
        raise Refused("normalize the labeling to I(0, eps) first")
    eps = lab.eps
    n = eps + 3
    two = [c for c in lab.graph.cycles if len(c) == 2]
    if len(two) != 1:
        raise Refused("need exactly one 2-cycle")
    u = min(two[0])
    path = lab.oriented_path()
    k = None
    for j in range(len(path) - 1):
        if {path[j], path[j + 1]} == {0, eps}:
            k = j
            break
    if k is None:
        raise Refused(f"the path must contain the difference {eps} (edge {{0, {eps}}})")
    if path[k] != 0:
        path = path[::-1]
        k = len(path) - 2 - k
    q = path[: k + 1] + (n - 2, -1) + tuple(v + n for v in path[k + 1 :])
    c_inf = (INF,) + q + tuple(v + n for v in reversed(q))
    quad = (u, u + 3, u + n, u + 3 + n)
    rest = [tuple(c) for c in lab.graph.cycles if len(c) > 2]
    cycles = rest + [tuple(v + n for v in c) for c in rest]
    g = LabeledGraph(cycles=(c_inf, quad) + tuple(cycles), modulus=2 * n)
    return Starter(g, n)


def halve_pairs(lab: Graceful, merge) -> Starter:
    """Double, then merge each designated cycle with its translate.

    `merge` lists cycle lengths of the labeling to merge; each designated
    k-cycle C needs a difference d in DC with d + n realized by the infinity
    cycle (guaranteed when d + n is a path difference).  The pair {C, C+n}
    becomes one 2k-cycle via a difference-preserving edge swap.
    """
    want = merge if isinstance(merge, CycleMultiset) else CycleMultiset.from_lengths(merge)
    if want.count(2):
        raise Refused("cannot merge 2-cycles")
    designated: list[tuple[int, ...]] = []
    pool = sorted((c for c in lab.graph.cycles if len(c) > 2), key=lambda c: (len(c), c))
    for k in want.lengths:
        pick = next((c for c in pool if len(c) == k), None)
        if pick is None:
            raise Refused(f"no unused {k}-cycle to merge")
        pool.remove(pick)
        designated.append(pick)
    has_two = any(len(c) == 2 for c in lab.graph.cycles)
    starter = double_quad(lab) if has_two else double_simple(lab)
    n = starter.n
    mod = 2 * n
    for cyc in designated:
        c_inf = starter.infinity_cycle()
        inf_edges = [
            (c_inf[i], c_inf[(i + 1) % len(c_inf)])
            for i in range(len(c_inf))
            if not isinstance(c_inf[i], _Infinity)
            and not isinstance(c_inf[(i + 1) % len(c_inf)], _Infinity)
        ]
        best = None
        for i in range(len(cyc)):
            a, b = cyc[i] % mod, cyc[(i + 1) % len(cyc)] % mod
            for ori_a, ori_b in ((a, b), (b, a)):
                d = (ori_b - ori_a) % mod
                for p, q in inf_edges:
                    for u, w in ((p, q), (q, p)):
                        if (w - u) % mod == (d + n) % mod:
                            cand = (u, w, ori_a, ori_b)
                            if best is None or cand < best:
                                best = cand
        if best is None:
            raise Refused(
                f"no difference of cycle {cyc} reappears shifted by n in the "
                f"infinity cycle; path differences are {sorted(lab.path_diffs())}"
            )
        u, w, a, b = best
        old = {
            _edge_key(a, b, n),
            _edge_key(a + n, b + n, n),
            _edge_key(u, w, n),
            _edge_key(u + n, w + n, n),
        }
        if len(old) != 4:
            raise Refused("degenerate swap")
        edges = list(starter.graph.edges())
        kept = [e for e in edges if _edge_key(*e, n) not in old]
        removed = [e for e in edges if _edge_key(*e, n) in old]
        if len(removed) != 4:
            raise Refused("swap edges not present exactly once")
        new_edges = kept + [(a, (b + n) % mod), ((a + n) % mod, b), (u, (w + n) % mod), ((u + n) % mod, w)]
        cycles = cycles_from_edges(new_edges)
        starter = Starter(LabeledGraph(cycles=cycles, modulus=mod), n)
    return starter


def starter_to_json(s: Starter) -> dict:
    from .graphs import graph_to_json

    out = graph_to_json(s.graph)
    out["n"] = s.n
    return out


def starter_from_json(data: dict) -> Starter:
    from .graphs import graph_from_json

    core = {k: v for k, v in data.items() if k != "n"}
    return Starter(graph_from_json(core), int(data["n"]))
