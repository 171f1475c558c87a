"""Exhaustive backtracking search for graceful and alpha labelings.

Independent of the constructive machinery.  The search assigns the required
differences from largest to smallest; each step places one edge {v, v+d},
tracked as merges and closures of path fragments, so the scarcest
differences are branched on first.  Cycle closures are admitted only for
lengths still owed to the spec, and the leftover fragment must be the path.

Deterministic: differences descending, candidate edges in increasing label
order (with equal differences forced nondecreasing).  Every emitted labeling
is normalized to its canonical form, the lexicographically least vertex
sequence (cycles rotated/reflected to start at their minimum, path read from
its smaller end), and find_all results are sorted.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .graphs import GraphSpec, LabeledGraph, Refused
from .labelings import gl_difference_target

DEFAULT_LIMIT_ALL = 20
DEFAULT_LIMIT_FIRST = 40


@dataclass(frozen=True)
class SearchResult:
    labelings: tuple[LabeledGraph, ...]
    raw: int
    reduced: int
    exhaustive: bool

    @property
    def first(self) -> LabeledGraph | None:
        return self.labelings[0] if self.labelings else None


def _canonical_cycle(c: tuple[int, ...]) -> tuple[int, ...]:
    k = c.index(min(c))
    rot = c[k:] + c[:k]
    rev = (rot[0],) + rot[1:][::-1]
    return min(rot, rev)


def canonical_form(g: LabeledGraph) -> LabeledGraph:
    cycles = sorted((_canonical_cycle(c) for c in g.cycles), key=lambda c: (-len(c), c))
    path = g.path
    if path is not None and path[0] > path[-1]:
        path = path[::-1]
    return LabeledGraph(cycles=tuple(cycles), path=path, modulus=g.modulus)


def _complement(g: LabeledGraph, total: int) -> LabeledGraph:
    return LabeledGraph(
        cycles=tuple(tuple(total - v for v in c) for c in g.cycles),
        path=tuple(total - v for v in g.path) if g.path is not None else None,
    )


def _freeze(g: LabeledGraph):
    return (g.cycles, g.path)


class _State:
    """Degrees, fragment endpoints and the edge stack during the search."""

    def __init__(self, universe, end_caps, needed):
        self.degree = {v: 0 for v in universe}
        self.partner = {v: v for v in universe}
        self.fraglen = {v: 0 for v in universe}
        self.end_caps = end_caps  # labels whose degree must stay <= 1
        self.needed = needed  # Counter of cycle lengths still owed
        self.edges: list[tuple[int, int]] = []

    def cap(self, v) -> int:
        return 1 if v in self.end_caps else 2

    def can_add(self, v, u) -> bool:
        if self.degree[v] >= self.cap(v) or self.degree[u] >= self.cap(u):
            return False
        if self.partner[v] == u:  # would close the fragment into a cycle
            return self.needed[self.fraglen[v] + 1] > 0
        return True

    def add(self, v, u):
        """Apply edge {v, u}; returns an undo token."""
        self.edges.append((v, u))
        self.degree[v] += 1
        self.degree[u] += 1
        if self.partner[v] == u:
            length = self.fraglen[v] + 1
            self.needed[length] -= 1
            return ("close", v, u, length)
        pv, pu = self.partner[v], self.partner[u]
        token = ("merge", v, u, pv, pu, self.fraglen[v], self.fraglen[u])
        newlen = self.fraglen[v] + self.fraglen[u] + 1
        self.partner[pv] = pu
        self.partner[pu] = pv
        self.fraglen[pv] = newlen
        self.fraglen[pu] = newlen
        return token

    def undo(self, token):
        self.edges.pop()
        if token[0] == "close":
            _, v, u, length = token
            self.degree[v] -= 1
            self.degree[u] -= 1
            self.needed[length] += 1
            return
        _, v, u, pv, pu, lv, lu = token
        self.degree[v] -= 1
        self.degree[u] -= 1
        self.partner[pv] = v if pv != v else pv
        self.partner[v] = pv
        self.partner[pu] = u if pu != u else pu
        self.partner[u] = pu
        self.fraglen[pv] = lv
        self.fraglen[v] = lv
        self.fraglen[pu] = lu
        self.fraglen[u] = lu


def _assemble(edges, universe, m):
    """Split the placed edges into cycles and the path; None when malformed."""
    adj: dict[int, list[int]] = {v: [] for v in universe}
    for v, u in edges:
        adj[v].append(u)
        adj[u].append(v)
    deg1 = [v for v in universe if len(adj[v]) == 1]
    deg0 = [v for v in universe if not adj[v]]
    if m == 0:
        if deg1 or len(deg0) != 1:
            return None
        path = (deg0[0],)
    else:
        if len(deg1) != 2 or deg0:
            return None
        start = min(deg1)
        seq = [start]
        prev = None
        cur = start
        while True:
            nxt = None
            for w in adj[cur]:
                if w != prev:
                    nxt = w
                    break
            if nxt is None:
                break
            seq.append(nxt)
            prev, cur = cur, nxt
            if len(adj[cur]) == 1:
                break
        if len(seq) != m + 1:
            return None
        path = tuple(seq)
        for v in path:
            adj[v] = []
    used = set(path)
    cycles = []
    for s in universe:
        if s in used or not adj[s]:
            continue
        seq = [s]
        used.add(s)
        if len(adj[s]) == 2 and adj[s][0] == adj[s][1]:
            cycles.append((s, adj[s][0]))  # doubled edge
            used.add(adj[s][0])
            continue
        prev = None
        cur = s
        while True:
            nxt = None
            for w in adj[cur]:
                if w != prev and not (w == s and len(seq) < 3):
                    nxt = w
                    break
            if nxt is None or nxt == s:
                break
            seq.append(nxt)
            used.add(nxt)
            prev, cur = cur, nxt
        cycles.append(tuple(seq))
    return tuple(cycles), path


def search(
    spec: GraphSpec,
    mode: str = "GL",
    *,
    ends: tuple[int, int] | None = None,
    parts: tuple[tuple[int, int], tuple[int, int]] | None = None,
    pinned_path: tuple[int, ...] | None = None,
    find_all: bool = False,
    limit: int | None = None,
) -> SearchResult:
    """Complete search for labelings of the spec under the given constraints.

    mode "GL": vertex set I(0, eps); mode "AL": vertex set J1 u J2 (standard
    parts when not given) with part-crossing edges and band differences.
    `ends` pins the path end pair, `pinned_path` the whole path sequence.
    """
    if mode not in ("GL", "AL"):
        raise Refused(f"unknown mode {mode!r}")
    eps = spec.size
    cap = limit
    if cap is None:
        if find_all:
            cap = DEFAULT_LIMIT_ALL
        else:
            cap = DEFAULT_LIMIT_FIRST if (ends or pinned_path or parts) else DEFAULT_LIMIT_ALL
    if eps > cap:
        raise Refused(f"size {eps} exceeds the search limit {cap}")

    if mode == "AL":
        if spec.cycles.count(2) or not spec.cycles.all_even():
            return SearchResult((), 0, 0, True)
        if parts is None:
            parts = ((0, (eps - 1) // 2), ((eps + 1) // 2, eps))
        (w1, z1), (w2, z2) = parts
        if z1 >= w2:
            raise Refused("overlapping parts")
        universe = list(range(w1, z1 + 1)) + list(range(w2, z2 + 1))
        lowpart = set(range(w1, z1 + 1))
        budget = Counter(range(w2 - z1, z2 - w1 + 1))
        total = w1 + z2  # complement v -> total - v swaps the parts
    else:
        universe = list(range(0, eps + 1))
        lowpart = None
        budget = gl_difference_target(spec)
        total = eps

    m = spec.path_len
    uset = set(universe)

    if pinned_path is None and ends is not None and m == 1:
        pinned_path = (min(ends), max(ends))

    end_caps = set()
    if ends is not None:
        if m == 0 and len(set(ends)) != 1:
            return SearchResult((), 0, 0, True)
        end_caps = set(ends)

    state = _State(universe, end_caps, Counter(spec.cycles.lengths))

    def crosses(a, b):
        return lowpart is None or (a in lowpart) != (b in lowpart)

    if pinned_path is not None:
        if len(pinned_path) != m + 1:
            raise Refused("pinned path has the wrong length")
        if ends is not None and {pinned_path[0], pinned_path[-1]} != set(ends):
            return SearchResult((), 0, 0, True)
        if len(set(pinned_path)) != len(pinned_path) or any(v not in uset for v in pinned_path):
            return SearchResult((), 0, 0, True)
        end_caps.update((pinned_path[0], pinned_path[-1]))
        for a, b in zip(pinned_path, pinned_path[1:]):
            d = abs(a - b)
            if budget[d] <= 0 or not crosses(a, b) or not state.can_add(a, b):
                return SearchResult((), 0, 0, True)
            budget[d] -= 1
            state.add(a, b)
        # interior pinned vertices are saturated already via degree 2

    diffs = []
    for d in sorted(budget, reverse=True):
        diffs.extend([d] * budget[d])

    found: list[LabeledGraph] = []
    want_one = not find_all

    def finalize():
        built = _assemble(state.edges, universe, m)
        if built is None:
            return
        cycles, path = built
        if ends is not None and {path[0], path[-1]} != set(ends):
            return
        found.append(canonical_form(LabeledGraph(cycles=cycles, path=path)))

    def place(k, prev_edge):
        if want_one and found:
            return
        if k == len(diffs):
            finalize()
            return
        d = diffs[k]
        floor = prev_edge if (k > 0 and diffs[k - 1] == d) else None
        for v in universe:
            u = v + d
            if u not in uset:
                continue
            if floor is not None and (v, u) < floor:
                continue
            if not crosses(v, u) or not state.can_add(v, u):
                continue
            token = state.add(v, u)
            place(k + 1, (v, u))
            state.undo(token)
            if want_one and found:
                return

    place(0, None)

    found.sort(key=_freeze)
    raw = len(found)
    orbits = set()
    for g in found:
        key = _freeze(g)
        ckey = _freeze(canonical_form(_complement(g, total)))
        orbits.add(min(key, ckey))
    return SearchResult(tuple(found), raw, len(orbits), True)
