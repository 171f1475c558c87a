"""Graceful and alpha labelings of cycles-plus-one-path graphs.

A graceful labeling of a size-eps graph places its vertices on an integer
interval J of eps+1 values so that the edge differences realize +-1..eps
exactly (with the variant +-{1, 3, 3} u +-{4..eps} when the graph carries one
2-cycle).  An alpha labeling additionally splits the vertices into two
interval parts J1 < J2, every edge crossing parts, with differences forming
the contiguous band +-(w2-z1 .. z2-w1).

Verifiers return structured reports (first violated clause plus a witness)
rather than booleans, so callers and tests can assert the reason.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .graphs import (
    GraphSpec,
    LabeledGraph,
    Refused,
    affine_map,
    difference_list,
    path_difference_list,
)


@dataclass(frozen=True)
class GLParams:
    """Parameter set (J, x, y): vertex interval and the two path ends."""

    j: tuple[int, int]
    x: int
    y: int


@dataclass(frozen=True)
class ALParams:
    """Parameter set (J1, J2, x, y): the two part intervals and path ends."""

    j1: tuple[int, int]
    j2: tuple[int, int]
    x: int
    y: int

    @property
    def span(self) -> tuple[int, int]:
        """The difference band (w2 - z1, z2 - w1)."""
        return self.j2[0] - self.j1[1], self.j2[1] - self.j1[0]


@dataclass(frozen=True)
class Violation:
    clause: str
    witness: object

    def to_json(self) -> dict:
        return {"clause": self.clause, "witness": self.witness}


@dataclass(frozen=True)
class Report:
    ok: bool
    violations: tuple[Violation, ...] = ()

    @classmethod
    def failure(cls, clause: str, witness) -> "Report":
        return cls(False, (Violation(clause, witness),))

    def to_json(self) -> dict:
        return {"pass": self.ok, "violations": [v.to_json() for v in self.violations]}


_PASS = Report(True)


def _interval(lo: int, hi: int) -> set[int]:
    return set(range(lo, hi + 1))


def gl_difference_target(spec: GraphSpec) -> Counter:
    """Expected |difference| multiset for a graceful labeling of the spec."""
    eps = spec.size
    if spec.has_two_cycle():
        target = Counter({1: 1, 3: 2})
        target.update(range(4, eps + 1))
    else:
        target = Counter(range(1, eps + 1))
    return target


def _shape_check(g: LabeledGraph, spec: GraphSpec) -> Report | None:
    if g.modulus is not None:
        return Report.failure("shape", "graph is Z_n-labeled, expected integer labels")
    if any(not isinstance(v, int) for v in g.vertices()):
        return Report.failure("shape", "infinity vertex not allowed in a labeling")
    if g.path is None:
        return Report.failure("shape", "missing path component (use a 1-vertex path for m=0)")
    got = g.spec()
    if got != spec:
        return Report.failure("shape", f"graph is {got}, spec says {spec}")
    return None


def verify_gl(g: LabeledGraph, spec: GraphSpec, p: GLParams) -> Report:
    """Check the three graceful-labeling clauses; name the first violated one."""
    bad = _shape_check(g, spec)
    if bad:
        return bad
    lo, hi = p.j
    if hi - lo != spec.size:
        return Report.failure("vertex-set", f"interval {p.j} has length {hi - lo}, expected {spec.size}")
    vset = g.vertex_set()
    expected = _interval(lo, hi)
    if vset != expected:
        off = sorted(vset.symmetric_difference(expected))
        return Report.failure("vertex-set", off[0])
    ends = {g.path[0], g.path[-1]}
    if ends != {p.x, p.y}:
        return Report.failure("path-ends", sorted(ends))
    seen = Counter(abs(d) for d in difference_list(g) if d > 0)
    target = gl_difference_target(spec)
    if seen != target:
        for d in sorted(set(seen) | set(target)):
            if seen[d] != target[d]:
                return Report.failure("differences", d)
    return _PASS


def verify_al(g: LabeledGraph, spec: GraphSpec, p: ALParams) -> Report:
    """Check the three alpha-labeling clauses; name the first violated one."""
    bad = _shape_check(g, spec)
    if bad:
        return bad
    (w1, z1), (w2, z2) = p.j1, p.j2
    if not (z1 < w2 and abs((z1 - w1) - (z2 - w2)) <= 1):
        return Report.failure("parts", f"invalid part intervals {p.j1}, {p.j2}")
    if (z1 - w1 + 1) + (z2 - w2 + 1) - 1 != spec.size:
        return Report.failure("parts", "part sizes do not match the spec size")
    part1, part2 = _interval(w1, z1), _interval(w2, z2)
    vset = g.vertex_set()
    if vset != part1 | part2:
        off = sorted(vset.symmetric_difference(part1 | part2))
        return Report.failure("parts", off[0])
    for u, v in g.edges():
        if (u in part1) == (v in part1):
            return Report.failure("parts", (u, v))
    ends = {g.path[0], g.path[-1]}
    if ends != {p.x, p.y}:
        return Report.failure("path-ends", sorted(ends))
    seen = Counter(abs(d) for d in difference_list(g) if d > 0)
    target = Counter(range(w2 - z1, z2 - w1 + 1))
    if seen != target:
        for d in sorted(set(seen) | set(target)):
            if seen[d] != target[d]:
                return Report.failure("differences", d)
    return _PASS


# ---------------------------------------------------------------------------
# Certified labelings: a graph bundled with its parameters.


@dataclass(frozen=True)
class Graceful:
    graph: LabeledGraph
    params: GLParams

    @property
    def eps(self) -> int:
        return self.graph.size

    @property
    def x(self) -> int:
        return self.params.x

    @property
    def y(self) -> int:
        return self.params.y

    @property
    def lo(self) -> int:
        return self.params.j[0]

    def spec(self) -> GraphSpec:
        return self.graph.spec()

    def check(self) -> Report:
        return verify_gl(self.graph, self.spec(), self.params)

    def path_diffs(self) -> set[int]:
        return {abs(d) for d in path_difference_list(self.graph)}

    def oriented_path(self) -> tuple[int, ...]:
        """The path sequence read from the designated end x."""
        path = self.graph.path
        return path if path[0] == self.x else path[::-1]


@dataclass(frozen=True)
class Alpha:
    graph: LabeledGraph
    params: ALParams

    @property
    def eps(self) -> int:
        return self.graph.size

    @property
    def x(self) -> int:
        return self.params.x

    @property
    def y(self) -> int:
        return self.params.y

    def spec(self) -> GraphSpec:
        return self.graph.spec()

    def check(self) -> Report:
        return verify_al(self.graph, self.spec(), self.params)

    def path_diffs(self) -> set[int]:
        return {abs(d) for d in path_difference_list(self.graph)}

    def oriented_path(self) -> tuple[int, ...]:
        path = self.graph.path
        return path if path[0] == self.x else path[::-1]

    def is_consecutive(self) -> bool:
        """Consecutive parts make the alpha labeling also graceful."""
        return self.params.j2[0] == self.params.j1[1] + 1

    def as_gl(self) -> Graceful:
        if not self.is_consecutive():
            raise Refused("parts are not consecutive intervals; not a graceful labeling")
        return Graceful(self.graph, GLParams((self.params.j1[0], self.params.j2[1]), self.x, self.y))

    def standard(self) -> bool:
        """Parts are I(0, floor((eps-1)/2)) and I(floor((eps+1)/2), eps)."""
        eps = self.eps
        return self.params.j1 == (0, (eps - 1) // 2) and self.params.j2 == ((eps + 1) // 2, eps)


Labeling = Graceful | Alpha


# ---------------------------------------------------------------------------
# Elementary transforms.


def translate_labeling(lab: Labeling, z: int) -> Labeling:
    g = affine_map(lab.graph, 1, z)
    if isinstance(lab, Graceful):
        (lo, hi) = lab.params.j
        return Graceful(g, GLParams((lo + z, hi + z), lab.x + z, lab.y + z))
    (w1, z1), (w2, z2) = lab.params.j1, lab.params.j2
    return Alpha(g, ALParams((w1 + z, z1 + z), (w2 + z, z2 + z), lab.x + z, lab.y + z))


def bipartite_shift(al: Alpha, a1: int, a2: int) -> Alpha:
    """The part-wise translate: J1 + a1 and J2 + a2.

    Requires the shifted parts to stay separated: a1 < a2 + w2 - z1 or
    a1 > a2 + z2 - w1.  When the shift inverts the order of the parts the
    result is renormalized so the lower interval comes first.
    """
    (w1, z1), (w2, z2) = al.params.j1, al.params.j2
    if not (a1 < a2 + w2 - z1 or a1 > a2 + z2 - w1):
        raise Refused(f"shift ({a1}, {a2}) does not keep the parts separated")
    part1 = set(range(w1, z1 + 1))
    f = lambda v: v + a1 if v in part1 else v + a2
    g = LabeledGraph(
        cycles=tuple(tuple(f(v) for v in c) for c in al.graph.cycles),
        path=tuple(f(v) for v in al.graph.path),
    )
    j1 = (w1 + a1, z1 + a1)
    j2 = (w2 + a2, z2 + a2)
    if j1[0] > j2[0]:
        j1, j2 = j2, j1
    return Alpha(g, ALParams(j1, j2, f(al.params.x), f(al.params.y)))


def normalize_al(al: Alpha) -> Alpha:
    """Shift so J1 starts at 0 and the parts become consecutive."""
    (w1, z1), (w2, _) = al.params.j1, al.params.j2
    return bipartite_shift(al, -w1, z1 - w1 - w2 + 1)


def reflect(lab: Labeling, eps: int | None = None) -> Labeling:
    """The map -G + eps.  Requires all labels inside I(0, eps)."""
    if eps is None:
        eps = lab.eps
    if any(v < 0 or v > eps for v in lab.graph.vertices()):
        raise Refused(f"labels outside I(0, {eps})")
    g = affine_map(lab.graph, -1, eps)
    if isinstance(lab, Graceful):
        lo, hi = lab.params.j
        return Graceful(g, GLParams((eps - hi, eps - lo), eps - lab.y, eps - lab.x))
    (w1, z1), (w2, z2) = lab.params.j1, lab.params.j2
    return Alpha(
        g, ALParams((eps - z2, eps - w2), (eps - z1, eps - w1), eps - lab.y, eps - lab.x)
    )


def fold(al: Alpha, n: int) -> Alpha:
    """Apply the interval-halving permutation f_n (n odd) to a standard alpha
    labeling of size n: i -> (n-1)/2 - i on the low part, (3n+1)/2 - i on the
    high part.  An involution; differences map d -> n+1-d.
    """
    if n % 2 == 0:
        raise Refused("fold needs odd n")
    if al.eps != n or not al.standard():
        raise Refused(f"fold needs a standard alpha labeling of size {n}")
    half = (n - 1) // 2

    def f(v: int) -> int:
        return half - v if v <= half else (3 * n + 1) // 2 - v

    g = LabeledGraph(
        cycles=tuple(tuple(f(v) for v in c) for c in al.graph.cycles),
        path=tuple(f(v) for v in al.graph.path),
    )
    return Alpha(g, ALParams(al.params.j1, al.params.j2, f(al.params.x), f(al.params.y)))


def necessary_conditions(spec: GraphSpec) -> tuple[Violation, ...]:
    """Known obstructions to gracefulness; an empty result proves nothing.

    Rosa's parity condition applies to 2-regular graphs (path length 0).  The
    Kotzig-style size bound |E| > w(w+2), w the number of odd cycles, is
    checked only for positive path length (its derivation assumes a genuine
    path component) and is advisory.
    """
    out = []
    if spec.path_len == 0:
        total = spec.cycles.size
        if total % 4 in (1, 2):
            out.append(Violation("rosa", f"size {total} = {total % 4} (mod 4)"))
    else:
        w = sum(m for ell, m in spec.cycles.entries if ell % 2 == 1)
        if w > 0 and spec.size <= w * (w + 2):
            out.append(Violation("kotzig", f"size {spec.size} <= {w}*({w}+2)"))
    return tuple(out)
