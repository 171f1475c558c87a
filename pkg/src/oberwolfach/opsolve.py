"""Developing starters into explicit 2-factorizations, the packing/covering
variants, the 2-fold construction, composition over lambda, the published
solvability thresholds, and end-to-end solving with verification.

A solution is a list of 2-factors whose edge multisets partition lambda K_v
(minus or plus a perfect matching when sigma is -1 or +1).  verify_solution
checks that definition literally; solve never returns unverified output.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .alpha import chain_size
from .graceful import _build_gl_relaxed, general_bounds, odd_eps1
from .graphs import (
    INF,
    INF2,
    CycleMultiset,
    LabeledGraph,
    Refused,
    SingleFlip,
    _Infinity,
    classify_single_flip,
    cycle_type,
    graph_from_json,
    graph_to_json,
)
from .labelings import Report, Violation
from .paths import zigzag_path
from .starters import Starter, halve_pairs


@dataclass(frozen=True)
class OPInstance:
    lam: int
    sigma: int
    factor: CycleMultiset

    def __post_init__(self):
        if self.lam < 1:
            raise Refused("lambda must be >= 1")
        if self.sigma not in (-1, 0, 1):
            raise Refused("sigma must be -1, 0 or 1")
        if (self.lam * (self.v - 1) - self.sigma) % 2 != 0:
            raise Refused(
                f"sigma={self.sigma} has the wrong parity for lambda={self.lam}, v={self.v}"
            )

    @property
    def v(self) -> int:
        return self.factor.size


@dataclass(frozen=True)
class Solution:
    instance: OPInstance
    factors: tuple[LabeledGraph, ...]
    one_factor: tuple[tuple, ...] | None = None

    def check(self) -> Report:
        return verify_solution(self)


def _vkey(v):
    return (1, v.name) if isinstance(v, _Infinity) else (0, v)


def _ekey(u, v, mod):
    a = u if isinstance(u, _Infinity) or not mod else u % mod
    b = v if isinstance(v, _Infinity) or not mod else v % mod
    ka, kb = _vkey(a), _vkey(b)
    return (ka, kb) if ka <= kb else (kb, ka)


def verify_solution(sol: Solution) -> Report:
    """Check factors, edge partition, and the one-factor, per the definitions."""
    inst = sol.instance
    if not sol.factors:
        return Report.failure("factors", "no factors")
    mod = sol.factors[0].modulus or 0
    vset = frozenset(_vkey(v) for v in sol.factors[0].vertices())
    if len(vset) != inst.v:
        return Report.failure("factors", f"order {len(vset)}, expected {inst.v}")
    for idx, f in enumerate(sol.factors):
        if f.path is not None:
            return Report.failure("factors", f"factor {idx} has a path component")
        if frozenset(_vkey(v) for v in f.vertices()) != vset:
            return Report.failure("factors", f"factor {idx} is not spanning")
        if cycle_type(f) != inst.factor:
            return Report.failure("factors", f"factor {idx} has type {cycle_type(f)}")
    seen = Counter()
    for f in sol.factors:
        for u, v in f.edges():
            seen[_ekey(u, v, mod)] += 1
    labels = sorted(vset)
    want = Counter()
    for i, a in enumerate(labels):
        for b in labels[i + 1 :]:
            want[(a, b)] = inst.lam
    if inst.sigma == 0:
        if sol.one_factor is not None:
            return Report.failure("one-factor", "unexpected one-factor for sigma=0")
    else:
        if sol.one_factor is None:
            return Report.failure("one-factor", "missing one-factor")
        touched = Counter()
        for u, v in sol.one_factor:
            touched[_vkey(u)] += 1
            touched[_vkey(v)] += 1
            want[_ekey(u, v, mod)] += inst.sigma
        if set(touched) != set(vset) or any(c != 1 for c in touched.values()):
            return Report.failure("one-factor", "not a perfect matching")
    if seen != want:
        for key in sorted(set(seen) | set(want)):
            if seen[key] != want[key]:
                return Report.failure(
                    "edge-partition", {"pair": key, "got": seen[key], "want": want[key]}
                )
    return Report(True)


def develop(starter: Starter) -> Solution:
    """The n translates of a 2-starter solve OP(F) on K_{2n+1}."""
    rep = starter.check()
    if not rep.ok:
        raise Refused(f"invalid starter: {rep.to_json()}")
    n = starter.n
    factors = tuple(_shift(starter.graph, i, 2 * n) for i in range(n))
    inst = OPInstance(1, 0, cycle_type(starter.graph))
    return Solution(inst, factors)


def _shift(g: LabeledGraph, i: int, mod: int) -> LabeledGraph:
    return LabeledGraph(
        cycles=tuple(
            tuple(v if isinstance(v, _Infinity) else (v + i) % mod for v in c) for c in g.cycles
        ),
        modulus=mod,
    )


def _axis_edge(c_inf: tuple, n: int) -> int:
    """Index i such that the infinity-cycle edge (c[i], c[i+1]) has difference n."""
    for i in range(len(c_inf)):
        u, v = c_inf[i], c_inf[(i + 1) % len(c_inf)]
        if isinstance(u, _Infinity) or isinstance(v, _Infinity):
            continue
        if (u - v) % (2 * n) == n:
            return i
    raise Refused("infinity cycle has no axis edge")


def to_packing(starter: Starter) -> Solution:
    """Maximum packing: replace the axis edge {x1, x1+n} of the infinity cycle
    with the 2-path through a second infinity, then develop.  Solves
    OP-([l_inf + 1, rest]) on K_{2n+2} - I."""
    rep = starter.check()
    if not rep.ok:
        raise Refused(f"invalid starter: {rep.to_json()}")
    n = starter.n
    c_inf = starter.infinity_cycle()
    i = _axis_edge(c_inf, n)
    x1 = c_inf[i]
    widened = c_inf[: i + 1] + (INF2,) + c_inf[i + 1 :]
    cycles = tuple(widened if c == c_inf else c for c in starter.graph.cycles)
    base = LabeledGraph(cycles=cycles, modulus=2 * n)
    factors = tuple(_shift(base, k, 2 * n) for k in range(n))
    ftype = cycle_type(base)
    inst = OPInstance(1, -1, ftype)
    matching = tuple(((x1 + k) % (2 * n), (x1 + n + k) % (2 * n)) for k in range(n))
    return Solution(inst, factors, matching + ((INF, INF2),))


def to_covering(starter: Starter) -> Solution:
    """Minimum covering: remove infinity and join its neighbors, then develop.
    Solves OP+([l_inf - 1, rest]) on K_2n + I."""
    rep = starter.check()
    if not rep.ok:
        raise Refused(f"invalid starter: {rep.to_json()}")
    n = starter.n
    c_inf = starter.infinity_cycle()
    if len(c_inf) < 3:
        raise Refused("infinity cycle too short to contract")
    j = next(k for k, v in enumerate(c_inf) if isinstance(v, _Infinity))
    xh = c_inf[(j - 1) % len(c_inf)]
    shrunk = tuple(v for v in c_inf if not isinstance(v, _Infinity))
    cycles = tuple(shrunk if c == c_inf else c for c in starter.graph.cycles)
    base = LabeledGraph(cycles=cycles, modulus=2 * n)
    factors = tuple(_shift(base, k, 2 * n) for k in range(n))
    inst = OPInstance(1, 1, cycle_type(base))
    matching = tuple(((xh + k) % (2 * n), (xh + n + k) % (2 * n)) for k in range(n))
    return Solution(inst, factors, matching)


def twofold(g: LabeledGraph) -> Solution:
    """Close the path through infinity and develop over Z_n: a 1-rotational
    solution to OP(2, [m+2, cycles]) on 2 K_{n+1}.

    Needs V(g) = {0..n-1} and differences covering every nonzero residue of
    Z_n exactly twice; every graceful labeling without a 2-cycle qualifies.
    """
    if g.path is None or len(g.path) < 2:
        raise Refused("need a path component of length >= 1")
    n = g.order
    if g.vertex_set() != set(range(n)):
        raise Refused("vertex set must be exactly {0..n-1}")
    from .graphs import difference_list

    residues = Counter(d % n for d in difference_list(g))
    if residues != Counter({r: 2 for r in range(1, n)}):
        bad = next(r for r in range(1, n) if residues[r] != 2)
        raise Refused(f"differences modulo {n} miss residue {bad}")
    closed = LabeledGraph(cycles=g.cycles + (g.path + (INF,),), modulus=n)
    factors = tuple(_shift(closed, i, n) for i in range(n))
    inst = OPInstance(2, 0, cycle_type(closed))
    return Solution(inst, factors)


def compose_lambda(base: Solution | None, two: Solution | None, lam: int) -> Solution:
    """Concatenate factor lists into a solution for lambda-fold instances.

    Odd order (or even lambda): repeat; odd lambda on even order: one
    packing/covering solution plus (lambda-1)/2 twofold solutions.
    """
    if lam < 1:
        raise Refused("lambda must be >= 1")
    src = base or two
    if src is None:
        raise Refused("need at least one ingredient")
    factor = src.instance.factor
    v = src.instance.v
    if base is not None and lam == base.instance.lam:
        return base
    if base is not None and base.instance.sigma == 0:
        if base.instance.lam != 1:
            raise Refused("base must be a lambda=1 solution")
        inst = OPInstance(lam, 0, factor)
        return Solution(inst, base.factors * lam)
    if base is None:
        if two is None or two.instance.lam != 2 or lam % 2:
            raise Refused("even lambda needs an OP(2, F) ingredient")
        inst = OPInstance(lam, 0, factor)
        return Solution(inst, two.factors * (lam // 2))
    # sigma = +-1, lambda odd
    if lam % 2 == 0:
        raise Refused("a signed base composes only to odd lambda")
    if lam > 1:
        if two is None or two.instance.lam != 2 or two.instance.factor != factor or two.instance.v != v:
            raise Refused("need a matching OP(2, F) ingredient")
        extra = _relabel_onto(two, base).factors * ((lam - 1) // 2)
    else:
        extra = ()
    inst = OPInstance(lam, base.instance.sigma, factor)
    return Solution(inst, base.factors + extra, base.one_factor)


def _relabel_onto(src: Solution, dst: Solution) -> Solution:
    """Carry a solution onto the vertex labels of another of the same order."""
    src_labels = sorted(set(src.factors[0].vertices()), key=_vkey)
    dst_labels = sorted(set(dst.factors[0].vertices()), key=_vkey)
    table = {_vkey(a): b for a, b in zip(src_labels, dst_labels)}
    factors = tuple(
        LabeledGraph(
            cycles=tuple(tuple(table[_vkey(v)] for v in c) for c in f.cycles)
        )
        for f in src.factors
    )
    return Solution(src.instance, factors, src.one_factor)


# ---------------------------------------------------------------------------
# Published thresholds and the solver.

THEOREMS = ("mainOP", "mainOPeven", "mainOPodd", "mainOP2", "mainGL", "cor:main1")


def _flip_params(flip: SingleFlip):
    """The half-length/pair parameters (ell_i list, a, s) of a decomposition."""
    ells = sorted(flip.flips + flip.pairs)
    a = 1 if 2 in flip.flips else 0
    return ells, a, len(ells)


def thresholds(factor: CycleMultiset, which: str, h: int | None = None):
    """The printed lower bound on the large cycle (or path length) for the
    named theorem, plus the admissibility verdict when h is supplied.

    For the OP theorems, `factor` lists the cycles of F other than the large
    cycle h.  For mainGL and cor:main1 it lists the cycle lengths of the
    labeled graph and the bound is on the path length m.
    """
    if which == "mainGL":
        idx = [ell for ell in factor.lengths if ell % 2 == 0]
        odd = [ell for ell in factor.lengths if ell % 2 == 1]
        m0 = 2 * len(idx) * ((max(idx) + 3) if idx else 0) - 1
        m1 = 7 ** (len(odd) - 1) * (2 * max(odd) + 1) if odd else 0
        bound = 6 * max(1, m0) + 7 * max(3, m1) + 9
        return bound, (None if h is None else h >= bound)
    if which == "cor:main1":
        if not factor.all_even() or factor.count(2):
            raise Refused("cor:main1 needs even cycle lengths >= 4")
        bound = 2 * (len(factor) + 1) * (factor.max_length + 1) + 3
        return bound, (None if h is None else h >= bound)
    if which == "mainOP2":
        evens = [ell for ell in factor.lengths if ell % 2 == 0]
        odds = [ell for ell in factor.lengths if ell % 2 == 1]
        r, s = len(evens), len(odds)
        ell = max(evens) if evens else 0
        ellp = max(odds) if odds else 0
        if r and s:
            bound = 12 * r * (ell + 3) + 7**s * (2 * ellp + 1) - 6
        elif r:
            bound = 2 * (r + 1) * (ell + 1) + 5
        elif s:
            bound = 3 * 7 ** (s - 1) * (2 * ellp + 1)
        else:
            bound = 2  # a single cycle: 2 K_v always has the Walecki-type solution
        return bound, (None if h is None else h > bound)
    if which not in ("mainOP", "mainOPeven", "mainOPodd"):
        raise Refused(f"unknown theorem {which!r}")
    flip = _normalize_rest(factor)
    ells, a, s = _flip_params(flip)
    if which == "mainOPeven":
        if any(e % 2 for e in ells) or any(p % 2 for p in flip.pairs):
            raise Refused("mainOPeven needs all parameters even")
        ell = max(ells) if ells else 0
        bound = 4 * (2 * s - a) * (ell + 2) + 4 * a - 1
        return bound, (None if h is None else h >= bound)
    if which == "mainOPodd":
        if a or any(e % 2 == 0 for e in ells):
            raise Refused("mainOPodd needs all parameters odd")
        ell = max(ells) if ells else 0
        bound = 7 ** (s - 1) * (12 * ell + 6) if s else 0
        return bound, (None if h is None else h > bound)
    # mainOP general
    idx = [e for e in ells if e % 2 == 0 and e > 2]
    rest = [e for e in ells if e % 2 == 1]
    h0 = 2 * len(idx) * (max(idx) + 3) - 1 if idx else -1
    h1 = 7 ** (s - len(idx) - 1) * (2 * max(rest) + 1) if rest else 0
    bound = 16 * max(1, h0) + 20 * max(3, h1) + 29
    return bound, (None if h is None else h > bound)


def _normalize_rest(rest: CycleMultiset) -> SingleFlip:
    """Interpret a multiset of companion cycles as flips and pairs the way
    classify_single_flip would (repeated evens become pairs)."""
    counts = dict(rest.entries)
    flips = []
    pairs = []
    for ell in sorted(counts):
        meta = counts[ell]
        if ell % 2 == 1:
            if meta % 2:
                raise Refused(f"odd companion cycles must come in pairs, got {rest}")
            pairs.extend([ell] * (meta // 2))
        else:
            if meta % 2:
                flips.append(ell // 2)
                meta -= 1
            pairs.extend([ell] * (meta // 2))
    return SingleFlip(0, tuple(flips), tuple(pairs))


def sharpest_bound(rest: CycleMultiset) -> tuple[str, int]:
    """Least admissible odd infinity-cycle length over the applicable theorems."""
    flip = _normalize_rest(rest)
    ells, a, s = _flip_params(flip)
    candidates = []
    general, _ = thresholds(rest, "mainOP")
    candidates.append(("mainOP", _least_odd_above(general, strict=True)))
    if ells and all(e % 2 == 0 for e in ells):
        b, _ = thresholds(rest, "mainOPeven")
        candidates.append(("mainOPeven", _least_odd_above(b, strict=False)))
    if ells and all(e % 2 == 1 for e in ells):
        b, _ = thresholds(rest, "mainOPodd")
        candidates.append(("mainOPodd", _least_odd_above(b, strict=True)))
    if not ells:
        candidates.append(("mainOPeven", 3))
    name, least = min(candidates, key=lambda p: p[1])
    return name, least


def _least_odd_above(bound: int, strict: bool) -> int:
    h = bound + 1 if strict else bound
    h = max(h, 3)
    return h if h % 2 else h + 1


def _starter_for(h: int, rest: CycleMultiset) -> Starter:
    """Build an [h, rest]-starter: a graceful labeling of the halved graph,
    doubled and with the designated pairs merged."""
    flip = _normalize_rest(rest)
    a = 1 if 2 in flip.flips else 0
    merge = CycleMultiset.from_lengths([e for e in flip.flips if e != 2])
    base_lengths = CycleMultiset.from_lengths(merge.lengths + flip.pairs)
    m = (h - 4 * a - 3) // 2
    eps = base_lengths.size + 2 * a + m
    L0 = CycleMultiset.from_lengths([e for e in base_lengths.lengths if e % 2 == 0])
    L1 = CycleMultiset.from_lengths([e for e in base_lengths.lengths if e % 2 == 1])
    if not base_lengths and a == 0:
        lab = zigzag_path(m).as_gl()
    else:
        lab = _build_gl_relaxed(L0, L1, a, eps)
    return halve_pairs(lab, merge)


def solve(factor, sigma: int = 0, lam: int = 1) -> Solution:
    """Construct and verify a solution of OP^sigma(lambda, F).

    F must be a single-flip 2-regular graph whose large cycle clears the
    sharpest published threshold (lambda = 1), or clear the 2-fold route
    (lambda = 2); larger lambda composes those.  Out-of-reach instances are
    refused, never searched.
    """
    F = factor if isinstance(factor, CycleMultiset) else CycleMultiset.from_lengths(factor)
    if F.count(2):
        raise Refused("F must be simple (no 2-cycles)")
    inst = OPInstance(lam, sigma, F)  # validates the parity of sigma
    if lam == 1:
        sol = _solve_once(F, sigma)
    elif lam == 2:
        sol = _solve_twofold(F)
    else:
        if sigma == 0 and F.size % 2 == 1:
            sol = compose_lambda(_solve_once(F, 0), None, lam)
        elif lam % 2 == 0:
            sol = compose_lambda(None, _solve_twofold(F), lam)
        else:
            sol = compose_lambda(_solve_once(F, sigma), _solve_twofold(F), lam)
    rep = sol.check()
    if not rep.ok:
        raise RuntimeError(f"constructed solution failed verification: {rep.to_json()}")
    return sol


def _solve_once(F: CycleMultiset, sigma: int) -> Solution:
    flip = classify_single_flip(F)
    if flip is None:
        raise Refused(f"{F} is not a single-flip 2-regular graph")
    h = flip.reflected
    rest = F.without(h)
    ell_inf = h + sigma  # the infinity-cycle length of the starter
    name, least = sharpest_bound(rest)
    if ell_inf < least or ell_inf % 2 == 0:
        raise Refused(
            f"needs an infinity cycle of odd length >= {least} ({name}), got {ell_inf}"
        )
    starter = _starter_for(ell_inf, rest)
    if sigma == 0:
        return develop(starter)
    return to_packing(starter) if sigma == -1 else to_covering(starter)


def _solve_twofold(F: CycleMultiset) -> Solution:
    last = None
    for h in sorted(set(F.lengths), reverse=True):
        if h < 3:
            continue
        rest = F.without(h)
        L0 = CycleMultiset.from_lengths([e for e in rest.lengths if e % 2 == 0])
        L1 = CycleMultiset.from_lengths([e for e in rest.lengths if e % 2 == 1])
        eps = rest.size + (h - 2)
        try:
            if not rest:
                lab = zigzag_path(h - 2).as_gl()
            else:
                lab = _build_gl_relaxed(L0, L1, 0, eps)
            return twofold(lab.graph)
        except Refused as exc:
            last = exc
    bound, _ = thresholds(F.without(max(F.lengths)), "mainOP2")
    raise Refused(
        f"no cycle of {F} can serve as the opened cycle (mainOP2 wants a cycle > {bound}): {last}"
    )


# ---------------------------------------------------------------------------
# JSON


def solution_to_json(sol: Solution) -> dict:
    def lab(v):
        return v.name if isinstance(v, _Infinity) else v

    return {
        "lambda": sol.instance.lam,
        "sigma": sol.instance.sigma,
        "v": sol.instance.v,
        "F": list(sol.instance.factor.lengths),
        "factors": [[[lab(v) for v in c] for c in f.cycles] for f in sol.factors],
        "one_factor": (
            [[lab(u), lab(v)] for u, v in sol.one_factor] if sol.one_factor else None
        ),
    }


def solution_from_json(data: dict) -> Solution:
    def unlab(v):
        return INF if v == "inf" else INF2 if v == "inf2" else int(v)

    # factors live on Z_mod plus the infinities: recover the modulus
    v = int(data["v"])
    n_inf = len([x for c in data["factors"][0] for x in c if isinstance(x, str)])
    mod = v - n_inf
    factors = tuple(
        LabeledGraph(
            cycles=tuple(tuple(unlab(x) for x in c) for c in f), modulus=mod
        )
        for f in data["factors"]
    )
    one = (
        tuple((unlab(a), unlab(b)) for a, b in data["one_factor"])
        if data.get("one_factor")
        else None
    )
    inst = OPInstance(int(data["lambda"]), int(data["sigma"]), CycleMultiset.from_lengths(data["F"]))
    return Solution(inst, factors, one)
