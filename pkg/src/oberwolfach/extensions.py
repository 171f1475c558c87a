"""Path-extension combinators for graceful and alpha labelings.

Each operation lengthens the path of a labeling (or joins two labelings) and
is exact about the resulting end vertices and the new path differences:

  extend_low(g, mu):  needs mu >= 2x+1, mu != 4x+1; splices an alpha-labeled
      (mu-1)-path below 0 and above eps, then recenters.  New ends
      (x, y + mu/2) for even mu, (eps + mu - x, y + (mu-1)/2) for odd mu.
  extend_high(g, mu): the reflection-conjugate; needs mu >= 2(eps-y)+1,
      mu != 4(eps-y)+1.
  extend_even(g, mu): alpha labelings of odd size only; even mu > eps - 2x;
      the fold-conjugate of extend_low.  New ends (x + mu/2, y + mu).
  join_al_gl(g0, g1, mu): glues an odd-size alpha labeling to a graceful
      labeling into one graceful labeling of the union, for mu >= B.

All require the designated ends to satisfy x < y (reflect first otherwise)
and a vertex set normalized to start at 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import LabeledGraph, Refused
from .labelings import (
    Alpha,
    ALParams,
    Graceful,
    GLParams,
    Labeling,
    bipartite_shift,
    fold,
    translate_labeling,
)
from .paths import path_al


def _require_extendable(lab: Labeling) -> None:
    if lab.x >= lab.y:
        raise Refused(f"need designated ends x < y, got ({lab.x}, {lab.y})")
    if isinstance(lab, Graceful):
        if lab.params.j[0] != 0:
            raise Refused("normalize the vertex interval to start at 0 first")
    else:
        if lab.params.j1[0] != 0 or not lab.is_consecutive():
            raise Refused("alpha labeling must have normalized consecutive parts")
        if lab.x > lab.params.j1[1]:
            raise Refused("designated end x must lie in the low part")


def extend_low(lab: Labeling, mu: int) -> Labeling:
    """Lengthen the path by mu, pushing new small labels below the old 0."""
    _require_extendable(lab)
    eps, x, y = lab.eps, lab.x, lab.y
    if mu < 2 * x + 1 or mu == 4 * x + 1:
        raise Refused(f"need mu >= {2 * x + 1} and mu != {4 * x + 1}, got {mu}")
    half = mu // 2  # mu >= 2: mu = 1 always hits the exception above
    p = path_al((-half, -1), (eps + 1, eps + (mu + 1) // 2), x)
    joint = eps + 1 + x  # the end matching w2 + i
    ext_seq = p.graph.path if p.graph.path[0] != joint else p.graph.path[::-1]
    x_new = ext_seq[0]
    grand = ext_seq + lab.oriented_path()
    g = LabeledGraph(cycles=lab.graph.cycles, path=grand)
    if isinstance(lab, Graceful):
        out: Labeling = Graceful(g, GLParams((-half, eps + (mu + 1) // 2), x_new, y))
    else:
        d1 = lab.params.j1[1]
        out = Alpha(
            g,
            ALParams((-half, d1), (d1 + 1, eps + (mu + 1) // 2), x_new, y),
        )
    return translate_labeling(out, half)


def extend_high(lab: Labeling, mu: int) -> Labeling:
    """Lengthen the path by mu, pushing new large labels above the old eps."""
    _require_extendable(lab)
    eps, y = lab.eps, lab.y
    if mu < 2 * (eps - y) + 1 or mu == 4 * (eps - y) + 1:
        raise Refused(f"need mu >= {2 * (eps - y) + 1} and mu != {4 * (eps - y) + 1}, got {mu}")
    from .labelings import reflect

    return reflect(extend_low(reflect(lab), mu))


def extend_even(al: Alpha, mu: int) -> Alpha:
    """Even-length extension of an odd-size alpha labeling, keeping the
    standard part structure.  Needs even mu > eps - 2x."""
    if not isinstance(al, Alpha):
        raise Refused("extend_even needs an alpha labeling")
    eps, x = al.eps, al.x
    if eps % 2 == 0:
        raise Refused("extend_even needs odd size")
    if not al.standard():
        raise Refused("extend_even needs standard parts")
    if mu % 2 != 0 or mu <= eps - 2 * x:
        raise Refused(f"need even mu > {eps - 2 * x}, got {mu}")
    if al.x >= al.y:
        raise Refused(f"need designated ends x < y, got ({al.x}, {al.y})")
    folded = fold(al, eps)
    widened = extend_low(folded, mu)
    return fold(widened, eps + mu)


@dataclass(frozen=True)
class JoinBudget:
    """Shift bookkeeping for join_al_gl.

    lam1 = lam0 + c always; the bound B guarantees the final extension stays
    admissible for at least one of the two recorded lam0 candidates.
    """

    eps0: int
    eps1: int
    x0: int
    y0: int
    x1: int
    y1: int
    bound: int
    lam0: int
    lam1: int
    delta: int


def _lam0_candidates(a: int, b: int, c: int) -> tuple[int, int]:
    """The two shift amounts to try, after clamping the closed form into the
    region where both inner extensions are admissible (each lam must be 0 or
    past its own lower bound)."""
    if c <= -a:
        base = -c
    elif c <= b - a:
        base = b - c
    elif c < b:
        base = a
    else:
        base = 0

    def ok(l0: int) -> bool:
        l1 = l0 + c
        return l0 >= 0 and l1 >= 0 and (l0 == 0 or l0 >= a) and (l1 == 0 or l1 >= b)

    out = []
    for delta in (0, 1):
        l0 = base + delta
        while not ok(l0):
            l0 += 1
        out.append(l0)
    return out[0], out[1]


def join_budget(al: Alpha, gl: Graceful, mu: int | None = None) -> JoinBudget:
    """Compute the joining bound B and the shift amounts for join_al_gl."""
    e0, e1 = al.eps, gl.eps
    x0, y0, x1, y1 = al.x, al.y, gl.x, gl.y
    bound = 2 * e0 + 6 * e1 + 4 * x1 - 6 * y1 + 2 * x0 + 2 * y0 + 16
    a = (e0 + 1) // 2 - x0
    b = e1 - y1 + 1
    c = y0 - (e0 + 1) // 2 - x1
    cands = _lam0_candidates(a, b, c)
    lam0 = cands[0]
    delta = 0
    if mu is not None:
        # dodge the final-extension exception mu'' == 4*x0'' + 1
        if mu - 2 * (2 * lam0 + c) - 1 == 4 * (x0 + lam0) + 1:
            lam0 = cands[1]
            delta = 1
            if mu - 2 * (2 * lam0 + c) - 1 == 4 * (x0 + lam0) + 1:
                raise RuntimeError("both shift choices hit the extension exception")
    return JoinBudget(e0, e1, x0, y0, x1, y1, bound, lam0, lam0 + c, delta)


def join_al_gl(al: Alpha, gl: Graceful, mu: int) -> Graceful:
    """Graceful labeling of the disjoint union with the paths chained.

    Input: an alpha labeling of odd size eps0 with standard parts and a
    graceful labeling of size eps1, both with ends x < y.  Output size is
    eps0 + eps1 + mu for any mu >= B.
    """
    if al.eps % 2 == 0:
        raise Refused("join needs an alpha labeling of odd size")
    if not al.standard():
        raise Refused("join needs standard parts on the alpha labeling")
    _require_extendable(al)
    _require_extendable(gl)
    budget = join_budget(al, gl, mu)
    if mu < budget.bound:
        raise Refused(f"need mu >= B = {budget.bound}, got {mu}")
    lam0, lam1 = budget.lam0, budget.lam1
    e0, e1 = al.eps, gl.eps

    g0 = extend_even(al, 2 * lam0) if lam0 > 0 else al
    g1 = extend_high(gl, 2 * lam1) if lam1 > 0 else gl
    g0s = bipartite_shift(g0, 0, e1 + 2 * lam1 + 1)
    g1s = translate_labeling(g1, (e0 + 1) // 2 + lam0)

    assert g0s.y - g1s.x == e1 + 2 * lam1 + 1, "join edge difference mismatch"
    grand_path = g0s.oriented_path() + g1s.oriented_path()
    mid_eps = e0 + e1 + 2 * lam0 + 2 * lam1 + 1
    mid = Graceful(
        LabeledGraph(cycles=g0s.graph.cycles + g1s.graph.cycles, path=grand_path),
        GLParams((0, mid_eps), g0s.x, g1s.y),
    )
    mu_rest = mu - (2 * lam0 + 2 * lam1 + 1)
    if mu_rest == 0:
        return mid
    return extend_low(mid, mu_rest)
