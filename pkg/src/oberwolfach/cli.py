"""Command-line interface emitting JSON certificates.

Subcommands: label, alpha, starter, solve, verify, search, bounds, classify.
Exit codes: 0 success, 1 refusal or failed verification, 2 usage error.
Every emitted certificate re-verifies under `verify --input -`.
"""

from __future__ import annotations

import argparse
import json
import sys

from .alpha import build_al
from .graceful import build_gl
from .graphs import (
    CycleMultiset,
    GraphSpec,
    Refused,
    classify_single_flip,
    graph_from_json,
    graph_to_json,
)
from .labelings import Alpha, ALParams, Graceful, GLParams, verify_al, verify_gl
from .opsolve import (
    THEOREMS,
    solution_from_json,
    solution_to_json,
    solve,
    thresholds,
    verify_solution,
)
from .oracle import search
from .starters import Starter, starter_from_json, starter_to_json, verify_starter
from .opsolve import _starter_for, sharpest_bound


def _lengths(text: str | None) -> list[int]:
    if not text:
        return []
    return [int(tok) for tok in text.replace(" ", "").split(",") if tok]


def _labeling_cert(lab) -> dict:
    if isinstance(lab, Alpha):
        params = {"j1": list(lab.params.j1), "j2": list(lab.params.j2), "x": lab.x, "y": lab.y}
        kind = "AL"
    else:
        params = {"j": list(lab.params.j), "x": lab.x, "y": lab.y}
        kind = "GL"
    spec = lab.spec()
    return {
        "type": "labeling",
        "kind": kind,
        "graph": graph_to_json(lab.graph),
        "params": params,
        "spec": {"cycles": list(spec.cycles.lengths), "path": spec.path_len},
        "verified": lab.check().ok,
    }


def _emit(payload: dict, pretty: bool) -> None:
    json.dump(payload, sys.stdout, indent=2 if pretty else None)
    sys.stdout.write("\n")


def _target_size(args, cycles_total: int, two: int) -> int | None:
    if args.size is not None and args.path is not None:
        raise Refused("give --size or --path, not both")
    if args.size is not None:
        return args.size
    if args.path is not None:
        return args.path + cycles_total + two
    return None


def cmd_label(args, pretty) -> int:
    evens = _lengths(args.even)
    odds = _lengths(args.odd)
    a = 1 if args.two_cycle else 0
    eps = _target_size(args, sum(evens) + sum(odds), 2 * a)
    lab = build_gl(evens, odds, a, eps)
    _emit(_labeling_cert(lab), pretty)
    return 0


def cmd_alpha(args, pretty) -> int:
    evens = _lengths(args.even)
    if args.odd or args.two_cycle:
        raise Refused("alpha labelings admit even cycles only")
    eps = _target_size(args, sum(evens), 0)
    if eps is None:
        raise Refused("need --size or --path")
    lab = build_al(evens, eps)
    _emit(_labeling_cert(lab), pretty)
    return 0


def cmd_starter(args, pretty) -> int:
    lengths = _lengths(args.factor)
    if not lengths:
        raise Refused("need --factor")
    F = CycleMultiset.from_lengths(lengths)
    flip = classify_single_flip(F)
    if flip is None:
        raise Refused(f"{F} is not single-flip")
    if flip.reflected % 2 == 0:
        raise Refused("the starter's infinity cycle must be odd; pick sigma=+-1 via solve")
    name, least = sharpest_bound(F.without(flip.reflected))
    if flip.reflected < least:
        raise Refused(f"needs reflected cycle >= {least} ({name}), got {flip.reflected}")
    st = _starter_for(flip.reflected, F.without(flip.reflected))
    cert = starter_to_json(st)
    cert["type"] = "starter"
    cert["cycle_type"] = list(st.cycle_type().lengths)
    cert["verified"] = st.check().ok
    _emit(cert, pretty)
    return 0


def cmd_solve(args, pretty) -> int:
    lengths = _lengths(args.factor)
    if not lengths:
        raise Refused("need --factor")
    sol = solve(lengths, args.sigma, getattr(args, "lambda"))
    cert = solution_to_json(sol)
    cert["type"] = "solution"
    cert["verified"] = sol.check().ok
    _emit(cert, pretty)
    return 0


def cmd_verify(args, pretty) -> int:
    raw = sys.stdin.read() if args.input == "-" else open(args.input).read()
    data = json.loads(raw)
    kind = data.get("type")
    if kind is None:
        kind = "solution" if "factors" in data else "starter" if "n" in data else "labeling"
    if kind == "solution":
        rep = verify_solution(solution_from_json(data))
    elif kind == "starter":
        st = starter_from_json(data)
        rep = verify_starter(st.graph, st.n)
    elif kind == "labeling":
        g = graph_from_json(data["graph"])
        spec = GraphSpec.of(data["spec"]["cycles"], data["spec"]["path"])
        p = data["params"]
        if data.get("kind") == "AL":
            rep = verify_al(g, spec, ALParams(tuple(p["j1"]), tuple(p["j2"]), p["x"], p["y"]))
        else:
            rep = verify_gl(g, spec, GLParams(tuple(p["j"]), p["x"], p["y"]))
    else:
        raise Refused(f"unknown certificate type {kind!r}")
    _emit(rep.to_json(), pretty)
    return 0 if rep.ok else 1


def cmd_search(args, pretty) -> int:
    evens = _lengths(args.even)
    odds = _lengths(args.odd)
    cycles = evens + odds + ([2] if args.two_cycle else [])
    m = args.path
    if m is None and args.size is not None:
        m = args.size - sum(cycles)
    if m is None:
        raise Refused("need --path or --size")
    spec = GraphSpec.of(cycles, m)
    ends = tuple(_lengths(args.ends)) if args.ends else None
    res = search(
        spec,
        args.mode,
        ends=ends,
        find_all=args.all,
        limit=args.limit,
    )
    payload = {
        "type": "search",
        "spec": {"cycles": list(spec.cycles.lengths), "path": spec.path_len},
        "mode": args.mode,
        "found": res.first is not None,
        "raw": res.raw,
        "reduced": res.reduced,
    }
    if args.all:
        payload["labelings"] = [graph_to_json(g) for g in res.labelings]
    elif res.first is not None:
        payload["labeling"] = graph_to_json(res.first)
    _emit(payload, pretty)
    return 0


def cmd_bounds(args, pretty) -> int:
    if args.theorem not in THEOREMS:
        raise Refused(f"--theorem must be one of {', '.join(THEOREMS)}")
    toks = [t for t in (args.factor or "").replace(" ", "").split(",") if t]
    h: int | None = None
    rest = []
    for i, tok in enumerate(toks):
        if tok == "h" and i == 0 and args.theorem not in ("mainGL", "cor:main1"):
            h = None
        elif i == 0 and args.theorem not in ("mainGL", "cor:main1"):
            h = int(tok)
        else:
            rest.append(int(tok))
    bound, verdict = thresholds(CycleMultiset.from_lengths(rest), args.theorem, h)
    payload = {"type": "bounds", "theorem": args.theorem, "bound": bound}
    if h is not None:
        payload["h"] = h
        payload["admissible"] = verdict
    _emit(payload, pretty)
    return 0


def cmd_classify(args, pretty) -> int:
    lengths = _lengths(args.factor)
    flip = classify_single_flip(CycleMultiset.from_lengths(lengths))
    if flip is None:
        _emit({"type": "classify", "single_flip": False}, pretty)
        return 0
    _emit(
        {
            "type": "classify",
            "single_flip": True,
            "reflected": flip.reflected,
            "flips": list(flip.flips),
            "pairs": list(flip.pairs),
        },
        pretty,
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="oberwolfach", description=__doc__)
    top.add_argument("--pretty", action="store_true", help="indent JSON output")
    top.add_argument("--json", action="store_true", help="compact JSON output (default)")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, cycles=True, size=True):
        if cycles:
            p.add_argument("--even", help="comma-separated even cycle lengths")
            p.add_argument("--odd", help="comma-separated odd cycle lengths")
            p.add_argument("--two-cycle", action="store_true", help="include one 2-cycle")
        if size:
            p.add_argument("--path", type=int, help="path length m")
            p.add_argument("--size", type=int, help="total size eps")

    p = sub.add_parser("label", help="build a graceful labeling")
    common(p)
    p.set_defaults(fn=cmd_label)

    p = sub.add_parser("alpha", help="build an alpha labeling")
    common(p)
    p.set_defaults(fn=cmd_alpha)

    p = sub.add_parser("starter", help="build a 2-starter for a factor")
    p.add_argument("--factor", required=True, help="cycle lengths of F, e.g. 19,4")
    p.set_defaults(fn=cmd_starter)

    p = sub.add_parser("solve", help="solve OP^sigma(lambda, F)")
    p.add_argument("--factor", required=True)
    p.add_argument("--lambda", type=int, default=1)
    p.add_argument("--sigma", type=int, default=0, choices=(-1, 0, 1))
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("verify", help="re-verify a JSON certificate")
    p.add_argument("--input", required=True, help="path or - for stdin")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("search", help="exhaustive labeling search")
    common(p)
    p.add_argument("--mode", default="GL", choices=("GL", "AL"))
    p.add_argument("--all", action="store_true", help="enumerate all labelings")
    p.add_argument("--ends", help="pin the path ends, e.g. 1,4")
    p.add_argument("--limit", type=int, help="size cap override")
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("bounds", help="published threshold for a theorem")
    p.add_argument("--factor", required=True, help="h,l1,l2,... ('h' symbolic) or cycle list")
    p.add_argument("--theorem", required=True)
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("classify", help="single-flip decomposition of a 2-factor")
    p.add_argument("--factor", required=True)
    p.set_defaults(fn=cmd_classify)
    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args, args.pretty)
    except Refused as exc:
        json.dump({"error": str(exc)}, sys.stderr)
        sys.stderr.write("\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
