"""``fpcount`` command-line front end.

Reports are JSON on stdout with sorted keys; counts are decimal strings.
Exit codes: 0 success, 2 invalid input (or an engine whose precondition
fails), 3 a cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import reductions as R
from .engines import ENGINES, Caps, dispatch, predict_branches
from .errors import CapExceeded, EngineNotApplicable, FPCountError, ScopeNotCovered, ValidationError
from .functions import TruthTable, syntactic_basis, to_table
from .graphs import graph_report
from .io import dumps_system, read_system
from .post import classify
from .system import configuration, global_transition, is_fixed_point, synchronous_schedule

EXIT_OK, EXIT_INVALID, EXIT_CAP = 0, 2, 3


def _emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")


def _caps(args) -> Caps:
    return Caps(brute=args.brute_cap, arity=args.arity_cap, width=args.width_cap)


def cmd_count(args) -> int:
    system, _ = read_system(args.file)
    caps = _caps(args)
    start = time.perf_counter()
    if args.engine == "auto":
        report, count = dispatch(system, caps)
        engine, details = report.engine, report.as_dict()
    else:
        count = ENGINES[args.engine](system, caps)
        engine, details = args.engine, None
    _emit({
        "count": str(count),
        "engine": engine,
        "requested_engine": args.engine,
        "n": system.n,
        "dispatch": details,
        "elapsed_seconds": round(time.perf_counter() - start, 6),
    })
    return EXIT_OK


_VERDICT = {
    "linear": "tractable branch: linear",
    "and": "tractable branch: E (AND functions)",
    "or": "tractable branch: V (OR functions)",
    "bounded-treewidth": "tractable branch: bounded treewidth",
    "bounded-degree": "tractable branch: bounded degree (formulas reduce to tables)",
    "intractable-lookup": "intractable branch: E2, V2 or D2 on planar-unbounded networks",
    "intractable-formula-1": "intractable branch: S00, S10 or D2 with unbounded degree",
    "intractable-formula-2": "intractable branch: E2 or V2 on planar-unbounded networks",
}


def cmd_classify(args) -> int:
    system, _ = read_system(args.file)
    caps = _caps(args)
    vertices = []
    flags = {}
    capped = False
    for v in system.network.vertices:
        f = system.function(v)
        k = len(system.scopes[v - 1])
        entry = {"vertex": v, "arity": k}
        if k <= caps.arity:
            rep = classify(to_table(f, k, caps.arity), cap=caps.arity)
            entry["classes"] = rep.classes()
            entry["report"] = rep.as_dict()
            for name in ("R0", "R1", "M", "D", "L", "E", "V", "N", "S0", "S1", "D2", "S00", "S10", "E2", "V2"):
                flags[name] = flags.get(name, True) and getattr(rep, name)
        else:
            entry["classes"] = None
            entry["note"] = f"arity {k} above the classification cap {caps.arity}"
            if not isinstance(f, TruthTable):
                entry["syntactic_basis"] = sorted(syntactic_basis(f))
            capped = True
        vertices.append(entry)
    branches = predict_branches(system, caps)
    _emit({
        "vertices": vertices,
        "all_functions_in": None if capped else sorted(name for name, ok in flags.items() if ok),
        "graph": graph_report(system.network).as_dict(),
        "branches": {
            "lookup": {"branch": branches["lookup"], "verdict": _VERDICT[branches["lookup"]]},
            "formula": {"branch": branches["formula"], "verdict": _VERDICT[branches["formula"]]},
            "closure_width": branches["closure_width"],
        },
    })
    return EXIT_OK


def cmd_simulate(args) -> int:
    system, schedule = read_system(args.file)
    n = system.n
    if schedule is None or not len(schedule):
        schedule = synchronous_schedule(n)
    state = configuration(args.initial, n) if args.initial is not None else (0,) * n
    trajectory = ["".join(map(str, state))]
    fixed_step = 0 if is_fixed_point(system, state) else None
    for t in range(1, args.steps + 1):
        if fixed_step is not None:
            break
        state = global_transition(system, schedule.steps[(t - 1) % len(schedule)], state)
        trajectory.append("".join(map(str, state)))
        if is_fixed_point(system, state):
            fixed_step = t
    _emit({
        "trajectory": trajectory,
        "fixed_point_reached": fixed_step is not None,
        "fixed_step": fixed_step,
        "schedule": [sorted(step) for step in schedule.steps],
    })
    return EXIT_OK


def _read_text(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


SMALL = 20  # inputs up to this many variables get their expected count in the sidecar


def cmd_gadget(args) -> int:
    name = args.name
    sidecar = {"gadget": name, "identity": R.IDENTITIES[name]}
    text = None
    if name == "amplifier":
        if args.h is None:
            raise ValidationError("amplifier needs --h")
        system = R.amplifier(args.h)
        ids = R.amplifier_vertices(args.h)
        sidecar.update({
            "h": args.h,
            "anchors": {"a0": ids["a", 0], "c0": ids["c", 0]},
            "expected": {"equal": "1", "unequal": str(1 << (args.h + 1))},
        })
    else:
        if args.input is None:
            raise ValidationError(f"{name} needs an input file")
        raw = _read_text(args.input)
        if name in ("horn-and", "horn-or"):
            h = R.parse_dimacs(raw, "horn")
            system = (R.horn_to_and_system if name == "horn-and" else R.horn_to_or_system)(h)
            if h.n <= SMALL:
                sidecar["expected"] = str(R.count_horn_sat(h))
        elif name in ("s10-star", "s00-star", "d2-star"):
            h = R.parse_dimacs(raw, "positive")
            build = {"s10-star": R.pos2sat_to_s10_star, "s00-star": R.pos2sat_to_s00_star,
                     "d2-star": R.pos2sat_to_d2_star}[name]
            system = build(h)
            if h.n <= SMALL:
                sat = R.count_positive_sat(h)
                expected = {"s10-star": sat + (1 << h.n), "s00-star": sat + (1 << (h.n + 1)),
                            "d2-star": R.d2_star_expected(h, sat)}[name]
                sidecar["expected"] = str(expected)
            sidecar["unused_variables"] = R.unused_variables(h)
        elif name == "vc-d2":
            g = R.parse_graph(raw)
            if not g.edges:
                raise ValidationError("vc-d2 needs a graph with at least one edge")
            gadget = R.vc_to_d2_system(g)
            system = gadget.system
            sidecar["modulus"] = str(gadget.modulus)
            sidecar["triples"] = [list(t) for t in gadget.triples]
            if g.n <= SMALL:
                sidecar["expected_mod"] = str(2 * R.count_vertex_covers(g) % gadget.modulus)
        elif name == "bip-horn":
            g = R.parse_graph(raw)
            h = R.bipartite_to_horn(R.BipartiteGraph.from_network(g))
            text = R.write_dimacs(h)
            if g.n <= SMALL:
                sidecar["expected"] = str(R.count_independent_sets(g))
        else:  # pragma: no cover - argparse restricts the choices
            raise ValidationError(f"unknown gadget {name}")
    if text is None:
        if args.tables:
            system = R.as_lookup(system)
        text = dumps_system(system)
        sidecar["n"] = system.n
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(text)
    with open(args.output + ".identity.json", "w", encoding="utf-8") as fh:
        fh.write(json.dumps(sidecar, indent=2, sort_keys=True) + "\n")
    _emit({"written": args.output, "sidecar": args.output + ".identity.json", **sidecar})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fpcount", description="Exact fixed-point counting for boolean dynamical systems.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_caps(p):
        p.add_argument("--brute-cap", type=int, default=26, help="max vertices for brute force (default 26)")
        p.add_argument("--arity-cap", type=int, default=20, help="max arity for table conversion (default 20)")
        p.add_argument("--width-cap", type=int, default=12, help="max decomposition width (default 12)")

    p = sub.add_parser("count", help="count fixed points")
    p.add_argument("file")
    p.add_argument("--engine", choices=["auto", *ENGINES], default="auto")
    add_caps(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("classify", help="Post classes of every local function and graph parameters")
    p.add_argument("file")
    add_caps(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("simulate", help="iterate the update schedule from a configuration")
    p.add_argument("file")
    p.add_argument("--steps", type=int, default=10)
    p.add_argument("--initial", help="bit string, vertex 1 first (default all zeros)")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("gadget", help="generate a reduction gadget")
    p.add_argument("name", choices=sorted(R.IDENTITIES))
    p.add_argument("input", nargs="?", help="DIMACS CNF (horn-*, *-star) or 'p edge' graph (vc-d2, bip-horn)")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--h", type=int, help="amplifier parameter")
    p.add_argument("--tables", action="store_true", help="emit truth tables instead of formulas")
    p.set_defaults(func=cmd_gadget)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValidationError, EngineNotApplicable, ScopeNotCovered, FPCountError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
