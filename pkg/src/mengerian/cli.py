"""Command-line interface.

Commands: hypergraph, check, decide, classify, survey, verify-certificate.
Identical invocations produce byte-identical output; every refutation is
emitted together with a certificate that verify-certificate re-validates
independently. Exit status: 0 completed, 2 property refuted under
--assert (or an invalid certificate), 1 error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import classify, clutters, graphs, ideals, linalg, survey
from .classify import Caps


def _add_input_args(p: argparse.ArgumentParser) -> None:
    src = p.add_argument_group("input (exactly one)")
    src.add_argument("--family", metavar="NAME:PARAMS",
                     help="family descriptor, e.g. cycle:8, path:6, spider:2,1,1")
    src.add_argument("--file", metavar="PATH", help="edge-list file (1-based 'u v' lines)")
    src.add_argument("--edges", metavar="TEXT", help="inline edge list, e.g. '1 2\\n2 3'")
    src.add_argument("--graph6", metavar="G6", help="one graph6-encoded graph")


def _load_graph(args) -> graphs.Graph:
    sources = [s for s in ("family", "file", "edges", "graph6") if getattr(args, s, None)]
    if len(sources) != 1:
        raise SystemExit("exactly one of --family/--file/--edges/--graph6 is required")
    if args.family:
        name, _, rest = args.family.partition(":")
        if not rest:
            raise SystemExit("family descriptor must look like name:params, e.g. cycle:8")
        params = [int(tok) for tok in rest.split(",")]
        return graphs.make_family(name, params)
    if args.file:
        with open(args.file, "r", encoding="utf-8") as fh:
            return graphs.parse_edge_list(fh.read())
    if args.edges:
        return graphs.parse_edge_list(args.edges.replace("\\n", "\n"))
    return graphs.parse_graph6(args.graph6)


def _caps(args) -> Caps:
    return Caps(max_vertices=args.max_n, max_edges=args.max_edges, max_power_k=args.max_power)


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="mengerian",
        description="Exact Konig/packing/ideal/TU/Mengerian checks for path hypergraphs.",
    )
    p.add_argument("--t", type=int, default=3, help="path length (default 3)")
    p.add_argument("--max-n", type=int, default=12, help="vertex cap")
    p.add_argument("--max-edges", type=int, default=64, help="hyperedge cap")
    p.add_argument("--max-power", type=int, default=8, help="power-equality exponent cap")
    sub = p.add_subparsers(dest="command", required=True)

    ph = sub.add_parser("hypergraph", help="emit the t-path hypergraph")
    _add_input_args(ph)
    ph.add_argument("--format", choices=("text", "json", "dot"), default="text")

    pc = sub.add_parser("check", help="run a single property check")
    pc.add_argument("property", choices=("tu", "ideal", "konig", "packing", "ntf", "mfmc-probe"))
    _add_input_args(pc)
    pc.add_argument("--assert", dest="assert_mode", action="store_true",
                    help="exit 2 when the property is refuted")
    pc.add_argument("--cmax", type=int, default=2, help="cost bound for mfmc-probe")
    pc.add_argument("--format", choices=("text", "json", "dot"), default="json",
                    help="dot renders the graph; for a refuted ideal check the "
                         "vertices carry the fractional certificate values")

    pd = sub.add_parser("decide", help="full exact pipeline with report")
    _add_input_args(pd)
    pd.add_argument("--certificates", action="store_true", default=True)
    pd.add_argument("--no-certificates", dest="certificates", action="store_false")
    pd.add_argument("--packing", action="store_true", help="also compute the packing property")

    pk = sub.add_parser("classify", help="closed-form clause for a connected graph")
    _add_input_args(pk)
    pk.add_argument("--format", choices=("text", "json"), default="text")

    ps = sub.add_parser("survey", help="exhaustive cross-check over small graphs")
    ps.add_argument("--max-n", dest="survey_max_n", type=int,
                    default=int(os.environ.get("MENGERIAN_MAX_N", "6")))
    ps.add_argument("--min-n", type=int, default=4)
    ps.add_argument("--packing-max-n", type=int, default=survey.PACKING_MAX_N)
    ps.add_argument("--csv", action="store_true", help="CSV summary instead of JSON")

    pv = sub.add_parser("verify-certificate", help="re-validate certificates in a report")
    pv.add_argument("report", nargs="?", default="-",
                    help="DecisionReport JSON file (default: stdin)")
    return p


def _cmd_hypergraph(args) -> int:
    g = _load_graph(args)
    c = graphs.build_path_hypergraph(g, args.t)
    if args.format == "dot":
        sys.stdout.write(graphs.to_dot(g))
    elif args.format == "json":
        incidence = [[int(x) for x in row] for row in clutters.incidence_matrix(c).rows]
        _emit_json({"schema": 1, "t": args.t,
                    "hypergraph": clutters.to_json_dict(c),
                    "incidence": incidence})
    else:
        if c.is_empty:
            print(f"{c.n} 0")
        else:
            sys.stdout.write(clutters.to_text(c))
    return 0


def _cmd_check(args) -> int:
    g = _load_graph(args)
    c = graphs.build_path_hypergraph(g, args.t)
    prop = args.property
    payload: dict = {"schema": 1, "t": args.t, "property": prop,
                     "hypergraph": clutters.to_json_dict(c)}
    holds: Optional[bool] = None
    if prop == "tu":
        res = linalg.is_totally_unimodular(clutters.incidence_matrix(c))
        holds = res.totally_unimodular
        payload["tu"] = classify.tu_json(res, certificates=True)
    elif prop == "ideal":
        res = linalg.is_ideal(clutters.incidence_matrix(c)) if not c.is_empty \
            else linalg.IdealityResult(True, None)
        holds = res.ideal
        payload["ideal"] = classify.ideal_json(res, certificates=True)
    elif prop == "konig":
        t_, n_ = clutters.tau(c), clutters.nu(c)
        holds = t_ == n_
        payload["konig"] = {"value": holds, "tau": t_, "nu": n_}
    elif prop == "packing":
        holds = clutters.has_packing(c)
        payload["packing"] = {"value": holds}
    elif prop == "ntf":
        res = ideals.is_normally_torsion_free(c)
        holds = res.normally_torsion_free
        payload["ntf"] = classify.ntf_json(res, c, certificates=True)
    else:  # mfmc-probe
        if c.is_empty:
            probe = clutters.MengerianProbe(False)
        else:
            probe = clutters.mengerian_bounded(c, args.cmax)
        holds = not probe.refuted
        payload["mfmc_probe"] = {
            "refuted": probe.refuted,
            "cmax": args.cmax,
            "cost": None if probe.cost is None else list(probe.cost),
            "cover_min": probe.cover_min,
            "packing_max": probe.packing_max,
        }
        payload["note"] = "UNDECIDED means no gap up to cmax; it is not a proof"
    payload["holds"] = holds
    if args.format == "json":
        _emit_json(payload)
    elif args.format == "dot":
        values = None
        vertex = payload.get("ideal", {}).get("fractional_vertex") if prop == "ideal" else None
        if vertex:
            values = vertex["coords"]
        sys.stdout.write(graphs.to_dot(g, values=values))
    else:
        print(f"{prop}: {'holds' if holds else 'refuted'}")
    return 2 if (args.assert_mode and not holds) else 0


def _cmd_decide(args) -> int:
    g = _load_graph(args)
    rep = classify.decide_mengerian_exact(g, args.t, caps=_caps(args),
                                          compute_packing=args.packing)
    _emit_json(rep.to_json_dict(certificates=args.certificates))
    return 0


def _cmd_classify(args) -> int:
    g = _load_graph(args)
    verdict = classify.classify_mengerian(g)
    if args.format == "json":
        _emit_json({"schema": 1, "mengerian": verdict.mengerian,
                    "clause": verdict.clause, "note": verdict.note})
    else:
        print(f"{verdict.clause}: mengerian={verdict.mengerian}")
    return 0


def _cmd_survey(args) -> int:
    rep = survey.cross_check(args.survey_max_n, t=args.t, n_min=args.min_n,
                             packing_max_n=args.packing_max_n, caps=_caps(args))
    if args.csv:
        sys.stdout.write(rep.to_csv())
    else:
        _emit_json(rep.to_json_dict())
    return 0


def _cmd_verify(args) -> int:
    if args.report == "-":
        data = json.load(sys.stdin)
    else:
        with open(args.report, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    results = classify.verify_report_dict(data)
    for name, ok, msg in results:
        print(f"{name}: {'valid' if ok else 'INVALID'} ({msg})")
    if not results:
        print("no certificates found in report")
    return 0 if all(ok for _, ok, _ in results) else 2


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        handler = {
            "hypergraph": _cmd_hypergraph,
            "check": _cmd_check,
            "decide": _cmd_decide,
            "classify": _cmd_classify,
            "survey": _cmd_survey,
            "verify-certificate": _cmd_verify,
        }[args.command]
        return handler(args)
    except classify.CapExceeded as exc:
        print(f"resource cap exceeded: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
