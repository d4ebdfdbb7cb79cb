"""Command line: ``spanbicat check|compose|tabulate|em|matrix|verify-report``.

Exit status: 0 when everything holds, 1 when a check fails or a requested
construction does not exist, 2 when the input cannot be parsed or validated.
"""

import argparse
import json
import sys

from . import comonads, direct_sums, kernels
from .errors import SpanError
from .finset import FiniteFunction, FiniteSet
from .instances import InstanceError, load_instance
from .report import span_json, to_jsonable
from .spans import Span, SpanMorphism, find_iso
from .suites import SUITES, compose_names, run_suite

MAX_BOUND = 6
EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _dump(obj):
    return json.dumps(obj, indent=2, sort_keys=True)


def _emit(args, payload, lines):
    text = _dump(payload) if args.format == "json" else "\n".join(lines)
    print(text)
    if getattr(args, "report", None):
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(_dump(payload) + "\n")


def _span_line(label, R):
    return (f"{label}: {R.src.size} <- {R.apex.size} -> {R.tgt.size}  "
            f"left={list(R.left.table)} right={list(R.right.table)}")


def cmd_check(args, inst):
    bound = args.bound
    if bound > MAX_BOUND:
        print(f"warning: bound {bound} capped at {MAX_BOUND}", file=sys.stderr)
        bound = MAX_BOUND
    rows = run_suite(inst, args.suite, bound)
    results = []
    lines = [f"suite: {args.suite}  bound: {bound}"]
    for group, name, size, rep in rows:
        results.append({"group": group, "name": name, "size": size, **rep.to_json()})
        mark = "PASS" if rep.holds else "FAIL"
        line = f"{mark} [{group}] {name} ({rep.subject})"
        if not rep.holds:
            line += f": {json.dumps(to_jsonable(rep.counterexample), sort_keys=True)}"
        lines.append(line)
    n_fail = sum(1 for r in results if not r["holds"])
    objects = sorted({r["size"] for r in results if r["group"] == "sweep"
                      and r["name"].endswith(": discrete")})
    summary = {"checks": len(results), "failed": n_fail}
    if objects:
        summary["objects_checked"] = len(objects)
    lines.append(f"{len(results)} checks, {n_fail} failed"
                 + (f", {len(objects)} objects swept" if objects else ""))
    payload = {"kind": "report", "suite": args.suite, "bound": bound,
               "results": results, "summary": summary}
    _emit(args, payload, lines)
    return EXIT_FAIL if n_fail else EXIT_OK


def cmd_compose(args, inst):
    try:
        R = compose_names(inst, args.spans)
    except SpanError as exc:
        if isinstance(exc, InstanceError):
            raise
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    payload = {"kind": "composite", "names": args.spans, "span": span_json(R)}
    lines = [_span_line(" ; ".join(args.spans), R)]
    if args.iso:
        other = inst.span(args.iso)
        iso = find_iso(R, other)
        payload["iso"] = None if iso is None else list(iso.map.table)
        lines.append(f"iso to {args.iso}: " + ("none" if iso is None else str(list(iso.map.table))))
        if iso is None:
            _emit(args, payload, lines)
            return EXIT_FAIL
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_tabulate(args, inst):
    R = inst.span(args.span)
    tab = comonads.tabulate(R)
    mate = tab.mate(R)
    payload = {"kind": "tabulation", "span": args.span, "apex": tab.apex_object.size,
               "u": list(tab.u.right.table), "v": list(tab.v.right.table),
               "omega": to_jsonable(tab.omega), "mate": to_jsonable(mate),
               "mate_invertible": mate.is_iso()}
    lines = [f"tabulation of {args.span}: apex {tab.apex_object.size}",
             f"u = {list(tab.u.right.table)}", f"v = {list(tab.v.right.table)}",
             f"omega = {list(tab.omega.map.table)}",
             f"mate u*;v -> {args.span} = {list(mate.map.table)} "
             f"({'invertible' if mate.is_iso() else 'not invertible'})"]
    _emit(args, payload, lines)
    return EXIT_OK if mate.is_iso() else EXIT_FAIL


def cmd_em(args, inst):
    G = inst.comonads.get(args.name) or inst.span(args.name)
    if G.src != G.tgt:
        print(f"error: {args.name} is not an endospan", file=sys.stderr)
        return EXIT_FAIL
    eps = comonads.find_copoint(G)
    if eps is None:
        print(f"error: no copoint: the legs of {args.name} differ", file=sys.stderr)
        return EXIT_FAIL
    C = comonads.comultiplication(G, eps)
    em = comonads.em_object(C)
    mate = em.mate()
    payload = {"kind": "em-object", "comonad": args.name, "object": em.object.size,
               "projection": list(em.projection.right.table),
               "coalgebra": to_jsonable(em.coalgebra), "mate": to_jsonable(mate),
               "comultiplication": list(C.comult.map.table)}
    lines = [f"EM object of {args.name}: size {em.object.size}",
             f"projection = {list(em.projection.right.table)}",
             f"coalgebra = {list(em.coalgebra.map.table)}",
             f"comultiplication = {list(C.comult.map.table)}",
             f"mate g*;g -> G = {list(mate.map.table)}"]
    _emit(args, payload, lines)
    return EXIT_OK


def _matrix_json(M):
    return [[span_json(R) for R in row] for row in M.entries]


def cmd_matrix(args, inst):
    if args.compose:
        M, N = inst.matrix(args.names[0]), inst.matrix(args.compose)
        try:
            P = direct_sums.matrix_compose(M, N)
        except SpanError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_FAIL
        iso = direct_sums.matrix_composition_agrees(M, N)
        payload = {"kind": "matrix-product", "left": args.names[0], "right": args.compose,
                   "entries": _matrix_json(P), "agrees_with_spans": iso is not None}
        lines = [f"{args.names[0]} . {args.compose}:"]
        lines += [_span_line(f"  ({i},{k})", R) for i, row in enumerate(P.entries)
                  for k, R in enumerate(row)]
        lines.append("agrees with span composition" if iso is not None else "DISAGREES")
        _emit(args, payload, lines)
        return EXIT_OK if iso is not None else EXIT_FAIL
    name = args.names[0]
    if name in inst.matrices:
        M = inst.matrices[name]
        R = direct_sums.span_of_matrix(M)
    else:
        R = inst.span(name)
        if not args.rows or not args.cols:
            print("error: splitting a span needs --rows and --cols", file=sys.stderr)
            return EXIT_INPUT
        try:
            M = direct_sums.matrix_of_span(R, [inst.set(r) for r in args.rows.split(",")],
                                           [inst.set(c) for c in args.cols.split(",")])
        except InstanceError:
            raise
        except SpanError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_FAIL
    iso = find_iso(direct_sums.span_of_matrix(M), R)
    payload = {"kind": "matrix", "name": name, "span": span_json(R),
               "entries": _matrix_json(M), "roundtrip": None if iso is None else list(iso.map.table)}
    lines = [_span_line(name, R)]
    lines += [_span_line(f"  ({i},{j})", E) for i, row in enumerate(M.entries)
              for j, E in enumerate(row)]
    lines.append("round trip: " + ("iso" if iso is not None else "FAILED"))
    _emit(args, payload, lines)
    return EXIT_OK if iso is not None else EXIT_FAIL


def _span_from_json(d):
    S = FiniteSet(d["apex"])
    return Span(FiniteFunction(S, FiniteSet(d["src"]), tuple(d["left"])),
                FiniteFunction(S, FiniteSet(d["tgt"]), tuple(d["right"])))


def _cells_in(obj):
    if isinstance(obj, dict):
        if obj.get("kind") == "cell":
            yield obj
        else:
            for v in obj.values():
                yield from _cells_in(v)
    elif isinstance(obj, list):
        for v in obj:
            yield from _cells_in(v)


def verify_report(data):
    """Problems found when re-validating a report produced by ``check``."""
    if not isinstance(data, dict) or data.get("kind") != "report":
        raise InstanceError("not a report")
    problems = []
    for i, r in enumerate(data.get("results", [])):
        holds = r.get("holds")
        if holds and r.get("witness") is None:
            problems.append(f"result {i}: holds without a witness")
        if holds is False and r.get("counterexample") is None:
            problems.append(f"result {i}: fails without a counterexample")
        if not holds:
            continue
        for c in _cells_in(r.get("witness")):
            try:
                source, target = _span_from_json(c["source"]), _span_from_json(c["target"])
                SpanMorphism(source, target, FiniteFunction(source.apex, target.apex,
                                                            tuple(c["map"])))
            except (SpanError, KeyError, TypeError) as exc:
                problems.append(f"result {i}: witness does not re-validate ({exc})")
    n_fail = sum(1 for r in data.get("results", []) if not r.get("holds"))
    if data.get("summary", {}).get("failed") != n_fail:
        problems.append("summary does not match the results")
    return problems


def cmd_verify_report(args):
    try:
        with open(args.path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InstanceError(f"cannot read report: {exc}") from None
    problems = verify_report(data)
    for p in problems:
        print(p)
    print(f"{len(data.get('results', []))} results re-validated, {len(problems)} problems")
    return EXIT_FAIL if problems else EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="spanbicat",
                                     description="Checks on the bicategory of spans of finite sets.")
    parser.add_argument("--backend", action="store_true", help="print the kernel backend and exit")
    sub = parser.add_subparsers(dest="command")

    def common(p):
        p.add_argument("path", help="JSON instance file")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--report", help="also write the JSON report to this file")

    p = sub.add_parser("check", help="run a checker suite")
    common(p)
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--bound", type=int, default=4, help="sweep size bound (max 6)")

    p = sub.add_parser("compose", help="compose named spans left to right")
    common(p)
    p.add_argument("spans", nargs="+")
    p.add_argument("--iso", help="compare the composite with this named span")

    p = sub.add_parser("tabulate", help="tabulate a named span")
    common(p)
    p.add_argument("span")

    p = sub.add_parser("em", help="Eilenberg-Moore object of an equal-leg span")
    common(p)
    p.add_argument("name")

    p = sub.add_parser("matrix", help="split a span into blocks or multiply matrices")
    common(p)
    p.add_argument("names", nargs=1)
    p.add_argument("--rows", help="comma-separated row sets")
    p.add_argument("--cols", help="comma-separated column sets")
    p.add_argument("--compose", help="multiply by this named matrix")

    p = sub.add_parser("verify-report", help="re-validate a JSON report")
    p.add_argument("path")
    return parser


COMMANDS = {"check": cmd_check, "compose": cmd_compose, "tabulate": cmd_tabulate,
            "em": cmd_em, "matrix": cmd_matrix}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.backend:
        print(kernels.BACKEND)
        return EXIT_OK
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_INPUT
    try:
        if args.command == "verify-report":
            return cmd_verify_report(args)
        if args.command == "check" and args.bound < 0:
            print("error: bound must be nonnegative", file=sys.stderr)
            return EXIT_INPUT
        inst = load_instance(args.path)
        return COMMANDS[args.command](args, inst)
    except InstanceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
