"""Command-line front end.

Exit codes: 0 for a passing check, 1 for a failing check, 2 for usage
or input errors.  Kupisch series are written in run-length syntax, e.g.
``2^6,3^13,2^3,1``; ``--kupisch -`` reads one series per line from
stdin in batch mode.  ``--json`` switches to machine-readable output.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import abutments, ar, tilting
from .cluster import check_fractured, check_nct, classify_sides, \
    complete_slice
from .gluing import check_glue_invariants, dispatch_check, glue
from .kupisch import KupischError, KupischSeries, coord_from_json, \
    format_series, parse_series
from .ndgen import construct, supported
from .render import RenderSpec, render
from .tilting import Fracture, Fracturing, is_fracture


class CliError(Exception):
    pass


def _series_arg(text: str) -> KupischSeries:
    text = text.strip()
    try:
        if text.startswith("{"):
            return KupischSeries.from_json(json.loads(text))
        return parse_series(text)
    except (ValueError, KeyError) as exc:
        raise CliError(f"bad Kupisch series {text!r}: {exc}") from exc


def _series_inputs(arg: str):
    if arg == "-":
        for line in sys.stdin:
            line = line.strip()
            if line:
                yield line
    else:
        yield arg


def _coords_arg(text: str):
    data = json.loads(text)
    return [coord_from_json(c) for c in data]


def _fracture_from_json(K: KupischSeries, data: dict) -> Fracture:
    coords = [coord_from_json(c) for c in data["coords"]]
    return is_fracture(K, data["side"], int(data["height"]), coords)


def _emit(payload: dict, as_json: bool, text: str = ""):
    if as_json:
        print(json.dumps(payload, sort_keys=True))
    elif text:
        print(text)


def cmd_validate(args) -> int:
    worst = 0
    for text in _series_inputs(args.kupisch):
        try:
            K = _series_arg(text)
        except CliError as exc:
            if isinstance(exc.__cause__, KupischError):
                _emit({"ok": False, "violation": exc.__cause__.violation},
                      args.json, f"invalid: {exc.__cause__.violation}")
                worst = max(worst, 2)
                continue
            raise
        _emit({"ok": True, "kupisch": list(K.entries)},
              args.json, f"valid: {format_series(K)} (m = {K.m})")
    return worst


def cmd_ar_quiver(args) -> int:
    for text in _series_inputs(args.kupisch):
        K = _series_arg(text)
        gamma = ar.ar_quiver(K)
        highlight = _coords_arg(args.highlight) if args.highlight else ()
        spec = RenderSpec(format="json" if args.json else args.format,
                          highlight=tuple(highlight), labels=args.labels)
        sys.stdout.write(render(gamma, spec))
        if args.json:
            sys.stdout.write("\n")
    return 0


def cmd_check_nct(args) -> int:
    worst = 0
    for text in _series_inputs(args.kupisch):
        K = _series_arg(text)
        verdict = check_nct(K, args.n)
        payload = verdict.to_json()
        payload["kupisch"] = list(K.entries)
        payload["n"] = args.n
        _emit(payload, args.json,
              f"{format_series(K)} n={args.n}: "
              f"{'ok' if verdict.ok else 'not ok'}"
              + ("" if verdict.ok else f" ({verdict.failures[0]['detail']})"))
        worst = max(worst, 0 if verdict.ok else 1)
    return worst


def cmd_check_fractured(args) -> int:
    K = _series_arg(args.kupisch)
    if args.fracturing:
        data = json.loads(args.fracturing)
        F = Fracturing(_fracture_from_json(K, data["TL"]),
                       _fracture_from_json(K, data["TR"]))
    else:
        F = tilting.projective_injective_fracturing(K)
    candidate = _coords_arg(args.candidate) if args.candidate else None
    verdict = check_fractured(K, args.n, F, candidate=candidate)
    payload = verdict.to_json()
    payload["fracturing"] = F.to_json()
    if verdict.ok:
        payload["sides"] = classify_sides(K, args.n, F, verdict)
    _emit(payload, args.json,
          f"{format_series(K)} n={args.n}: "
          f"{'ok' if verdict.ok else 'not ok'}"
          + ("" if verdict.ok else f" ({verdict.failures[0]['detail']})"))
    return 0 if verdict.ok else 1


def cmd_glue(args) -> int:
    B = _series_arg(args.b)
    A = _series_arg(args.a)
    g = glue(B, A, args.height)
    payload = g.to_json()
    if args.check:
        inv = check_glue_invariants(g)
        dis = dispatch_check(g)
        payload["invariants_ok"] = inv.ok
        payload["dispatch_ok"] = dis.ok
        if not (inv.ok and dis.ok):
            _emit(payload, args.json,
                  f"glue failed: {inv.failure or dis.failure}")
            return 1
    _emit(payload, args.json, format_series(g.result))
    return 0


def cmd_construct_nd(args) -> int:
    if not supported(args.n, args.d):
        _emit({"supported": False, "n": args.n, "d": args.d},
              args.json, f"pair ({args.n},{args.d}) not supported")
        return 2
    cert = construct(args.n, args.d)
    if args.emit == "kupisch":
        _emit({"kupisch": list(cert.kupisch.entries)}, args.json,
              format_series(cert.kupisch))
    elif args.emit == "quiver":
        spec = RenderSpec(format="json" if args.json else "ascii",
                          highlight=cert.verdict.candidate)
        sys.stdout.write(render(ar.ar_quiver(cert.kupisch), spec))
        if args.json:
            sys.stdout.write("\n")
    else:
        _emit(cert.to_json(), args.json,
              f"({args.n},{args.d}): {format_series(cert.kupisch)} "
              f"gldim={cert.gldim} ok={cert.verdict.ok}")
    return 0


def cmd_complete_slice(args) -> int:
    indices = [int(t) for t in args.slice.split(",")]
    coords = tilting.slice_from_indices(indices)
    K, F, verdict, trace = complete_slice(args.h, coords, args.n, args.side)
    payload = {
        "kupisch": list(K.entries),
        "fracturing": F.to_json(),
        "verdict": verdict.to_json(),
        "sides": classify_sides(K, args.n, F, verdict),
        "trace": [step.to_json() for step in trace],
    }
    _emit(payload, args.json,
          f"{format_series(K)} ({args.side} {args.n}-cluster-tilting)")
    return 0


def cmd_fractures(args) -> int:
    K = _series_arg(args.kupisch)
    payload = {
        "kupisch": list(K.entries),
        "left_heights": sorted(abutments.left_abutment_heights(K)),
        "right_heights": sorted(abutments.right_abutment_heights(K)),
        "abutments": [abutments.abutment_to_json(side, h, K)
                      for side, heights in
                      (("left", abutments.left_abutment_heights(K)),
                       ("right", abutments.right_abutment_heights(K)))
                      for h in sorted(heights)],
    }
    lines = [f"left heights:  {payload['left_heights']}",
             f"right heights: {payload['right_heights']}"]
    if args.side and args.height:
        fnd = abutments.foundation(K, args.side, args.height)
        footed = {x: abutments.footing_to_ka(K, args.side, args.height, x)
                  for x in fnd}
        fractures = []
        for cand in tilting.enumerate_tilting(args.height):
            back = sorted(k for k, v in footed.items() if v in set(cand))
            fractures.append(
                is_fracture(K, args.side, args.height, back).to_json())
        payload["foundation"] = [list(x) for x in fnd]
        payload["fractures"] = fractures
        lines.append(f"foundation:    {fnd}")
        lines.append(f"{len(fractures)} fractures of height {args.height}")
        for fr in fractures:
            lines.append(f"  level {fr['level']}: {fr['coords']}")
    _emit(payload, args.json, "\n".join(lines))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="nakayama",
        description="Representation theory of acyclic Nakayama algebras: "
                    "AR quivers, gluing, fractures and n-cluster-tilting.")
    sub = p.add_subparsers(dest="command", required=True)

    def series_opt(sp, required=True):
        sp.add_argument("--kupisch", required=required,
                        help="series like 2,3,3,1 or 2^6,3^13,1; - for stdin")
        sp.add_argument("--json", action="store_true",
                        help="machine-readable output")

    sp = sub.add_parser("validate", help="validate a Kupisch series")
    series_opt(sp)
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("ar-quiver", help="render the AR quiver")
    series_opt(sp)
    sp.add_argument("--format", default="ascii",
                    choices=["ascii", "dot", "tikz", "json"])
    sp.add_argument("--labels", default="coords",
                    choices=["coords", "dims", "none"])
    sp.add_argument("--highlight", help="JSON list of [i,j] to encircle")
    sp.set_defaults(func=cmd_ar_quiver)

    sp = sub.add_parser("check-nct", help="n-cluster-tilting check")
    series_opt(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_check_nct)

    sp = sub.add_parser("check-fractured", help="fractured subcategory check")
    series_opt(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--fracturing",
                    help='JSON {"TL": {...}, "TR": {...}}; defaults to the '
                         "projective/injective fracturing")
    sp.add_argument("--candidate",
                    help="JSON list of [i,j]: re-verify this candidate "
                         "instead of generating one")
    sp.set_defaults(func=cmd_check_fractured)

    sp = sub.add_parser("glue", help="glue two series along an abutment")
    sp.add_argument("--b", required=True, help="series providing the right abutment")
    sp.add_argument("--a", required=True, help="series providing the left abutment")
    sp.add_argument("--height", type=int, required=True)
    sp.add_argument("--check", action="store_true",
                    help="also verify the gluing invariants")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_glue)

    sp = sub.add_parser("construct-nd",
                        help="certified algebra for a supported (n, d)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--emit", default="certificate",
                    choices=["quiver", "kupisch", "certificate"])
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_construct_nd)

    sp = sub.add_parser("complete-slice",
                        help="complete a slice into a one-sided "
                             "cluster-tilting algebra")
    sp.add_argument("--h", type=int, required=True)
    sp.add_argument("--slice", required=True,
                    help="index sequence i_1,...,i_h, e.g. 2,2,1,1,1")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--side", required=True, choices=["left", "right"])
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_complete_slice)

    sp = sub.add_parser("fractures",
                        help="list abutment heights and enumerate fractures")
    series_opt(sp)
    sp.add_argument("--side", choices=["left", "right"])
    sp.add_argument("--height", type=int)
    sp.set_defaults(func=cmd_fractures)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (CliError, KupischError, ValueError, KeyError,
            json.JSONDecodeError) as exc:
        payload = {"error": str(exc)}
        if getattr(args, "json", False):
            print(json.dumps(payload, sort_keys=True))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
