"""Command-line entry point.

Exit status: 0 on success, 1 when an input fails validation or an invariant
check (a JSON error goes to stdout), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import arrangement, constructions, enumeration, render, sweep
from .errors import PseudolineError, UsageError
from .seqcore import parse_sequence


def _dump(obj):
    return json.dumps(obj, separators=(",", ":"))


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _int_list(s):
    try:
        return [int(t) for t in s.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}")


def cmd_validate(args):
    seq = parse_sequence(_read(args.seq))
    print(_dump({"valid": True, "half_period": seq.half_period}))


def cmd_analyze(args):
    seq = parse_sequence(_read(args.seq))
    rep = arrangement.report_dict(seq, ks=args.rich, j_cap=args.credit)
    if args.json:
        print(_dump(rep))
        return
    print(f"n = {rep['n']}, half-period {rep['half_period']}"
          f" ({'nontrivial' if rep['nontrivial'] else 'trivial'},"
          f" {'simple' if rep['simple'] else 'not simple'})")
    print(f"vertices: {rep['vertex_count']}, multiplicities {rep['multiplicity_histogram']}")
    print(f"per-line vertex counts: {rep['per_line_vertex_counts']}  r_max = {rep['r_max']}")
    print(f"simple switches: {rep['simple_switch_count']}")
    for r in rep["rich"]:
        print(f"  k={r['k']:>3}  rich={r['count']:<5} bound_k5={r['bound_k5']} "
              f"bound_k8={r['bound_k8']} ok={r['ok']}")


def cmd_sweep(args):
    ps = sweep.parse_points(_read(args.pts), perturb=args.perturb)
    seq = sweep.circular_sequence(ps)
    out = {
        "n": ps.n,
        "half_period": seq.half_period,
        "direction_count": sweep.direction_count(ps),
        "permutations": [list(p) for p in seq.permutations],
    }
    out["directions_equal_half_period"] = out["direction_count"] == seq.half_period
    if args.stats:
        out["stats"] = sweep.stats_dict(sweep.point_stats(ps))
    if args.emit_seq:
        _write(args.emit_seq, seq.serialize())
    print(_dump(out))


def cmd_deltoid(args):
    d = constructions.deltoid(args.n)
    top, bound = constructions.deltoid_line_stat(d)
    out = {
        "n": d.n,
        "triples": len(d.triples),
        "doubles": len(d.doubles),
        "closed_form_triples": constructions.closed_form_triple_count(d.n),
        "tangent_lines": sorted(d.tangent_lines),
        "per_line_vertex_counts": list(d.per_line_vertex_counts),
        "max_per_line": top,
        "max_per_line_bound": arrangement.format_decimal(arrangement.Fraction(d.n, 2) + 3),
    }
    if args.svg:
        _write(args.svg, render.deltoid_svg(d))
    if args.seq:
        seq, order = constructions.deltoid_sequence(d, args.epsilon)
        _write(args.seq, seq.serialize())
        out["sequence_half_period"] = seq.half_period
        out["label_to_index"] = list(order)
    if args.json:
        out["triple_list"] = [list(t) for t in sorted(d.triples)]
        out["double_list"] = [list(t) for t in sorted(d.doubles)]
    print(_dump(out))


def cmd_construct(args):
    if args.kind == "longline":
        text = constructions.single_long_line_sequence(args.n).serialize()
    else:
        text = sweep.format_points(sweep.near_pencil(args.n))
    _write(args.output, text)


def cmd_enumerate(args):
    checks = tuple(c.strip() for c in args.check.split(",") if c.strip()) if args.check else ()
    checks = tuple("switch" if c == "simple_switch" else c for c in checks)
    mode = "simple" if args.simple else "all"
    if args.count_only:
        total = enumeration.count_sequences(args.n, args.simple)
        out = {
            "n": args.n,
            "mode": mode,
            "total": total,
            "min_half_period": enumeration.min_half_period_dp(args.n, args.simple),
            "counterexamples": [],
        }
    else:
        out = enumeration.verify_over_enumeration(args.n, checks, simple=args.simple).to_dict()
    print(_dump(out))


def cmd_render(args):
    seq = parse_sequence(_read(args.seq))
    opts = render.WiringOptions(wire_gap=args.wire_gap, step_gap=args.step_gap, labels=args.labels)
    _write(args.output, render.wiring_svg(seq, opts))


def build_parser():
    p = argparse.ArgumentParser(prog="pseudoline-lab",
                                description="Allowable sequences and pseudoline arrangements.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check a .seq file")
    s.add_argument("seq")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("analyze", help="crossing statistics of a .seq file")
    s.add_argument("seq")
    s.add_argument("--rich", type=_int_list, default=None, help="k values, e.g. 3,5,8")
    s.add_argument("--credit", type=int, default=255, metavar="JCAP")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("sweep", help="circular sequence of a .pts file")
    s.add_argument("pts")
    s.add_argument("--emit-seq", metavar="OUT")
    s.add_argument("--stats", action="store_true")
    s.add_argument("--perturb", action="store_true", help="rotate exactly until x-coordinates differ")
    s.set_defaults(func=cmd_sweep)

    s = sub.add_parser("deltoid", help="the deltoid arrangement on n lines")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--svg", metavar="OUT")
    s.add_argument("--seq", metavar="OUT")
    s.add_argument("--epsilon", type=float, default=1e-9)
    s.add_argument("--json", action="store_true", help="include the full vertex lists")
    s.set_defaults(func=cmd_deltoid)

    s = sub.add_parser("construct", help="named constructions")
    s.add_argument("kind", choices=["longline", "nearpencil"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("-o", "--output", default="-")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("enumerate", help="exhaustive enumeration with checks")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--simple", action="store_true")
    s.add_argument("--check", default="", help=",".join(enumeration.ALL_CHECKS))
    s.add_argument("--count-only", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("render", help="wiring diagram SVG of a .seq file")
    s.add_argument("seq")
    s.add_argument("-o", "--output", default="-")
    s.add_argument("--wire-gap", type=float, default=30)
    s.add_argument("--step-gap", type=float, default=60)
    s.add_argument("--labels", action="store_true")
    s.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        args.func(args)
    except UsageError as exc:
        print(_dump({"error": exc.name, "message": str(exc)}))
        return 2
    except OSError as exc:
        print(_dump({"error": "OSError", "message": str(exc)}))
        return 2
    except PseudolineError as exc:
        print(_dump({"error": exc.name, "message": str(exc)}))
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
