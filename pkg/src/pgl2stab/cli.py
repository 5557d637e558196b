"""Command-line interface: ``pgl2stab {classify,stabilizer,orbit,scan}``.

Exit codes: 0 success, 1 usage or parse error, 2 verification mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .classify import classify_lambda, classify_set
from .fields import FieldError, field_make
from .projline import INF, PointSet, cross_ratio_orbit, format_point, parse_point
from .scan import CSV_COLUMNS, run_scan
from .stabgroup import cycle_notation, stabilizer

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _parse_lambda(K, text):
    lam = parse_point(K, text)
    if lam is INF:
        raise UsageError("lambda must be a field element, not inf")
    if lam.is_zero() or lam == K.one:
        raise UsageError("lambda must avoid 0 and 1")
    return lam


def render_classification(c, fmt, extra=None) -> str:
    data = c.to_json()
    if extra:
        data.update(extra)
    if fmt == "json":
        return json.dumps(data, indent=2) + "\n"
    if fmt == "csv":
        return _csv(CSV_COLUMNS, [[data["field"], c.field.order or "", data["lambda"],
                                   data["group_type"], data["order"], data["theorem_case"]]])
    lines = [
        f"field:        {data['field']}",
        f"lambda:       {data['lambda']}",
        f"group type:   {data['group_type']} (order {data['order']})",
        f"theorem case: {data['theorem_case']}",
        f"orbit:        {', '.join(data['orbit_values'])}",
        f"distinct:     {data['distinct_count']}",
    ]
    if extra and "set" in extra:
        lines.insert(1, f"set:          {{{', '.join(extra['set'])}}}")
    return "\n".join(lines) + "\n"


def cmd_classify(args) -> str:
    K = field_make(args.field)
    if (args.set is None) == (args.lambda_ is None):
        raise UsageError("give exactly one of --lambda or --set")
    if args.set is not None:
        E = PointSet.parse(K, args.set)
        if len(E) != 4:
            raise UsageError(f"--set needs exactly 4 points, got {len(E)}")
        c = classify_set(E)
        return render_classification(c, args.format, {"set": [format_point(x) for x in E]})
    return render_classification(classify_lambda(K, _parse_lambda(K, args.lambda_)), args.format)


def cmd_stabilizer(args) -> str:
    K = field_make(args.field)
    E = PointSet.parse(K, args.set)
    g = stabilizer(E)
    if args.format == "json":
        return json.dumps(g.to_json(), indent=2) + "\n"
    if args.format == "csv":
        return _csv(("formula", "a", "b", "c", "d", "perm"),
                    [[h.formula(), *h.to_json(), cycle_notation(g.perms[h])] for h in g])
    lines = [
        f"field:      {K.spec}",
        f"set:        {E}",
        f"group type: {g.group_type.value}",
        f"order:      {'infinite' if g.order is None else g.order}",
    ]
    if g.witness:
        lines.append(f"family:     {g.witness}")
    for h in g:
        coeffs = ", ".join(h.to_json())
        lines.append(f"  {h.formula():<32} [{coeffs}]  {cycle_notation(g.perms[h])}")
    return "\n".join(lines) + "\n"


def cmd_orbit(args) -> str:
    K = field_make(args.field)
    orbit = cross_ratio_orbit(_parse_lambda(K, args.lambda_))
    values = [str(v) for v in orbit.values]
    if args.format == "json":
        return json.dumps({
            "field": K.spec,
            "lambda": values[0],
            "orbit_values": values,
            "distinct_count": orbit.distinct_count,
            "stabilizer_order": orbit.stabilizer_order,
        }, indent=2) + "\n"
    if args.format == "csv":
        return _csv(("index", "value"), [[f"c{i}", v] for i, v in enumerate(values, 1)])
    lines = [f"c{i} = {v}" for i, v in enumerate(values, 1)]
    lines.append(f"distinct values: {orbit.distinct_count}")
    lines.append(f"stabilizer order: {orbit.stabilizer_order}")
    return "\n".join(lines) + "\n"


def cmd_scan(args):
    report = run_scan(args.max_p, args.include_quadratic, args.workers)
    if args.format == "json":
        out = json.dumps(report.to_json(), indent=2) + "\n"
    elif args.format == "csv":
        out = report.to_csv()
    else:
        out = report.to_text()
    return out, (EXIT_OK if report.ok else EXIT_MISMATCH)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pgl2stab", description=(
        "Stabilizers in PGL2(K) of finite subsets of the projective line."))
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, fmt_default="text"):
        p.add_argument("--format", choices=("text", "json", "csv"), default=fmt_default)
        p.add_argument("--output", metavar="PATH", help="write to PATH instead of stdout")

    p = sub.add_parser("classify", help="group type of G_E for a 4-point set or a lambda")
    p.add_argument("--field", required=True, help="Q, F<p> or F<p>^2")
    p.add_argument("--lambda", dest="lambda_", metavar="LAMBDA")
    p.add_argument("--set", help="four comma-separated points, e.g. inf,0,1,-1")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("stabilizer", help="list the elements of G_E for 1 to 4 points")
    p.add_argument("--field", required=True)
    p.add_argument("--set", required=True)
    common(p)
    p.set_defaults(func=cmd_stabilizer)

    p = sub.add_parser("orbit", help="the six cross-ratios of (inf, 0, 1, lambda)")
    p.add_argument("--field", required=True)
    p.add_argument("--lambda", dest="lambda_", metavar="LAMBDA", required=True)
    common(p)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("scan", help="compare closed form and brute force over finite fields")
    p.add_argument("--max-p", type=int, default=31)
    p.add_argument("--include-quadratic", action="store_true",
                   help="also scan F_p^2 for primes p = 2 mod 3")
    p.add_argument("--workers", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except (UsageError, FieldError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out, code = result if isinstance(result, tuple) else (result, EXIT_OK)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(out)
        except OSError as exc:
            print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
            return EXIT_USAGE
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
