"""Command-line interface.

Subcommands ``table``, ``eval``, ``verify`` and ``dist``. Exit status is
0 on success, 1 when a verification fails, 2 on bad arguments.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from . import distribution as dist
from . import matrices as mat
from . import symfunc as sf
from . import triangles as tri
from .algebra import PolyParseError, PolyR, format_rational, poly_parse
from .triangles import Kind
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

TRIANGLE_KINDS = {k.value: k for k in Kind}
MATRIX_KINDS = {
    "U1r": mat.build_U1,
    "U2r": mat.build_U2,
    "A1": mat.build_A1,
    "A2": mat.build_A2,
}
ROUTES = ("recurrence", "explicit", "row-rec", "geom-rec", "from-r0", "stirling", "sigma", "h")

# routes available per kind family
_FIRST_ROUTES = {"recurrence", "row-rec", "from-r0", "stirling", "sigma"}
_SECOND_ROUTES = {"recurrence", "explicit", "geom-rec", "from-r0", "h"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _value_str(p: PolyR, r: Optional[int]) -> str:
    if r is not None:
        return str(p.eval(r))
    return str(p)


def _emit_records(records: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        json.dump(records, out, indent=2)
        out.write("\n")
        return
    if not records:
        return
    writer = csv.writer(out, lineterminator="\n")
    fields = list(records[0])
    writer.writerow(fields)
    for rec in records:
        writer.writerow([rec[f] for f in fields])


def cmd_table(args, out) -> int:
    if args.max_n < 0:
        raise UsageError("--max-n must be >= 0")
    if args.r is not None and args.r < 0:
        raise UsageError("--r must be >= 0")
    records = []
    if args.kind in TRIANGLE_KINDS:
        for n, k, p in tri.iter_entries(TRIANGLE_KINDS[args.kind], args.max_n):
            records.append({"n": n, "k": k, "value": _value_str(p, args.r)})
    else:
        size = args.max_n + 1
        if args.kind == "pascal":
            try:
                z = poly_parse(args.z)
            except PolyParseError as exc:
                raise UsageError(str(exc)) from exc
            m = mat.build_pascal(size, z)
        else:
            m = MATRIX_KINDS[args.kind](size)
        for i in range(size):
            for j in range(size):
                records.append({"n": i, "k": j, "value": _value_str(m[i, j], args.r)})
    _emit_records(records, args.format, out)
    return EXIT_OK


def evaluate_route(kind: Kind, n: int, k: int, route: str, r: Optional[int]) -> PolyR:
    """Compute one entry by exactly the named route.

    For the r = 0 kinds the shifted route is taken and then specialized at
    ``r = 0``, except ``from-r0`` which uses the collapsing sums.
    """
    allowed = _FIRST_ROUTES if kind.is_first else _SECOND_ROUTES
    if route not in allowed:
        raise UsageError(f"route {route!r} does not apply to kind {kind.value!r}")
    if not 0 <= k <= n:
        raise UsageError("need 0 <= k <= n")
    if route in ("row-rec", "geom-rec") and k == 0:
        raise UsageError(f"route {route!r} needs k >= 1")
    if not kind.has_r:
        if r not in (None, 0):
            raise UsageError(f"kind {kind.value!r} has no r parameter")
        if route == "from-r0":
            fn = tri.convert_u_from_ur if kind.is_first else tri.convert_U_from_Ur
            return fn(n, k)
        return PolyR.const(evaluate_route(kind.shifted, n, k, route, 0).eval(0))
    if route == "recurrence":
        return tri.entry(kind, n, k)
    if route == "explicit":
        if r is None:
            raise UsageError("route 'explicit' is numeric; pass --r")
        return PolyR.const(tri.explicit_second_kind(n, k, r))
    if route == "row-rec":
        return tri.row_recurrence_first(n, k)
    if route == "geom-rec":
        return tri.geometric_recurrence_second(n, k)
    if route == "from-r0":
        return tri.convert_ur_from_u(n, k) if kind.is_first else tri.convert_Ur_from_U(n, k)
    if route == "stirling":
        return tri.ur_via_stirling(n, k)
    if route == "sigma":
        return sf.triangle_as_sigma(n, n - k)
    return sf.triangle_as_h(k, n - k)


def cmd_eval(args, out) -> int:
    if args.kind not in TRIANGLE_KINDS:
        raise UsageError(f"unknown kind {args.kind!r}")
    if args.r is not None and args.r < 0:
        raise UsageError("--r must be >= 0")
    kind = TRIANGLE_KINDS[args.kind]
    p = evaluate_route(kind, args.n, args.k, args.route, args.r)
    value = _value_str(p, args.r)
    if args.format == "json":
        _emit_records([{"n": args.n, "k": args.k, "value": value, "route": args.route}], "json", out)
    else:
        out.write(value + "\n")
    return EXIT_OK


def parse_r_range(text: str) -> list[int]:
    """``"3"`` or ``"0..5"`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            values = list(range(int(lo), int(hi) + 1))
        else:
            values = [int(text)]
    except ValueError as exc:
        raise UsageError(f"bad --r value {text!r}") from exc
    if not values or min(values) < 0:
        raise UsageError(f"bad --r value {text!r}")
    return values


def cmd_verify(args, out) -> int:
    if args.max_n < 0:
        raise UsageError("--max-n must be >= 0")
    r_values = parse_r_range(args.r)
    checks = run_suite(args.suite, args.max_n, r_values)
    records = [
        {"suite": c.suite, "check": c.name, "status": c.status, "detail": c.detail} for c in checks
    ]
    failed = sum(c.failed for c in checks)
    if args.format == "json":
        _emit_records(records, "json", out)
    else:
        _emit_records(records, "csv", out)
    sys.stderr.write(f"{len(checks)} checks, {failed} failed\n")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_dist(args, out) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    if args.r < 0:
        raise UsageError("--r must be >= 0")
    d = dist.build_dist(args.n, args.r)
    fields: dict[str, object] = {
        "n": args.n,
        "r": args.r,
        "probs": [format_rational(p) for p in d.probs],
        "pmf": [format_rational(p) for p in d.pmf],
        "mean": format_rational(d.mean),
        "variance": format_rational(d.variance),
    }
    within = True
    if args.samples is not None:
        if args.samples < 1:
            raise UsageError("--samples must be >= 1")
        hist = dist.sample(d, args.samples, args.seed)
        emp = sum(k * c for k, c in enumerate(hist)) / args.samples
        band = dist.mean_band(d, args.samples)
        deviation = abs(emp - float(d.mean))
        within = deviation <= band
        fields.update(
            samples=args.samples,
            seed=args.seed,
            histogram=hist,
            empirical_mean=f"{emp:.6f}",
            deviation=f"{deviation:.6f}",
            band=f"{band:.6f}",
            within_band=within,
        )
    if args.format == "json":
        json.dump(fields, out, indent=2)
        out.write("\n")
    else:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["field", "value"])
        for key, val in fields.items():
            if isinstance(val, list):
                val = ",".join(str(v) for v in val)
            elif isinstance(val, bool):
                val = "true" if val else "false"
            writer.writerow([key, val])
    return EXIT_OK if within else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="rcentral", description="r-central factorial numbers with even indices")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(sp):
        sp.add_argument("--format", choices=("csv", "json"), default="csv")

    t = sub.add_parser("table", help="emit a whole triangle or matrix")
    t.add_argument("--kind", required=True, choices=[*TRIANGLE_KINDS, *MATRIX_KINDS, "pascal"])
    t.add_argument("--max-n", type=int, required=True)
    t.add_argument("--r", type=int, default=None, help="evaluate at this integer r")
    t.add_argument("--z", default="1*r", help="Pascal parameter as a polynomial in r")
    fmt(t)
    t.set_defaults(func=cmd_table)

    e = sub.add_parser("eval", help="one entry by a chosen route")
    e.add_argument("--kind", required=True, choices=list(TRIANGLE_KINDS))
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--route", choices=ROUTES, default="recurrence")
    e.add_argument("--r", type=int, default=None)
    fmt(e)
    e.set_defaults(func=cmd_eval)

    v = sub.add_parser("verify", help="run identity suites")
    v.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    v.add_argument("--max-n", type=int, default=12)
    v.add_argument("--r", default="0..5", help="integer or inclusive range a..b")
    fmt(v)
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("dist", help="exact Poisson-binomial law of |u_r(n, .)|")
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--r", type=int, default=0)
    d.add_argument("--samples", type=int, default=None)
    d.add_argument("--seed", type=int, default=0)
    fmt(d)
    d.set_defaults(func=cmd_dist)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"rcentral: error: {exc}\n")
        return EXIT_USAGE


def run(argv: Sequence[str]) -> tuple[int, str]:
    """Run the CLI in-process and capture stdout."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
