"""Command-line front end.

Subcommands: ``table`` (compute and render a family), ``oracle`` (the
same schema computed by brute force only), ``verify`` (run identity
checks), ``series`` (render series coefficients) and ``export`` (write a
rendered family to a file).  Data goes to stdout, logs to stderr; exit
codes: 0 success/all-pass, 1 verification failure, 2 usage error.

Computed tables may be cached on disk, one JSON file per (family, n);
entries carry a schema version and a content hash and are recomputed
when either fails to validate.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from dataclasses import replace
from typing import Optional

from qderiv import series as series_mod
from qderiv import special, verify
from qderiv.render import FORMATS, Table, render, table_from_payload, table_to_payload
from qderiv.tables import a_table, ac_table, b_table, oracle_a, oracle_ac, oracle_b
from qderiv.tcomb import BruteForceBoundError, alpha, beta

CACHE_SCHEMA = 1
CACHE_ENV = "QDERIV_CACHE_DIR"

TABLE_FAMILIES = (
    "a_small",
    "b_small",
    "A",
    "B",
    "Ac",
    "carlitz",
    "fib",
    "springer",
    "tq",
)
ORACLE_FAMILIES = ("A", "B", "Ac")

SERIES_NAMES = {
    "e_q": series_mod.e_q,
    "E_q": series_mod.E_q,
    "sin_q": series_mod.sin_q,
    "cos_q": series_mod.cos_q,
    "Sin_q": series_mod.Sin_q,
    "Cos_q": series_mod.Cos_q,
    "tan_q": series_mod.tan_q,
    "sec_q": series_mod.sec_q,
    "Sec_q": series_mod.Sec_q,
    "classical_tan": series_mod.classical_tan,
    "classical_sec": series_mod.classical_sec,
}


def _log(message: str) -> None:
    print(message, file=sys.stderr)


# -- family builders -----------------------------------------------------


def _triple_rows(table) -> tuple:
    rows = []
    for key in table.sorted_keys():
        n, k, a, b = key
        rows.append((n, k, a, b, table.entries[key]))
    return tuple(rows)


def build_family(family: str, n_max: int, brute_bound: Optional[int] = None) -> Table:
    if family == "a_small" or family == "b_small":
        tri = special.small_triangles(n_max)[0 if family == "a_small" else 1]
        rows = tuple((n, m, v) for (n, m), v in sorted(tri.rows.items()))
        return Table(family, n_max, (("n", "int"), ("m", "int"), ("value", "int")), rows)
    if family in ("A", "B"):
        table = a_table(n_max) if family == "A" else b_table(n_max)
        return Table(
            family,
            n_max,
            (("n", "int"), ("k", "int"), ("a", "int"), ("b", "int"), ("poly", "qpoly")),
            _triple_rows(table),
        )
    if family == "Ac":
        table = ac_table(n_max)
        rows = tuple((key[0], key[1], table.entries[key]) for key in table.sorted_keys())
        return Table(family, n_max, (("n", "int"), ("c", "parts"), ("poly", "qpoly")), rows)
    if family == "carlitz":
        table = special.carlitz_table(n_max)
        rows = tuple((n, j, poly) for (n, j), poly in sorted(table.items()))
        return Table(family, n_max, (("n", "int"), ("j", "int"), ("poly", "qpoly")), rows)
    if family == "fib":
        rows = []
        for n in range(n_max + 1):
            for m in range(n + 3):
                av, bv = alpha(n, m), beta(n, m)
                if av or bv:
                    rows.append((n, m, av, bv))
            rows.append((n, n + 3, sum(alpha(n, m) for m in range(n + 2)),
                         sum(beta(n, m) for m in range(n + 2))))
        # the final entry of each row (m = n+3, outside the triangle)
        # carries the Fibonacci row sums
        return Table(
            family,
            n_max,
            (("n", "int"), ("m", "int"), ("alpha", "int"), ("beta", "int")),
            tuple(rows),
            outer_var="x",
        )
    if family == "springer":
        rows = []
        for n in range(n_max + 1):
            poly = special.springer_poly_from_tables(n)
            rows.append((n, poly, poly.eval_at_one()))
        return Table(
            family,
            n_max,
            (("n", "int"), ("poly", "qpoly"), ("at_one", "int")),
            tuple(rows),
        )
    if family == "tq":
        rows = []
        for n in range(n_max + 1):
            poly = special.tq_tangent(n) if n % 2 else special.tq_secant(n)
            rows.append((n, "tangent" if n % 2 else "secant", poly))
        return Table(
            family,
            n_max,
            (("n", "int"), ("kind", "str"), ("poly", "xqpoly")),
            tuple(rows),
            outer_var="t",
        )
    raise ValueError("unknown family %r" % (family,))


def build_oracle(family: str, n_max: int, brute_bound: Optional[int]) -> Table:
    if family in ("A", "B"):
        table = oracle_a(n_max, brute_bound) if family == "A" else oracle_b(n_max, brute_bound)
        return Table(
            family,
            n_max,
            (("n", "int"), ("k", "int"), ("a", "int"), ("b", "int"), ("poly", "qpoly")),
            _triple_rows(table),
        )
    if family == "Ac":
        table = oracle_ac(n_max, brute_bound)
        rows = tuple((key[0], key[1], table.entries[key]) for key in table.sorted_keys())
        return Table(family, n_max, (("n", "int"), ("c", "parts"), ("poly", "qpoly")), rows)
    raise ValueError("unknown oracle family %r" % (family,))


# -- cache ----------------------------------------------------------------


def _payload_hash(payload: dict) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def _cache_path(cache_dir: str, family: str, n_max: int) -> str:
    return os.path.join(cache_dir, "%s_n%d.json" % (family, n_max))


def cache_load(cache_dir: str, family: str, n_max: int) -> Optional[Table]:
    path = _cache_path(cache_dir, family, n_max)
    try:
        with open(path, "r", encoding="utf-8") as handle:
            wrapper = json.load(handle)
        if wrapper.get("schema") != CACHE_SCHEMA:
            return None
        payload = wrapper["payload"]
        if wrapper.get("sha256") != _payload_hash(payload):
            _log("cache entry %s failed validation; recomputing" % path)
            return None
        return table_from_payload(payload)
    except (OSError, ValueError, KeyError, TypeError):
        return None


def cache_store(cache_dir: str, table: Table) -> None:
    os.makedirs(cache_dir, exist_ok=True)
    payload = table_to_payload(table)
    wrapper = {
        "schema": CACHE_SCHEMA,
        "family": table.family,
        "n_max": table.n_max,
        "payload": payload,
        "sha256": _payload_hash(payload),
    }
    path = _cache_path(cache_dir, table.family, table.n_max)
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(wrapper, handle, sort_keys=True)


def _cached_family(family: str, n_max: int, cache_dir: Optional[str]) -> Table:
    if cache_dir:
        cached = cache_load(cache_dir, family, n_max)
        if cached is not None:
            return cached
    table = build_family(family, n_max)
    if cache_dir:
        cache_store(cache_dir, table)
    return table


# -- argument parsing -------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qderiv",
        description="Exact q-tangent/secant derivative polynomial tables and checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="compute and print a polynomial family")
    p_table.add_argument("family", choices=TABLE_FAMILIES)
    p_table.add_argument("--n", type=int, required=True, dest="n_max")
    p_table.add_argument("--format", choices=FORMATS, default="text")
    p_table.add_argument("--cache-dir", default=None)

    p_oracle = sub.add_parser("oracle", help="brute-force recomputation of a family")
    p_oracle.add_argument("family", choices=ORACLE_FAMILIES)
    p_oracle.add_argument("--n", type=int, required=True, dest="n_max")
    p_oracle.add_argument("--format", choices=FORMATS, default="text")
    p_oracle.add_argument("--bound-bruteforce", type=int, default=None)

    p_verify = sub.add_parser("verify", help="run identity checks")
    p_verify.add_argument("ids", nargs="*", default=["all"])
    p_verify.add_argument("--n", type=int, default=None)
    p_verify.add_argument("--order", type=int, default=None)
    p_verify.add_argument("--bound-bruteforce", type=int, default=None)
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--format", choices=("json", "text"), default="json")

    p_series = sub.add_parser("series", help="print series coefficients")
    p_series.add_argument("name", choices=sorted(SERIES_NAMES))
    p_series.add_argument("--order", type=int, default=10)
    p_series.add_argument("--format", choices=("json", "text"), default="text")

    p_export = sub.add_parser("export", help="write a rendered family to a file")
    p_export.add_argument("family", choices=TABLE_FAMILIES)
    p_export.add_argument("--n", type=int, required=True, dest="n_max")
    p_export.add_argument("--format", choices=FORMATS, default="json")
    p_export.add_argument("--out", required=True)
    p_export.add_argument("--cache-dir", default=None)

    return parser


def _resolve_cache_dir(flag_value: Optional[str]) -> Optional[str]:
    if flag_value:
        return flag_value
    return os.environ.get(CACHE_ENV) or None


def _cmd_table(args) -> int:
    cache_dir = _resolve_cache_dir(args.cache_dir)
    table = _cached_family(args.family, args.n_max, cache_dir)
    sys.stdout.write(render(table, args.format))
    return 0


def _cmd_oracle(args) -> int:
    try:
        table = build_oracle(args.family, args.n_max, args.bound_bruteforce)
    except BruteForceBoundError as exc:
        _log("error: %s" % exc)
        return 2
    sys.stdout.write(render(table, args.format))
    return 0


def _cmd_verify(args) -> int:
    try:
        specs = verify.specs_for(args.ids)
    except KeyError as exc:
        _log("error: unknown check id %s" % exc)
        return 2
    bounds = verify.Bounds()
    if args.bound_bruteforce is not None:
        bounds = replace(bounds, brute_n=args.bound_bruteforce)
    reports = verify.run_checks(
        specs, bounds, jobs=max(1, args.jobs), n=args.n, order=args.order
    )
    failed = 0
    for report in reports:
        if args.format == "json":
            sys.stdout.write(report.to_json_line() + "\n")
        else:
            line = "%s %s %s" % (
                "PASS" if report.passed else "FAIL",
                report.id,
                json.dumps(report.params, sort_keys=True),
            )
            if report.first_discrepancy is not None:
                line += "  first_discrepancy=%s" % json.dumps(
                    report.first_discrepancy.to_json(), sort_keys=True
                )
            sys.stdout.write(line + "\n")
        if not report.passed:
            failed += 1
    return 1 if failed else 0


def _cmd_series(args) -> int:
    built = SERIES_NAMES[args.name](args.order)
    if args.format == "json":
        sys.stdout.write(json.dumps(built.to_json(), sort_keys=True) + "\n")
        return 0
    for n, coeff in enumerate(built.coeffs):
        sys.stdout.write("%d: %s\n" % (n, coeff))
    return 0


def _cmd_export(args) -> int:
    cache_dir = _resolve_cache_dir(args.cache_dir)
    table = _cached_family(args.family, args.n_max, cache_dir)
    with open(args.out, "w", encoding="utf-8") as handle:
        handle.write(render(table, args.format))
    _log("wrote %s" % args.out)
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "table":
        return _cmd_table(args)
    if args.command == "oracle":
        return _cmd_oracle(args)
    if args.command == "verify":
        return _cmd_verify(args)
    if args.command == "series":
        return _cmd_series(args)
    if args.command == "export":
        return _cmd_export(args)
    parser.error("unknown command")
    return 2


if __name__ == "__main__":
    sys.exit(main())
