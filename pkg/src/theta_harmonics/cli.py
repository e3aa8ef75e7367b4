"""Command-line interface.

Subcommands:

* ``mult CASE --w ...``: multiplicity of a single weight by the
  requested routes, as a flat JSON object;
* ``table CASE --max-entry K``: a full cross-engine table over a weight
  range, JSON or CSV, weights sorted lexicographically;
* ``oracle CASE --max-degree D``: the graded brute-force results
  (invariant series, per-degree decompositions, optional harmonic
  series) as JSON;
* ``verify cartan`` / ``verify group``: the Cartan identity suite and
  the centralizer group tables.

Exit codes: 0 success, 1 usage error, 2 a table/mult row where the
routes disagree, 3 a structural assertion failure.  Output is
deterministic: repeated runs (and any --jobs setting) produce identical
bytes.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import cartan, multiplicity, oracle
from .errors import (
    FormulaViolation,
    NegativeCoefficient,
    NegativeRemainder,
    NotRationalInteger,
    PreconditionViolated,
    ScaleExceeded,
    StructureMismatch,
    UnrepresentableRoot,
)
from .groups import central_scalars, e6_centralizer_group, e8_centralizer_group
from .multiplicity import E6Weight
from .weights import HighestWeight

_STRUCTURAL = (
    FormulaViolation,
    NegativeCoefficient,
    NegativeRemainder,
    NotRationalInteger,
    StructureMismatch,
    UnrepresentableRoot,
)


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    case: str | None = None
    weight: tuple | None = None
    max_entry: int | None = None
    method: str = "all"
    output: str = "json"
    max_degree: int | None = None
    harmonic: tuple | None = None
    jobs: int = 1
    verify_target: str | None = None


def _parse_weight(case: str, raw: str):
    try:
        values = tuple(int(v) for v in raw.split(","))
    except ValueError:
        raise UsageError(f"weight must be comma-separated integers, got {raw!r}")
    if case == "e6":
        if len(values) != 6:
            raise UsageError("three-qutrit weights take six entries m1,n1,m2,n2,m3,n3")
        try:
            return E6Weight(*values)
        except ValueError as exc:
            raise UsageError(str(exc))
    if len(values) != 8:
        raise UsageError("trivector weights take eight entries l1,...,l8")
    try:
        return HighestWeight(9, values + (0,))
    except ValueError as exc:
        raise UsageError(str(exc))


def _routes_for(case: str, method: str):
    if case == "e6":
        routes = {"closed": multiplicity.e6_closed_form, "averaging": multiplicity.e6_averaging}
    else:
        routes = {
            "closed": multiplicity.e8_closed_form,
            "averaging": multiplicity.e8_full_averaging,
            "direct": multiplicity.e8_direct_mu,
        }
    if method == "all":
        return routes
    if method not in routes:
        raise UsageError(f"method {method!r} is not available for case {case}")
    return {method: routes[method]}


def _run_mult(config: RunConfig):
    weight = config.weight
    routes = _routes_for(config.case, config.method)
    result = {name: fn(weight) for name, fn in routes.items()}
    if len(result) > 1:
        result["agree"] = len(set(result.values())) == 1
    text = json.dumps(result)
    code = 2 if result.get("agree") is False else 0
    return code, text


def _report_row(case, rep):
    row = {
        "weight": list(rep.weight),
        "dim": str(rep.dim),
        "closed": rep.closed,
        "averaging": rep.averaging,
    }
    if case == "e8":
        row["direct"] = rep.direct_mu
    row["agree"] = rep.agree
    return row


def _run_table(config: RunConfig):
    case = config.case
    if case == "e6":
        weights = multiplicity.e6_weight_range(config.max_entry)
        build = multiplicity.report_for_e6
    else:
        weights = multiplicity.e8_weight_range(config.max_entry)
        build = multiplicity.report_for_e8
    if config.jobs > 1:
        with ThreadPoolExecutor(max_workers=config.jobs) as pool:
            reports = list(pool.map(build, weights))
    else:
        reports = [build(w) for w in weights]
    code = 0 if all(r.agree for r in reports) else 2
    if config.output == "json":
        payload = {"case": case, "results": [_report_row(case, r) for r in reports]}
        return code, json.dumps(payload)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if case == "e6":
        head = ["m1", "n1", "m2", "n2", "m3", "n3"]
    else:
        head = [f"l{i}" for i in range(1, 9)]
    columns = ["closed", "averaging"] + (["direct"] if case == "e8" else [])
    writer.writerow(head + ["dim"] + columns + ["agree"])
    for r in reports:
        row = list(r.weight) + [str(r.dim), r.closed, r.averaging]
        if case == "e8":
            row.append(r.direct_mu)
        row.append("true" if r.agree else "false")
        writer.writerow(row)
    return code, buf.getvalue().rstrip("\n")


def _weight_json(case, key):
    if case == "e6":
        return [list(hw.entries) for hw in key]
    return list(key.entries)


def _run_oracle(config: RunConfig):
    case = config.case
    max_degree = config.max_degree
    if max_degree is None:
        max_degree = 6 if case == "e6" else oracle.e8_degree_cap()
    inv = oracle.invariant_series(case, max_degree)
    degrees = []
    for d in range(max_degree + 1):
        table = oracle.symd_weights(case, d)
        comps = oracle.decompose(table)
        entries = sorted(
            ([_weight_json(case, k), v] for k, v in comps.items()),
            key=lambda kv: kv[0],
        )
        degrees.append(
            {
                "degree": d,
                "dim_sym": str(oracle.dim_sym(case, d)),
                "dimension_conserved": oracle.dimension_conserved(case, d),
                "components": entries,
            }
        )
    payload = {
        "case": case,
        "max_degree": max_degree,
        "invariant_series": list(inv.coefficients),
        "degrees": degrees,
    }
    if config.harmonic is not None:
        weight = config.harmonic
        series = oracle.harmonic_series(case, weight, max_degree)
        payload["harmonic"] = {
            "weight": list(weight.as_tuple()) if case == "e6" else list(weight.entries[:8]),
            "series": list(series.coefficients),
        }
    return 0, json.dumps(payload)


def _cyc_json(value):
    return [str(c) for c in value.coefficients]


def _run_verify_group():
    out = {}
    g6 = e6_centralizer_group()
    scalars = sum(
        1 for t in g6 if all(f.is_scalar() for f in t.factors)
    )
    out["e6"] = {
        "order": g6.order,
        "scalar_triples": scalars,
        "elements": [
            [
                {"perm": list(f.perm), "entries": [_cyc_json(e) for e in f.entries]}
                for f in t.factors
            ]
            for t in g6
        ],
    }
    g8 = e8_centralizer_group()
    out["e8"] = {
        "order": g8.order,
        "central_scalars": len(central_scalars(g8)),
        "elements": [
            {"perm": list(g.perm), "entries": [_cyc_json(e) for e in g.entries]}
            for g in g8
        ],
    }
    return 0, json.dumps(out)


def _run_verify_cartan():
    lines = []
    ok = True
    for name, passed, detail in cartan.run_checks():
        tag = "PASS" if passed else "FAIL"
        ok = ok and passed
        lines.append(f"{tag} {name}" + (f" [{detail}]" if detail else ""))
    return (0 if ok else 3), "\n".join(lines)


def run(config: RunConfig):
    """Execute one parsed invocation; returns (exit_code, output_text)."""
    try:
        if config.subcommand == "mult":
            return _run_mult(config)
        if config.subcommand == "table":
            return _run_table(config)
        if config.subcommand == "oracle":
            return _run_oracle(config)
        if config.subcommand == "verify":
            if config.verify_target == "cartan":
                return _run_verify_cartan()
            return _run_verify_group()
        raise UsageError(f"unknown subcommand {config.subcommand!r}")
    except _STRUCTURAL as exc:
        return 3, f"structural check failed: {exc}"
    except ScaleExceeded as exc:
        raise UsageError(str(exc))
    except PreconditionViolated as exc:
        raise UsageError(str(exc))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser():
    parser = _Parser(prog="theta-harmonics", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_mult = sub.add_parser("mult", help="multiplicity of one weight")
    p_mult.add_argument("case", choices=["e6", "e8"])
    p_mult.add_argument("--w", required=True, help="comma-separated weight entries")
    p_mult.add_argument(
        "--method", default="all", choices=["closed", "averaging", "direct", "all"]
    )

    p_table = sub.add_parser("table", help="cross-engine table over a range")
    p_table.add_argument("case", choices=["e6", "e8"])
    p_table.add_argument("--max-entry", type=int, required=True)
    p_table.add_argument("--output", default="json", choices=["json", "csv"])
    p_table.add_argument("--jobs", type=int, default=1)

    p_oracle = sub.add_parser("oracle", help="graded brute-force decomposition")
    p_oracle.add_argument("case", choices=["e6", "e8"])
    p_oracle.add_argument("--max-degree", type=int, default=None)
    p_oracle.add_argument("--harmonic", default=None, help="weight for a harmonic series")

    p_verify = sub.add_parser("verify", help="structural verification suites")
    p_verify.add_argument("target", choices=["cartan", "group"])
    return parser


def parse_config(argv) -> RunConfig:
    args = _build_parser().parse_args(argv)
    if args.subcommand == "mult":
        weight = _parse_weight(args.case, args.w)
        if args.method == "direct" and args.case != "e8":
            raise UsageError("--method direct is only available for case e8")
        return RunConfig(
            subcommand="mult", case=args.case, weight=weight, method=args.method
        )
    if args.subcommand == "table":
        if args.max_entry < 0:
            raise UsageError("--max-entry must be nonnegative")
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        return RunConfig(
            subcommand="table",
            case=args.case,
            max_entry=args.max_entry,
            output=args.output,
            jobs=args.jobs,
        )
    if args.subcommand == "oracle":
        harmonic = None
        if args.harmonic is not None:
            harmonic = _parse_weight(args.case, args.harmonic)
        if args.max_degree is not None and args.max_degree < 0:
            raise UsageError("--max-degree must be nonnegative")
        return RunConfig(
            subcommand="oracle",
            case=args.case,
            max_degree=args.max_degree,
            harmonic=harmonic,
        )
    return RunConfig(subcommand="verify", verify_target=args.target)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        config = parse_config(argv)
        code, text = run(config)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    stream = sys.stderr if code == 3 else sys.stdout
    print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
