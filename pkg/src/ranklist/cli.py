"""Command-line workbench: bounds tables, witnesses, oracle runs, acceptance.

Exit codes: 0 ok, 2 parameter error, 3 budget exceeded, 4 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from ranklist import acceptance, bounds, oracle
from ranklist.errors import BadParameters, RanklistError, VerificationFailed
from ranklist.ffield import FieldContext
from ranklist.gabidulin import GabidulinCode, RankVector, rank_distance
from ranklist.witness import (
    DEFAULT_WORK_LIMIT,
    Witness,
    build_witness,
    verify_witness,
    witness_code,
)

EXIT_OK = 0
TABLE_DIGITS = 40

BOUND_COLUMNS = [
    "q", "m", "n", "k", "d", "tau", "eps", "bmd_radius", "johnson_radius", "johnson_ceil",
    "tau_lb", "tau_lb_ceil", "lower_exact", "lower_exp_form", "lower_trivial",
    "upper_exact_paper", "upper_exact_safe", "upper_simplified", "al_special",
]
TABLE_COLUMNS = [
    ("n", "n"), ("k", "k"), ("d", "d"), ("tau", "tau"), ("bmd_radius", "tau_BMD"),
    ("johnson_ceil", "tau_J"), ("tau_lb_ceil", "tau_LB"), ("lower_exact", "lower"),
    ("lower_exp_form", "lower_exp"), ("upper_exact_paper", "upper_paper"),
    ("upper_exact_safe", "upper_safe"), ("upper_simplified", "upper_simpl"), ("al_special", "AL"),
]


# ---------------------------------------------------------------------------
# parameter resolution


def _field(args) -> FieldContext:
    if args.field_spec:
        return FieldContext.load(args.field_spec)
    if args.m is None:
        raise BadParameters("--m (or --field-spec) is required")
    return FieldContext(args.q, args.m)


def _code_params(args) -> tuple[int, int, int, int]:
    """(q, m, n, k) from --code-spec / --field-spec / flags, without building a field."""
    if args.code_spec:
        spec = json.loads(Path(args.code_spec).read_text())
        f = spec["field"]
        return int(f["p"]), int(f["m"]), int(spec["n"]), int(spec["k"])
    if args.n is None or args.k is None:
        raise BadParameters("--n and --k (or --code-spec) are required")
    if args.field_spec:
        f = json.loads(Path(args.field_spec).read_text())
        return int(f["p"]), int(f["m"]), args.n, args.k
    m = args.m if args.m is not None else args.n
    return args.q, m, args.n, args.k


def _code(args) -> GabidulinCode:
    if args.code_spec:
        return GabidulinCode.load(args.code_spec)
    if args.n is None or args.k is None:
        raise BadParameters("--n and --k (or --code-spec) are required")
    return GabidulinCode(_field(args), args.n, args.k)


def _taus(args, d: int) -> list[int]:
    if args.tau is not None:
        return [args.tau]
    if args.tau_max is not None:
        return list(range(args.tau_max + 1))
    return list(range(d))


def _budget(args) -> oracle.OracleBudget:
    return oracle.OracleBudget(args.budget) if args.budget is not None else oracle.OracleBudget()


# ---------------------------------------------------------------------------
# rendering


def _cell(value, q: int) -> str:
    if value is None:
        return "-"
    if isinstance(value, float):
        return f"{value:.6f}"
    s = str(value)
    if s.isdigit() and len(s) > TABLE_DIGITS:
        x = int(s)
        e = bounds.exponent_floor(x, q)
        form = f"{q}^{e}" if q**e == x else f">= {q}^{e}"
        return f"{s[:TABLE_DIGITS]}... (q^E form: {form})"
    return s


def render_rows(rows: list[dict], columns: list[str], fmt: str, q: int = 2, headers=None) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=columns, extrasaction="ignore", lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({c: "" if r.get(c) is None else r.get(c) for c in columns})
        return buf.getvalue().rstrip("\n")
    headers = headers or columns
    table = [[_cell(r.get(c), q) for c in columns] for r in rows]
    widths = [max(len(h), *(len(t[i]) for t in table)) if table else len(h) for i, h in enumerate(headers)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(headers, widths))]
    lines += ["  ".join(v.rjust(w) for v, w in zip(t, widths)) for t in table]
    return "\n".join(lines)


def _emit(text: str, args) -> None:
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)


# ---------------------------------------------------------------------------
# subcommands


def cmd_bounds(args) -> int:
    q, m, n, k = _code_params(args)
    d = n - k + 1
    rows = [bounds.bound_report(q, m, n, k, tau, args.eps).to_dict() for tau in _taus(args, d)]
    if args.format == "table":
        cols = [c for c, _ in TABLE_COLUMNS]
        text = render_rows(rows, cols, "table", q, headers=[h for _, h in TABLE_COLUMNS])
    else:
        text = render_rows(rows, BOUND_COLUMNS if args.format == "csv" else None, args.format, q)
    _emit(text, args)
    return EXIT_OK


def cmd_witness(args) -> int:
    if args.tau is None:
        raise BadParameters("--tau is required")
    if args.code_spec:
        base = GabidulinCode.load(args.code_spec)
        code = witness_code(base.field, base.n, base.k)
    else:
        if args.n is None or args.k is None:
            raise BadParameters("--n and --k (or --code-spec) are required")
        code = witness_code(_field(args), args.n, args.k)
    limit = args.budget if args.budget is not None else DEFAULT_WORK_LIMIT
    w = build_witness(code, args.tau, work_limit=limit)
    report = verify_witness(w)
    lemma = oracle.lemma1_check(w.r, w.codeword_list, code.d)
    data = w.to_dict(report)
    data["lemma1"] = lemma.to_dict()
    _emit(json.dumps(data, indent=2), args)
    print(
        f"witness: {report.size} codewords at rank distance {w.tau} "
        f"(required {report.required}); verified={report.passed}; lemma1={lemma.passed}",
        file=sys.stderr,
    )
    if not (report.passed and lemma.passed):
        raise VerificationFailed("; ".join(report.failures) or "lemma1 violation")
    return EXIT_OK


def _oracle_list_size(args) -> dict:
    budget = _budget(args)
    if args.witness:
        w = Witness.load(args.witness)
        code, r, tau, listed = w.code, w.r, w.tau, w.codeword_list
    else:
        if args.r is None or args.tau is None:
            raise BadParameters("list-size needs --witness, or code parameters with --r and --tau")
        code = _code(args)
        r = RankVector(code.field, [int(x) for x in args.r.split(",")])
        tau, listed = args.tau, []
    res = oracle.list_size_at(code, r, tau, budget)
    found = set(res.codewords)
    out = {
        "op": "list-size",
        "parameters": {"q": code.q, "m": code.m, "n": code.n, "k": code.k, "d": code.d, "tau": tau},
        "r": r.tolist(),
        "count": str(res.count),
        "codewords": [c.tolist() for c in res.codewords],
        "distances": res.distances,
        "budget_used": str(budget.used),
        "budget": str(budget.max_enumerations),
    }
    checks = {}
    if listed:
        checks["covers_witness_list"] = all(c in found for c in listed)
        checks["count_at_least_witness"] = res.count >= len(listed)
    if tau < code.d:
        up = bounds.upper_bound(code.q, code.m, code.n, code.k, tau)
        out["upper_bound_safe"] = str(up.safe)
        checks["within_upper_bound"] = res.count <= up.safe
    out["checks"] = checks
    out["agree"] = all(checks.values())
    return out


def _oracle_max_list(args) -> dict:
    code = _code(args)
    d = code.d
    tau = args.tau if args.tau is not None else min(d - 1, bounds.bmd_radius(d) + 1)
    budget = _budget(args)
    res = oracle.max_list_size(code, tau, budget)
    up = bounds.upper_bound(code.q, code.m, code.n, code.k, tau)
    out = {
        "op": "max-list",
        "parameters": {"q": code.q, "m": code.m, "n": code.n, "k": code.k, "d": d, "tau": tau},
        "max_list_size": str(res.max_size),
        "argmax": res.argmax.tolist(),
        "histogram": {str(key): str(v) for key, v in res.histogram.items()},
        "upper_bound_safe": str(up.safe),
        "budget_used": str(budget.used),
        "budget": str(budget.max_enumerations),
    }
    checks = {"within_upper_bound": res.max_size <= up.safe}
    if code.m % code.n == 0:
        lo = bounds.lower_bound(code.q, code.m, code.n, code.k, tau)
        out["lower_bound"] = str(lo.exact)
        checks["above_lower_bound"] = res.max_size >= lo.exact
    out["checks"] = checks
    out["agree"] = all(checks.values())
    return out


def _oracle_ball_volume(args) -> dict:
    if args.m is None or args.n is None or args.tau is None:
        raise BadParameters("ball-volume needs --m, --n and --tau")
    budget = _budget(args)
    brute = oracle.ball_volume_brute(args.m, args.n, args.tau, args.q, budget)
    formula = bounds.ball_volume(args.m, args.n, args.tau, args.q)
    return {
        "op": "ball-volume",
        "parameters": {"q": args.q, "m": args.m, "n": args.n, "tau": args.tau},
        "brute_force": str(brute),
        "formula": str(formula),
        "agree": brute == formula,
        "budget_used": str(budget.used),
        "budget": str(budget.max_enumerations),
    }


def _oracle_lemma1(args) -> dict:
    if not args.witness:
        raise BadParameters("lemma1 needs --witness")
    w = Witness.load(args.witness)
    rep = oracle.lemma1_check(w.r, w.codeword_list, w.code.d)
    out = {"op": "lemma1", "distances": [rank_distance(w.r, c) for c in w.codeword_list]}
    out.update(rep.to_dict())
    out["agree"] = rep.passed
    return out


ORACLE_OPS = {
    "list-size": _oracle_list_size,
    "max-list": _oracle_max_list,
    "ball-volume": _oracle_ball_volume,
    "lemma1": _oracle_lemma1,
}


def cmd_oracle(args) -> int:
    out = ORACLE_OPS[args.op](args)
    _emit(json.dumps(out, indent=2), args)
    if not out["agree"]:
        raise VerificationFailed(f"oracle {args.op} disagrees with the bounds")
    return EXIT_OK


def cmd_accept(args) -> int:
    only = None
    if args.only:
        only = [c.strip() for item in args.only for c in item.split(",") if c.strip()]
    try:
        results = acceptance.run_suite(only)
    except KeyError as exc:
        raise BadParameters(str(exc.args[0])) from None
    if args.format == "json":
        text = json.dumps([r.to_dict() for r in results], indent=2)
    elif args.format == "csv":
        text = render_rows([r.to_dict() for r in results], list(results[0].to_dict()), "csv")
    else:
        text = "\n".join(r.line() for r in results)
        text += f"\n{sum(r.passed for r in results)}/{len(results)} criteria passed"
    _emit(text, args)
    return EXIT_OK if all(r.passed for r in results) else VerificationFailed.exit_code


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int, default=2, help="prime base field size (default 2)")
    common.add_argument("--m", type=int, help="extension degree of F_{q^m}")
    common.add_argument("--n", type=int, help="code length")
    common.add_argument("--k", type=int, help="code dimension")
    common.add_argument("--tau", type=int, help="rank radius")
    common.add_argument("--tau-max", type=int, help="emit rows for tau = 0..TAU_MAX")
    common.add_argument("--eps", type=float, default=0.0, help="epsilon in [0, 1) for tau_LB (default 0)")
    common.add_argument("--format", choices=("json", "csv", "table"), default="table")
    common.add_argument("--out", help="write output to this path instead of stdout")
    common.add_argument("--budget", type=int, help="enumeration budget (env RANKLIST_BUDGET)")
    common.add_argument("--field-spec", help="JSON field spec {p, m, modulus?}")
    common.add_argument("--code-spec", help="JSON code spec {field, n, k, alphas?}")

    parser = argparse.ArgumentParser(prog="ranklist", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("bounds", parents=[common], help="bound tables").set_defaults(func=cmd_bounds)
    wp = sub.add_parser("witness", parents=[common], help="build and verify a lower-bound witness")
    wp.set_defaults(func=cmd_witness)
    op = sub.add_parser("oracle", parents=[common], help="brute-force oracle runs")
    op.add_argument("op", choices=sorted(ORACLE_OPS))
    op.add_argument("--witness", help="witness JSON written by `ranklist witness`")
    op.add_argument("--r", help="received word as comma-separated element values")
    op.set_defaults(func=cmd_oracle)
    ap = sub.add_parser("accept", parents=[common], help="run the acceptance suite")
    ap.add_argument("--only", action="append", help="criterion id (repeatable or comma-separated)")
    ap.set_defaults(func=cmd_accept)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except RanklistError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
