"""Command-line front end.

Output goes to stdout (or --out FILE) as JSON, CSV or text; diagnostics go to
stderr.  Single-shot commands emit an envelope {tool_version, config, records}
in JSON mode; scans emit one JSON object per line so they stream and diff
cleanly.  Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys

from . import __version__, bounds, factor, mahler, scan
from .errors import TrinotoolError
from .polycore import (
    FamilyForm,
    TrinomialSpec,
    all_roots,
    classify_real_roots,
    normalize,
    to_dense,
)
from .quadrature import QuadConfig

# let tokens like "-4,-3,3,4" or "-1+2j" pass as values, not option names
_NEGATIVE_VALUE = re.compile(r"^-\d[\d,.j+-]*$")


def _num(text: str):
    """Parse an int, float, or complex command-line number."""
    for caster in (int, float, complex):
        try:
            return caster(text)
        except ValueError:
            continue
    raise argparse.ArgumentTypeError(f"not a number: {text!r}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a comma-separated int list: {text!r}") from exc


def _jsonable(value):
    if isinstance(value, complex):
        if value.imag == 0:
            return value.real
        return str(value)
    if isinstance(value, tuple):
        return list(value)
    return value


def _clean(record: dict) -> dict:
    return {k: _jsonable(v) for k, v in record.items() if v is not None}


class _Output:
    def __init__(self, args):
        self.fmt = args.format
        self.path = args.out
        self.config = {}

    def emit(self, records: list[dict], jsonl: bool = False) -> None:
        records = [_clean(r) for r in records]
        if self.fmt == "json":
            if jsonl:
                text = "\n".join(json.dumps(r, sort_keys=True) for r in records)
                text += "\n" if records else ""
            else:
                envelope = {
                    "tool_version": __version__,
                    "config": {k: _jsonable(v) for k, v in self.config.items()},
                    "records": records,
                }
                text = json.dumps(envelope, indent=2, sort_keys=True) + "\n"
        elif self.fmt == "csv":
            buf = io.StringIO()
            keys: list[str] = []
            for r in records:
                for k in r:
                    if k not in keys:
                        keys.append(k)
            writer = csv.DictWriter(buf, fieldnames=keys, extrasaction="ignore")
            writer.writeheader()
            for r in records:
                writer.writerow({k: r.get(k, "") for k in keys})
            text = buf.getvalue()
        else:
            lines = []
            for r in records:
                lines.extend(f"{k} = {v}" for k, v in r.items())
                lines.append("")
            text = "\n".join(lines)
        if self.path:
            with open(self.path, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)


def _quad_config(args) -> QuadConfig:
    if args.tolerance is not None:
        return QuadConfig(abs_tol=args.tolerance)
    return QuadConfig()


def _measure_record(result: mahler.MeasureResult) -> dict:
    return {
        "method": result.method,
        "value": result.value,
        "log_value": result.log_value,
        "error_bound": result.error_bound,
    }


def _cmd_measure(args, out: _Output) -> int:
    spec = TrinomialSpec(args.n, args.m, args.a, args.b)
    records = []
    methods = ["roots", "jensen", "series"] if args.method == "all" else [args.method]
    for method in methods:
        if method == "roots":
            records.append(_measure_record(mahler.measure_from_roots(spec)))
        elif method == "jensen":
            records.append(_measure_record(mahler.measure_jensen(spec, _quad_config(args))))
        else:
            try:
                tol = args.tolerance if args.tolerance is not None else 1e-12
                records.append(_measure_record(mahler.series_measure(
                    args.n, args.m, args.a, args.b, tol=tol)))
            except TrinotoolError as exc:
                if args.method != "all":
                    raise
                records.append({"method": "series",
                                "error": f"{type(exc).__name__}: {exc}"})
    out.emit(records)
    return 0


def _cmd_house(args, out: _Output) -> int:
    spec = TrinomialSpec(args.n, args.m, args.a, args.b)
    out.emit([{"house": mahler.house(spec)}])
    return 0


def _cmd_roots(args, out: _Output) -> int:
    spec = TrinomialSpec(args.n, args.m, args.a, args.b)
    rs = all_roots(spec)
    out.config.update(residual_bound=rs.residual_bound, certified=rs.certified)
    records = [
        {"re": r.real, "im": r.imag, "modulus": abs(r)} for r in rs.roots
    ]
    if args.classify:
        form, flipped = normalize(args.n, args.m, args.a, args.b)
        labelled = classify_real_roots(form)
        out.config.update(family=form.family, family_a=form.a, flipped=flipped)
        records.extend({"label": name, "value": value} for name, value in labelled.entries)
    out.emit(records)
    return 0


def _cmd_factor(args, out: _Output) -> int:
    spec = TrinomialSpec(args.n, args.m, args.a, args.b)
    result = factor.factorize(to_dense(spec))
    out.config.update(content=result.content)
    out.emit([
        {"degree": p.degree, "coeffs": list(p.coeffs), "multiplicity": mult}
        for p, mult in result.factors
    ])
    return 0


def _cmd_irreducible(args, out: _Output) -> int:
    spec = TrinomialSpec(args.n, args.m, args.a, args.b)
    verdict = factor.is_irreducible(to_dense(spec))
    rec = {"verdict": verdict.verdict, "certificate": verdict.certificate}
    if verdict.witness is not None:
        rec["witness_coeffs"] = list(verdict.witness.coeffs)
        rec["witness_degree"] = verdict.witness.degree
    out.emit([rec])
    return 0


def _cmd_limit(args, out: _Output) -> int:
    case = mahler.limit_case(args.a, args.b)
    result = mahler.limit_measure(args.a, args.b, _quad_config(args))
    rec = {
        "case": case.case.value,
        "gamma": case.gamma,
        "value": result.value,
        "log_value": result.log_value,
        "error_bound": result.error_bound,
    }
    out.emit([rec])
    return 0


def _cmd_series(args, out: _Output) -> int:
    tol = args.tol if args.tol is not None else (args.tolerance or 1e-12)
    result = mahler.series_measure(args.n, args.m, args.a, args.b,
                                   tol=tol, k_max=args.kmax)
    records = [_measure_record(result)]
    if args.trace:
        records.extend(
            {"k": t.k, "closed_form": t.closed_form} for t in result.terms
        )
    out.emit(records)
    return 0


def _cmd_bounds(args, out: _Output) -> int:
    form = FamilyForm(args.family, args.n, args.m, args.a)
    report = bounds.house_lower_bound(form)
    out.emit([{
        "family": form.family, "n": form.n, "m": form.m, "a": form.a,
        "bound": report.bound, "t0": report.t0, "house": report.house,
        "satisfied": report.satisfied, "reason": report.reason,
    }])
    return 0


def _cmd_compare_bounds(args, out: _Output) -> int:
    cb = bounds.comparison_bounds(args.n)
    out.emit([{
        "n": cb.n,
        "dimitrov": cb.dimitrov,
        "matveev": cb.matveev,
        "rhin_wu": cb.rhin_wu,
        "voutier": cb.voutier,
        "verger_gaugry": cb.verger_gaugry,
        "verger_gaugry_note": "applies to the reciprocal-of-root family of z^n + z - 1",
        "smyth_boyd_house": cb.smyth_boyd_house,
        "trivial_mn": cb.trivial_mn,
    }])
    return 0


def _cmd_extremal(args, out: _Output) -> int:
    form = FamilyForm(args.family, args.n, args.m, args.a)
    verdict = bounds.check_extremality(form)
    out.emit([{
        "family": form.family, "n": form.n, "m": form.m, "a": form.a,
        "house": verdict.house, "threshold": verdict.threshold,
        "verdict": verdict.verdict, "sign_certificate": verdict.sign_certificate,
    }])
    return 0


def _cmd_scan(args, out: _Output) -> int:
    hits = scan.scan_conjecture(
        n_max=args.n_max,
        a_values=args.a,
        signs=args.signs,
        coprime_only=not args.all_m,
        threads=args.threads,
        cache_path=args.cache,
    )
    out.config.update(n_max=args.n_max, a_values=sorted(args.a),
                      signs=sorted(args.signs), coprime_only=not args.all_m)
    # the scan certifies completeness only up to n_max; record the bound
    sys.stderr.write(
        f"scan: n_max={args.n_max} a={sorted(args.a)} signs={sorted(args.signs)} "
        f"coprime_only={not args.all_m} -> {len(hits)} reducible/errored rows "
        f"(complete up to n_max only)\n"
    )
    out.emit([scan.record_to_dict(r, include_elapsed=False) for r in hits],
             jsonl=True)
    return 0


def _cmd_converge(args, out: _Output) -> int:
    rows = scan.convergence_table(args.a, args.b, args.n, args.m_rule)
    out.emit([
        {"n": r.n, "m": r.m, "measure": r.measure, "limit": r.limit, "gap": r.gap}
        for r in rows
    ])
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--out", metavar="FILE", default=None)
    common.add_argument("--cache", metavar="FILE", default=None)
    common.add_argument("--threads", type=int, default=None,
                        help=f"worker processes (default ${scan.THREADS_ENV} or 1)")
    common.add_argument("--seed", type=int, default=0,
                        help="offset for the deterministic factorization seed")
    common.add_argument("--tolerance", type=float, default=None,
                        help="quadrature/series absolute tolerance override")

    parser = argparse.ArgumentParser(
        prog="trinotool",
        description="Mahler measure, irreducibility, house bounds and "
                    "reducibility scans for trinomials z^n + a z^m + b.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, parents=[common], **kwargs)
        p._negative_number_matcher = _NEGATIVE_VALUE
        p.set_defaults(func=func)
        return p

    p = add("measure", _cmd_measure, help="Mahler measure of z^n + a z^m + b")
    for arg in ("n", "m"):
        p.add_argument(arg, type=int)
    for arg in ("a", "b"):
        p.add_argument(arg, type=_num)
    p.add_argument("--method", choices=("roots", "jensen", "series", "all"),
                   default="roots")

    p = add("house", _cmd_house, help="largest root modulus")
    for arg in ("n", "m"):
        p.add_argument(arg, type=int)
    for arg in ("a", "b"):
        p.add_argument(arg, type=_num)

    p = add("roots", _cmd_roots, help="all complex roots")
    for arg in ("n", "m"):
        p.add_argument(arg, type=int)
    for arg in ("a", "b"):
        p.add_argument(arg, type=_num)
    p.add_argument("--classify", action="store_true",
                   help="label the real roots of the normalised family form")

    p = add("factor", _cmd_factor, help="factor an integer trinomial over Q")
    for arg in ("n", "m", "a", "b"):
        p.add_argument(arg, type=int)

    p = add("irreducible", _cmd_irreducible, help="irreducibility verdict with certificate")
    for arg in ("n", "m", "a", "b"):
        p.add_argument(arg, type=int)

    p = add("limit", _cmd_limit, help="large-n limit of the measure for fixed (a, b)")
    for arg in ("a", "b"):
        p.add_argument(arg, type=_num)

    p = add("series", _cmd_series, help="exact-series measure (needs |a|-|b| >= 1)")
    for arg in ("n", "m"):
        p.add_argument(arg, type=int)
    for arg in ("a", "b"):
        p.add_argument(arg, type=_num)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--kmax", type=int, default=10000)
    p.add_argument("--trace", action="store_true", help="emit every series term")

    p = add("bounds", _cmd_bounds, help="house lower bound report for a family form")
    for arg in ("n", "m"):
        p.add_argument(arg, type=int)
    p.add_argument("a", type=float)
    p.add_argument("--family", choices=("R", "S", "T"), required=True)

    p = add("compare-bounds", _cmd_compare_bounds, help="literature house constants at degree n")
    p.add_argument("n", type=int)

    p = add("extremal", _cmd_extremal, help="extremality verdict for a family form")
    for arg in ("n", "m"):
        p.add_argument(arg, type=int)
    p.add_argument("a", type=float)
    p.add_argument("--family", choices=("R", "S", "T"), required=True)

    p = add("scan", _cmd_scan, help="reducibility scan over n <= n_max")
    p.add_argument("--n-max", dest="n_max", type=int, required=True)
    p.add_argument("--a", type=_int_list, required=True,
                   help="comma-separated middle coefficients, e.g. -4,-3,3,4")
    p.add_argument("--signs", type=_int_list, default=[-1, 1],
                   help="comma-separated constant terms from {-1,1}")
    p.add_argument("--all-m", action="store_true",
                   help="include m with gcd(m, n) > 1")

    p = add("converge", _cmd_converge, help="measure vs limit along a degree sequence")
    p.add_argument("--a", type=_num, required=True)
    p.add_argument("--b", type=_num, required=True)
    p.add_argument("--n", type=_int_list, required=True)
    p.add_argument("--m-rule", dest="m_rule", default="fixed:1",
                   help="fixed:<m>, last, or half")

    return parser


def cli_dispatch(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    factor.set_edf_seed_offset(args.seed)
    out = _Output(args)
    out.config.update(command=args.command)
    for key in ("n", "m", "a", "b", "n_max", "method", "family", "m_rule",
                "threads", "seed", "tolerance"):
        if hasattr(args, key) and getattr(args, key) is not None:
            out.config[key] = getattr(args, key)

    try:
        return args.func(args, out)
    except (TrinotoolError, ValueError, OverflowError, OSError) as exc:
        if args.format == "json":
            sys.stderr.write(json.dumps(
                {"error": {"type": type(exc).__name__, "message": str(exc)}}
            ) + "\n")
        else:
            sys.stderr.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(cli_dispatch())
