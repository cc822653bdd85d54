"""Command line front end.

Commands: ``eval``, ``zeros``, ``count``, ``audit``, ``params``,
``bernoulli``. Exit codes: 0 success, 2 parameter errors, 3 precision
errors, 4 inconclusive winding counts, 5 refinement failures under
``--strict-refine``. The default target accuracy comes from the
``ZETAGB_DEFAULT_EPS`` environment variable (1e-8 when unset).
"""

from __future__ import annotations

import argparse
import csv
import io
import logging
import math
import os
import sys

from .audit import DEFAULT_SAMPLE_SEED, audit_range, render_text, report_to_json
from .bernoulli import build_table
from .errors import (
    InconclusiveError,
    ParameterError,
    PrecisionError,
    RefinementError,
    ZetaGBError,
)
from .serialize import dumps, fmt_float
from .zero_scan import (
    Rectangle,
    ScanConfig,
    rectangle_winding,
    scan_critical_line,
    write_records_csv,
    write_records_jsonl,
)
from .zeta_core import DEFAULT_TARGET_EPS, EvalParams, auto_params, zeta_gb

__all__ = ["build_parser", "run", "main"]

_ENV_EPS = "ZETAGB_DEFAULT_EPS"


def _default_eps() -> float:
    raw = os.environ.get(_ENV_EPS)
    if raw is None:
        return DEFAULT_TARGET_EPS
    try:
        eps = float(raw)
    except ValueError as exc:
        raise ParameterError(f"{_ENV_EPS} is not a number: {raw!r}") from exc
    if not math.isfinite(eps) or eps <= 0:
        raise ParameterError(f"{_ENV_EPS} must be a finite positive number, got {raw!r}")
    return eps


def _add_common(sub: argparse.ArgumentParser, *, formats: bool = True) -> None:
    sub.add_argument("--eps", type=float, default=None, help="target accuracy (default from env or 1e-8)")
    sub.add_argument("--N", type=int, default=None, dest="cutoff_n", help="explicit Dirichlet cutoff")
    sub.add_argument("--nu", type=int, default=None, help="explicit tail order")
    sub.add_argument("--out", default=None, help="write output to this path instead of stdout")
    if formats:
        sub.add_argument("--format", choices=("text", "json", "csv"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zeta-gb",
        description="Gram-Backlund zeta evaluation, zero scanning, and zero-condition audits.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("eval", help="evaluate Z(s) with a certified remainder bound")
    p.add_argument("--re", type=float, required=True)
    p.add_argument("--im", type=float, default=0.0)
    _add_common(p)

    p = commands.add_parser("params", help="show the auto-selected parameters for a point")
    p.add_argument("--re", type=float, required=True)
    p.add_argument("--im", type=float, default=0.0)
    _add_common(p)

    p = commands.add_parser("zeros", help="scan the critical line and refine zeros")
    p.add_argument("--t-min", type=float, required=True)
    p.add_argument("--t-max", type=float, required=True)
    p.add_argument("--step", type=float, default=0.25)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--max-iter", type=int, default=50)
    p.add_argument("--strict-refine", action="store_true",
                   help="treat refinement failures as fatal (exit 5)")
    p.add_argument("--jsonl", action="store_true", help="with --format json, emit JSON lines")
    _add_common(p)

    p = commands.add_parser("count", help="count zeros in a rectangle by the argument principle")
    p.add_argument("--sigma-min", type=float, required=True)
    p.add_argument("--sigma-max", type=float, required=True)
    p.add_argument("--t-min", type=float, required=True)
    p.add_argument("--t-max", type=float, required=True)
    _add_common(p)

    p = commands.add_parser("audit", help="audit the zero-condition propositions over a range")
    p.add_argument("--t-min", type=float, required=True)
    p.add_argument("--t-max", type=float, required=True)
    p.add_argument("--step", type=float, default=0.25)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--max-iter", type=int, default=50)
    p.add_argument("--strict-refine", action="store_true")
    p.add_argument("--seed", type=int, default=DEFAULT_SAMPLE_SEED,
                   help="seed for the factorization sample box")
    _add_common(p, formats=False)

    p = commands.add_parser("bernoulli", help="dump the exact Bernoulli table")
    p.add_argument("--max-index", type=int, required=True)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    return parser


def _explicit_params(args: argparse.Namespace, eps: float) -> EvalParams | None:
    cutoff = getattr(args, "cutoff_n", None)
    nu = getattr(args, "nu", None)
    if cutoff is None and nu is None:
        return None
    if cutoff is None or nu is None:
        raise ParameterError("--N and --nu must be given together")
    return EvalParams(cutoff_n=cutoff, tail_order=nu, target_eps=eps)


def _resolve_params(args: argparse.Namespace, s: complex) -> EvalParams:
    eps = args.eps if args.eps is not None else _default_eps()
    explicit = _explicit_params(args, eps)
    if explicit is not None:
        return explicit
    return auto_params(s, eps)


def _deliver(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _csv_line(header: list[str], row: list[str]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerow(row)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# command handlers
# ---------------------------------------------------------------------------


def _cmd_eval(args: argparse.Namespace) -> int:
    s = complex(args.re, args.im)
    params = _resolve_params(args, s)
    result = zeta_gb(s, params)
    auto = _explicit_params(args, params.target_eps) is None
    fields = [
        ("re", s.real), ("im", s.imag),
        ("value_re", result.value.real), ("value_im", result.value.imag),
        ("abs_value", abs(result.value)),
        ("remainder_bound", result.remainder_bound),
        ("N", params.cutoff_n), ("nu", params.tail_order),
        ("auto_params", auto),
    ]
    if args.format == "json":
        text = dumps(dict(fields), indent=2) + "\n"
    elif args.format == "csv":
        header = [k for k, _ in fields]
        row = [fmt_float(v) if isinstance(v, float) else str(v) for _, v in fields]
        text = _csv_line(header, row)
    else:
        text = (
            f"Z({s.real:g}{s.imag:+g}i) = {result.value.real:.15g} {result.value.imag:+.15g}i\n"
            f"remainder bound {result.remainder_bound:.3e}  "
            f"(N={params.cutoff_n}, nu={params.tail_order}, "
            f"{'auto' if auto else 'explicit'} parameters)\n"
        )
    _deliver(text, args.out)
    return 0


def _cmd_params(args: argparse.Namespace) -> int:
    s = complex(args.re, args.im)
    params = _resolve_params(args, s)
    from .zeta_core import remainder_bound

    bound = remainder_bound(s, params.cutoff_n, params.tail_order)
    fields = [
        ("re", s.real), ("im", s.imag),
        ("N", params.cutoff_n), ("nu", params.tail_order),
        ("target_eps", params.target_eps), ("certified_bound", bound),
    ]
    if args.format == "json":
        text = dumps(dict(fields), indent=2) + "\n"
    elif args.format == "csv":
        text = _csv_line([k for k, _ in fields],
                         [fmt_float(v) if isinstance(v, float) else str(v) for _, v in fields])
    else:
        text = (
            f"N = {params.cutoff_n}\nnu = {params.tail_order}\n"
            f"certified bound = {bound:.6e} (target {params.target_eps:g})\n"
        )
    _deliver(text, args.out)
    return 0


def _cmd_zeros(args: argparse.Namespace) -> int:
    eps = args.eps if args.eps is not None else _default_eps()
    explicit = _explicit_params(args, eps)
    records = scan_critical_line(
        args.t_min, args.t_max, args.step, args.tol,
        max_iter=args.max_iter, params=explicit, strict_refine=args.strict_refine,
    )
    if args.format == "json":
        if args.jsonl:
            text = write_records_jsonl(records)
        else:
            rows = []
            for rec in records:
                rows.append({
                    "t": rec.t, "re_s": rec.s.real, "xi": rec.xi,
                    "z_modulus": rec.z_modulus,
                    "q_re": rec.q_value.real, "q_im": rec.q_value.imag,
                    "N": rec.params_used.cutoff_n, "nu": rec.params_used.tail_order,
                    "iterations": rec.refine_iterations,
                })
            text = dumps(rows, indent=2) + "\n"
    elif args.format == "csv":
        text = write_records_csv(records)
    else:
        lines = [f"{len(records)} zero(s) in ({args.t_min:g}, {args.t_max:g})"]
        for rec in records:
            lines.append(
                f"  t = {rec.t:.9f}  xi = {rec.xi: .3e}  |Z| = {rec.z_modulus:.3e}  "
                f"iterations = {rec.refine_iterations}"
            )
        text = "\n".join(lines) + "\n"
    _deliver(text, args.out)
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    rect = Rectangle(args.sigma_min, args.sigma_max, args.t_min, args.t_max)
    eps = args.eps if args.eps is not None else _default_eps()
    explicit = _explicit_params(args, eps)
    params = explicit if explicit is not None else auto_params(
        complex(rect.sigma_max, max(abs(rect.t_min), abs(rect.t_max))), min(eps, 1e-9)
    )
    count, residual = rectangle_winding(rect, params)
    if args.format == "json":
        text = dumps({
            "sigma_min": rect.sigma_min, "sigma_max": rect.sigma_max,
            "t_min": rect.t_min, "t_max": rect.t_max,
            "count": count, "winding_residual": residual,
        }, indent=2) + "\n"
    elif args.format == "csv":
        text = _csv_line(
            ["sigma_min", "sigma_max", "t_min", "t_max", "count", "winding_residual"],
            [fmt_float(rect.sigma_min), fmt_float(rect.sigma_max), fmt_float(rect.t_min),
             fmt_float(rect.t_max), str(count), fmt_float(residual)],
        )
    else:
        text = f"{count}\n"
    _deliver(text, args.out)
    return 0


def _cmd_audit(args: argparse.Namespace) -> int:
    eps = args.eps if args.eps is not None else _default_eps()
    explicit = _explicit_params(args, eps)
    cfg = ScanConfig(step=args.step, tol=args.tol, max_iter=args.max_iter,
                     strict_refine=args.strict_refine)
    report = audit_range(args.t_min, args.t_max, cfg, explicit, seed=args.seed)
    _deliver(report_to_json(report), args.out)
    sys.stderr.write(render_text(report))
    if not report.complete:
        reason = report.abort_reason or ""
        if "Inconclusive" in reason or "Boundary" in reason:
            return 4
        if "Refinement" in reason:
            return 5
        return 3
    return 0


def _cmd_bernoulli(args: argparse.Namespace) -> int:
    table = build_table(args.max_index)
    rows = [
        {"index": i, "numerator": str(table[i].numerator), "denominator": str(table[i].denominator)}
        for i in range(0, table.max_index + 1, 2)
    ]
    if args.format == "json":
        text = dumps(rows, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["index", "numerator", "denominator"])
        for row in rows:
            writer.writerow([row["index"], row["numerator"], row["denominator"]])
        text = buf.getvalue()
    else:
        text = "".join(f"B_{r['index']} = {r['numerator']}/{r['denominator']}\n" for r in rows)
    _deliver(text, args.out)
    return 0


_HANDLERS = {
    "eval": _cmd_eval,
    "params": _cmd_params,
    "zeros": _cmd_zeros,
    "count": _cmd_count,
    "audit": _cmd_audit,
    "bernoulli": _cmd_bernoulli,
}


def run(argv: list[str] | None = None) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.WARNING, format="%(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except ParameterError as exc:
        sys.stderr.write(f"parameter error: {exc}\n")
        return 2
    except PrecisionError as exc:
        sys.stderr.write(f"precision error: {exc}\n")
        return 3
    except InconclusiveError as exc:
        sys.stderr.write(f"inconclusive: {exc}\n")
        return 4
    except RefinementError as exc:
        sys.stderr.write(f"refinement error: {exc}\n")
        return 5
    except ZetaGBError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
