"""Numerical audit of the zero-condition propositions.

For each refined zero s_H the audit measures, at working precision:

  * the zero-condition residual s(s-1) + Q(s) at s_H and its conjugate,
  * how real Q is, and how close to 1/4 + t^2,
  * the measured line offset xi = Re s_H - 1/2,
  * the conjugate relation |conj(s_H) - (1 - s_H)| = 2 |xi|,
  * the polynomial division rest |Q(s_H) - s_H (1 - s_H)|,
  * agreement of [s(s-1) + Q] with (s - s_H)(s - (1 - s_H)) over a
    pseudo-random sample box, whose maximal deviation must reproduce
    the division rest exactly (the difference is constant in s).

``audit_range`` bundles the per-zero checks with consistency controls,
half-rectangle winding counts, and a Q non-constancy probe into an
eight-line verdict report (I..VIII) with a stable JSON rendering.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import (
    InconclusiveError,
    ParameterError,
    PrecisionError,
    RefinementError,
    SingularQError,
)
from .qfunction import consistency_identity, q_gb
from .serialize import dumps
from .zero_scan import Rectangle, ScanConfig, ZeroRecord, count_zeros_rectangle, scan_critical_line
from .zeta_core import EvalParams, _as_complex, auto_params, zeta_gb

__all__ = [
    "DEFAULT_SAMPLE_SEED",
    "SAMPLE_BOX",
    "CONTROL_POINTS",
    "TOLERANCES",
    "PropositionChecks",
    "QVariation",
    "AuditReport",
    "factorization_check",
    "draw_samples",
    "audit_zero",
    "q_variation",
    "audit_range",
    "report_to_json",
    "render_text",
]

SCHEMA_VERSION = "1"
DEFAULT_SAMPLE_SEED = 271828
SAMPLE_BOX = (-2.0, 3.0, -50.0, 50.0)  # sigma_min, sigma_max, t_min, t_max
CONTROL_POINTS = (2 + 0j, 3 + 0j, 0.75 + 5j, 0.25 + 5j)

TOLERANCES = {
    "xi": 1e-6,
    "zero_residual": 1e-4,
    "q_imag_rel": 1e-6,
    "q_vs_quarter_plus_t2": 1e-4,
    "division_rest": 1e-4,
    "factorization_agree": 1e-10,  # relative to 1 + |Q|
    "conj_relation": 2e-6,
    "consistency_rel": 1e-9,       # relative to max(1, |Z|)
}

_ROMAN = ("I", "II", "III", "IV", "V", "VI", "VII", "VIII")


@dataclass(frozen=True)
class PropositionChecks:
    """All measured deviations for one zero; every field is >= 0 and finite."""

    zero_residual_abs: float
    q_imag_rel: float
    q_vs_quarter_plus_t2: float
    xi_abs: float
    conj_relation_abs: float
    division_rest_abs: float
    factorization_max_dev: float

    def __post_init__(self) -> None:
        for name, value in self.__dict__.items():
            if not (isinstance(value, float) and math.isfinite(value) and value >= 0):
                raise ParameterError(f"{name} must be a finite non-negative float, got {value!r}")


@dataclass(frozen=True)
class QVariation:
    """Q sampled at several points under one parameter set."""

    points: tuple[tuple[complex, complex], ...]  # (s, Q(s))
    max_delta: float


@dataclass(frozen=True)
class AuditReport:
    complete: bool
    abort_reason: str | None
    t_min: float
    t_max: float
    params_used: EvalParams
    sample_seed: int
    tolerances_used: dict[str, float]
    zero_checks: tuple[tuple[ZeroRecord, PropositionChecks], ...]
    q_variation: QVariation | None
    consistency_controls: tuple[tuple[complex, float, float], ...]  # (s, residual, |Z|)
    half_counts: tuple[int, int] | None
    verdict_lines: tuple[str, ...]


def factorization_check(s_h: complex, q_at_sh: complex, samples: list[complex]) -> float:
    """Max over samples of |[s(s-1) + Q] - (s - s_H)(s - (1 - s_H))|.

    The difference is Q - s_H (1 - s_H) for every s, so the maximum
    equals the division rest up to rounding.
    """
    s_h = _as_complex(s_h, "s_h")
    q_at_sh = _as_complex(q_at_sh, "q_at_sh")
    if not samples:
        raise ParameterError("sample list must not be empty")
    worst = 0.0
    for raw in samples:
        s = _as_complex(raw, "sample")
        dev = abs((s * (s - 1) + q_at_sh) - (s - s_h) * (s - (1 - s_h)))
        if dev > worst:
            worst = dev
    return worst


def draw_samples(n: int = 100, seed: int = DEFAULT_SAMPLE_SEED) -> list[complex]:
    """Deterministic sample points from the audit box."""
    if not isinstance(n, int) or n < 1:
        raise ParameterError(f"sample count must be a positive integer, got {n!r}")
    rng = random.Random(seed)
    lo_s, hi_s, lo_t, hi_t = SAMPLE_BOX
    return [complex(rng.uniform(lo_s, hi_s), rng.uniform(lo_t, hi_t)) for _ in range(n)]


def _check_params(params: EvalParams | None, rec: ZeroRecord) -> EvalParams:
    if params is None:
        return rec.params_used
    used = rec.params_used
    if params.cutoff_n < used.cutoff_n or params.tail_order < used.tail_order:
        raise ParameterError(
            f"audit params (N={params.cutoff_n}, nu={params.tail_order}) are less accurate "
            f"than the record's (N={used.cutoff_n}, nu={used.tail_order})"
        )
    return params


def audit_zero(
    rec: ZeroRecord,
    params: EvalParams | None = None,
    *,
    seed: int = DEFAULT_SAMPLE_SEED,
    n_samples: int = 100,
) -> PropositionChecks:
    """Measure every proposition at rec.s and its conjugate.

    Residual-type checks take the worse of the two conjugate points;
    purely algebraic ones (xi, conjugate relation) need only rec.s.
    """
    if not isinstance(rec, ZeroRecord):
        raise ParameterError(f"rec must be a ZeroRecord, got {type(rec).__name__}")
    params = _check_params(params, rec)
    s = rec.s
    sc = s.conjugate()
    q_s = q_gb(s, params).value
    q_c = q_gb(sc, params).value

    residual = max(abs(s * (s - 1) + q_s), abs(sc * (sc - 1) + q_c))
    q_abs = abs(q_s)
    q_imag_rel = abs(q_s.imag) / q_abs if q_abs > 0 else 0.0
    q_vs = abs(q_s - (0.25 + rec.t * rec.t))
    xi_abs = abs(s.real - 0.5)
    conj_rel = abs(sc - (1 - s))
    division_rest = abs(q_s - s * (1 - s))
    samples = draw_samples(n_samples, seed)
    max_dev = factorization_check(s, q_s, samples)

    return PropositionChecks(
        zero_residual_abs=residual,
        q_imag_rel=q_imag_rel,
        q_vs_quarter_plus_t2=q_vs,
        xi_abs=xi_abs,
        conj_relation_abs=conj_rel,
        division_rest_abs=division_rest,
        factorization_max_dev=max_dev,
    )


def q_variation(points: list[complex], params: EvalParams) -> QVariation:
    """Q at each point and the largest pairwise |Q_i - Q_j|."""
    if len(points) < 2:
        raise ParameterError("q_variation needs at least two points")
    values = [(p, q_gb(p, params).value) for p in (_as_complex(p) for p in points)]
    max_delta = max(
        abs(values[i][1] - values[j][1])
        for i in range(len(values))
        for j in range(i + 1, len(values))
    )
    return QVariation(points=tuple(values), max_delta=max_delta)


# ---------------------------------------------------------------------------
# range audit and verdicts
# ---------------------------------------------------------------------------


def _line(idx: int, status: str, text: str) -> str:
    return f"{_ROMAN[idx]:<4} {status:<4} {text}"


def _verdicts(
    checks: tuple[tuple[ZeroRecord, PropositionChecks], ...],
    controls: tuple[tuple[complex, float, float], ...],
    half_counts: tuple[int, int] | None,
    aborted: str | None,
) -> tuple[str, ...]:
    tol = TOLERANCES
    lines: list[str] = []

    def summary(fn, tolerance: float, label: str, idx: int, extra: str = "") -> None:
        if aborted is not None and not checks and not controls:
            lines.append(_line(idx, "SKIP", "audit aborted before this check"))
            return
        if not checks:
            lines.append(_line(idx, "PASS", f"vacuous, no zeros in range ({label})"))
            return
        worst = max(fn(c) for _, c in checks)
        status = "PASS" if worst <= tolerance else "FAIL"
        lines.append(_line(idx, status, f"{label}: max {worst:.3e} vs tolerance {tolerance:.1e}{extra}"))

    # I: every zero sits on the line within tolerance
    summary(lambda c: c.xi_abs, tol["xi"], "measured |xi| at each zero", 0)

    # II: consistency identity at the control points
    if controls:
        worst_rel = max(res / max(1.0, zabs) for _, res, zabs in controls)
        status = "PASS" if worst_rel <= tol["consistency_rel"] else "FAIL"
        lines.append(
            _line(1, status, f"consistency identity at {len(controls)} controls: "
                             f"max relative residual {worst_rel:.3e} vs {tol['consistency_rel']:.1e}")
        )
    else:
        lines.append(_line(1, "SKIP", "audit aborted before the control evaluations"))

    # III: counter-hypothesis control, off-line half rectangles are empty
    if half_counts is None:
        note = "audit aborted before the winding counts" if aborted else "window too thin for winding counts"
        lines.append(_line(2, "SKIP" if aborted else "PASS", f"vacuous, {note}"))
    else:
        left, right = half_counts
        status = "PASS" if (left, right) == (0, 0) else "FAIL"
        lines.append(
            _line(2, status, f"off-line half rectangles hold {left} (left) and {right} (right) zeros")
        )

    # IV: zero-condition residual at each zero and its conjugate
    summary(lambda c: c.zero_residual_abs, tol["zero_residual"], "|s(s-1) + Q|", 3)

    # V: Q is real and equals 1/4 + t^2 within tolerance
    if not checks:
        lines.append(_line(4, "SKIP" if aborted else "PASS", "vacuous, no zeros in range (Q realness)"))
    else:
        worst_imag = max(c.q_imag_rel for _, c in checks)
        worst_quarter = max(c.q_vs_quarter_plus_t2 for _, c in checks)
        ok = worst_imag <= tol["q_imag_rel"] and worst_quarter <= tol["q_vs_quarter_plus_t2"]
        lines.append(
            _line(4, "PASS" if ok else "FAIL",
                  f"Q realness {worst_imag:.3e} vs {tol['q_imag_rel']:.1e}; "
                  f"|Q - (1/4 + t^2)| {worst_quarter:.3e} vs {tol['q_vs_quarter_plus_t2']:.1e}")
        )

    # VI: polynomial division rest
    summary(lambda c: c.division_rest_abs, tol["division_rest"], "division rest |Q - s(1-s)|", 5)

    # VII: factorization max deviation reproduces the rest
    if not checks:
        lines.append(_line(6, "SKIP" if aborted else "PASS", "vacuous, no zeros in range (factorization)"))
    else:
        worst = 0.0
        for rec, c in checks:
            scale = 1.0 + abs(rec.q_value)
            worst = max(worst, abs(c.factorization_max_dev - c.division_rest_abs) / scale)
        status = "PASS" if worst <= tol["factorization_agree"] else "FAIL"
        lines.append(
            _line(6, status, f"factorization deviation vs division rest: "
                             f"max relative gap {worst:.3e} vs {tol['factorization_agree']:.1e}")
        )

    # VIII: conjugate relation conj(s) = 1 - s, measured
    summary(lambda c: c.conj_relation_abs, tol["conj_relation"], "|conj(s) - (1 - s)|", 7)

    return tuple(lines)


def audit_range(
    t_min: float,
    t_max: float,
    scan_cfg: ScanConfig | None = None,
    params: EvalParams | None = None,
    *,
    seed: int = DEFAULT_SAMPLE_SEED,
) -> AuditReport:
    """Scan [t_min, t_max], audit every zero, and assemble the verdicts.

    Fatal numeric failures in any sub-step abort the audit; the partial
    report comes back with ``complete=False`` and the abort reason.
    """
    if not isinstance(t_min, (int, float)) or not isinstance(t_max, (int, float)):
        raise ParameterError("t_min and t_max must be numbers")
    if not (math.isfinite(t_min) and math.isfinite(t_max)) or t_min < 0 or t_max <= t_min:
        raise ParameterError(f"need 0 <= t_min < t_max, got [{t_min!r}, {t_max!r}]")
    if not isinstance(seed, int):
        raise ParameterError(f"seed must be an integer, got {seed!r}")
    cfg = scan_cfg if scan_cfg is not None else ScanConfig()
    if params is None:
        params = auto_params(complex(0.5, max(float(t_max), 5.0)), 1e-9)

    abort: str | None = None
    checks: tuple[tuple[ZeroRecord, PropositionChecks], ...] = ()
    qvar: QVariation | None = None
    controls: tuple[tuple[complex, float, float], ...] = ()
    half_counts: tuple[int, int] | None = None
    try:
        records = scan_critical_line(
            float(t_min), float(t_max), cfg.step, cfg.tol,
            max_iter=cfg.max_iter, params=params, strict_refine=cfg.strict_refine,
        )
        checks = tuple((rec, audit_zero(rec, params, seed=seed)) for rec in records)
        qvar = q_variation(list(CONTROL_POINTS), params)
        controls = tuple(
            (c, consistency_identity(c, params), abs(zeta_gb(c, params).value))
            for c in CONTROL_POINTS
        )
        window_lo = max(float(t_min), 0.1)
        if t_max - window_lo > 0.2:
            left = count_zeros_rectangle(Rectangle(0.01, 0.49, window_lo, float(t_max)), params)
            right = count_zeros_rectangle(Rectangle(0.51, 0.99, window_lo, float(t_max)), params)
            half_counts = (left, right)
    except (PrecisionError, SingularQError, InconclusiveError, RefinementError) as exc:
        abort = f"{type(exc).__name__}: {exc}"

    verdicts = _verdicts(checks, controls, half_counts, abort)
    return AuditReport(
        complete=abort is None,
        abort_reason=abort,
        t_min=float(t_min),
        t_max=float(t_max),
        params_used=params,
        sample_seed=seed,
        tolerances_used=dict(TOLERANCES),
        zero_checks=checks,
        q_variation=qvar,
        consistency_controls=controls,
        half_counts=half_counts,
        verdict_lines=verdicts,
    )


# ---------------------------------------------------------------------------
# report rendering
# ---------------------------------------------------------------------------


def _report_payload(report: AuditReport) -> dict:
    zeros = []
    for rec, c in report.zero_checks:
        zeros.append({
            "t": rec.t,
            "re_s": rec.s.real,
            "xi": rec.xi,
            "z_modulus": rec.z_modulus,
            "q_re": rec.q_value.real,
            "q_im": rec.q_value.imag,
            "N": rec.params_used.cutoff_n,
            "nu": rec.params_used.tail_order,
            "iterations": rec.refine_iterations,
            "checks": {
                "zero_residual_abs": c.zero_residual_abs,
                "q_imag_rel": c.q_imag_rel,
                "q_vs_quarter_plus_t2": c.q_vs_quarter_plus_t2,
                "xi_abs": c.xi_abs,
                "conj_relation_abs": c.conj_relation_abs,
                "division_rest_abs": c.division_rest_abs,
                "factorization_max_dev": c.factorization_max_dev,
            },
        })
    qvar = None
    if report.q_variation is not None:
        qvar = {
            "points": [
                {"re": p.real, "im": p.imag, "q_re": q.real, "q_im": q.imag}
                for p, q in report.q_variation.points
            ],
            "max_delta": report.q_variation.max_delta,
        }
    return {
        "schema_version": SCHEMA_VERSION,
        "complete": report.complete,
        "abort_reason": report.abort_reason,
        "t_min": report.t_min,
        "t_max": report.t_max,
        "params": {
            "N": report.params_used.cutoff_n,
            "nu": report.params_used.tail_order,
            "target_eps": report.params_used.target_eps,
        },
        "sample_seed": report.sample_seed,
        "tolerances": report.tolerances_used,
        "zeros": zeros,
        "q_variation": qvar,
        "consistency_controls": [
            {"re": p.real, "im": p.imag, "residual": res, "z_abs": zabs}
            for p, res, zabs in report.consistency_controls
        ],
        "half_rectangle_counts": None if report.half_counts is None else {
            "left": report.half_counts[0], "right": report.half_counts[1],
        },
        "verdicts": list(report.verdict_lines),
    }


def report_to_json(report: AuditReport) -> str:
    """Stable, byte-deterministic JSON rendering of the report."""
    return dumps(_report_payload(report), indent=2) + "\n"


def render_text(report: AuditReport) -> str:
    """Human summary: header, one row per zero, the eight verdicts."""
    lines = [
        f"audit of t in [{report.t_min:g}, {report.t_max:g}]  "
        f"(N={report.params_used.cutoff_n}, nu={report.params_used.tail_order}, "
        f"seed={report.sample_seed})",
        f"zeros found: {len(report.zero_checks)}",
    ]
    for rec, c in report.zero_checks:
        lines.append(
            f"  t = {rec.t:.9f}  xi = {rec.xi: .2e}  |Z| = {rec.z_modulus:.2e}  "
            f"residual = {c.zero_residual_abs:.2e}"
        )
    if report.q_variation is not None:
        lines.append(f"Q variation across controls: max delta {report.q_variation.max_delta:.6g}")
    if not report.complete:
        lines.append(f"INCOMPLETE: {report.abort_reason}")
    lines.append("verdicts:")
    lines.extend(f"  {v}" for v in report.verdict_lines)
    return "\n".join(lines) + "\n"
