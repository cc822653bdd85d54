"""Critical-line zero scanning, Newton refinement, and winding counts.

The scanner samples |Z(1/2 + it)| on a uniform grid, refines promising
local minima with a damped-free complex Newton iteration (derivative by
central difference, h = 1e-6), and deduplicates hits. Rectangle counts
use the argument principle with adaptive boundary sampling that keeps
every phase increment below pi/2.
"""

from __future__ import annotations

import cmath
import csv
import io
import json
import logging
import math
from dataclasses import dataclass

from .errors import BoundaryError, InconclusiveError, ParameterError, RefinementError
from .serialize import fmt_float
from .zeta_core import EvalParams, _as_complex, auto_params, zeta_gb
from .qfunction import q_gb

__all__ = [
    "ZeroRecord",
    "Rectangle",
    "ScanConfig",
    "refine_zero",
    "scan_critical_line",
    "count_zeros_rectangle",
    "rectangle_winding",
    "write_records_csv",
    "read_records_csv",
    "write_records_jsonl",
    "read_records_jsonl",
]

logger = logging.getLogger(__name__)

_FD_STEP = 1e-6          # central-difference step for the Newton derivative
_STEP_FLOOR = 1e-12      # Newton stalls below this step size
_TOL_FLOOR = 1e-10       # refinement tolerances below this are unreliable
_BOUNDARY_MODULUS = 1e-6  # contour samples below this indicate a boundary zero
_MAX_SPLIT_DEPTH = 12    # adaptive phase-walk refinement levels
_PHASE_LIMIT = math.pi / 2
# Grid gate: a simple zero within step/2 of a grid point keeps the local
# modulus under ~|Z'| * step/2, which stays below 0.5 at desk scale.
_GATE_FLOOR = 0.5


@dataclass(frozen=True)
class ZeroRecord:
    """One refined zero, canonicalized to the upper half plane."""

    t: float
    s: complex
    xi: float
    z_modulus: float
    q_value: complex
    refine_iterations: int
    params_used: EvalParams

    def __post_init__(self) -> None:
        if not self.t > 0:
            raise ParameterError(f"zero records live in the upper half plane, got t = {self.t!r}")
        if not 0.0 < self.s.real < 1.0:
            raise ParameterError(f"zero record outside the critical strip: s = {self.s!r}")


@dataclass(frozen=True)
class Rectangle:
    """Axis-aligned strip rectangle for winding counts."""

    sigma_min: float
    sigma_max: float
    t_min: float
    t_max: float

    def __post_init__(self) -> None:
        for name in ("sigma_min", "sigma_max", "t_min", "t_max"):
            v = getattr(self, name)
            if not isinstance(v, (int, float)) or not math.isfinite(v):
                raise ParameterError(f"{name} must be finite, got {v!r}")
        if not self.sigma_min < self.sigma_max:
            raise ParameterError("sigma_min must be below sigma_max")
        if not self.t_min < self.t_max:
            raise ParameterError("t_min must be below t_max")
        for point in (0.0, 1.0):
            if self._on_boundary(point):
                raise ParameterError(
                    f"rectangle boundary passes through s = {point}; nudge the rectangle"
                )

    def _on_boundary(self, x: float) -> bool:
        # Both excluded points sit on the real axis (t = 0).
        if self.t_min == 0.0 or self.t_max == 0.0:
            return self.sigma_min <= x <= self.sigma_max
        if self.sigma_min == x or self.sigma_max == x:
            return self.t_min <= 0.0 <= self.t_max
        return False

    def corners(self) -> tuple[complex, complex, complex, complex]:
        return (
            complex(self.sigma_min, self.t_min),
            complex(self.sigma_max, self.t_min),
            complex(self.sigma_max, self.t_max),
            complex(self.sigma_min, self.t_max),
        )


@dataclass(frozen=True)
class ScanConfig:
    """Grid and refinement knobs for the critical-line scanner."""

    step: float = 0.25
    tol: float = 1e-9
    max_iter: int = 50
    strict_refine: bool = False

    def __post_init__(self) -> None:
        if not isinstance(self.step, (int, float)) or not 0 < self.step <= 0.5:
            raise ParameterError(f"step must lie in (0, 0.5], got {self.step!r}")
        if not isinstance(self.tol, (int, float)) or not self.tol >= _TOL_FLOOR:
            raise ParameterError(f"tol must be at least {_TOL_FLOOR}, got {self.tol!r}")
        if not isinstance(self.max_iter, int) or self.max_iter < 1:
            raise ParameterError(f"max_iter must be a positive integer, got {self.max_iter!r}")


def _refine_params(s0: complex, tol: float) -> EvalParams:
    return auto_params(s0, max(1e-13, tol / 10.0))


def refine_zero(
    s0: complex,
    tol: float = 1e-9,
    max_iter: int = 50,
    params: EvalParams | None = None,
) -> ZeroRecord:
    """Newton-refine a zero seed inside the critical strip.

    Stops when |Z| <= tol; a step below 1e-12 that still leaves |Z|
    above tol counts as a stall. Iterates leaving the strip raise
    RefinementError. The refined location is kept as measured (xi is
    never projected onto the line); seeds in the lower half plane
    produce the conjugate record.
    """
    s0 = _as_complex(s0, "s0")
    if not 0.0 < s0.real < 1.0:
        raise ParameterError(f"seed must sit inside the critical strip, got {s0!r}")
    if not isinstance(tol, (int, float)) or not tol >= _TOL_FLOOR:
        raise ParameterError(f"tol must be at least {_TOL_FLOOR}, got {tol!r}")
    if not isinstance(max_iter, int) or max_iter < 1:
        raise ParameterError(f"max_iter must be a positive integer, got {max_iter!r}")
    if params is None:
        params = _refine_params(s0, tol)

    def f(z: complex) -> complex:
        return zeta_gb(z, params).value

    z = s0
    fz = f(z)
    iterations = 0
    while abs(fz) > tol:
        if iterations >= max_iter:
            raise RefinementError(
                f"no convergence within {max_iter} iterations from seed {s0!r} (|Z| = {abs(fz):.3e})"
            )
        deriv = (f(z + _FD_STEP) - f(z - _FD_STEP)) / (2 * _FD_STEP)
        if deriv == 0 or not cmath.isfinite(deriv):
            raise RefinementError(f"derivative degenerated at {z!r}")
        step = fz / deriv
        z = z - step
        iterations += 1
        if not 0.0 < z.real < 1.0:
            raise RefinementError(f"iteration left the critical strip at {z!r} from seed {s0!r}")
        fz = f(z)
        if abs(step) < _STEP_FLOOR and abs(fz) > tol:
            raise RefinementError(
                f"stalled at {z!r}: step {abs(step):.3e} below floor with |Z| = {abs(fz):.3e}"
            )
    if z.imag < 0:
        z = z.conjugate()
    if z.imag == 0:
        raise RefinementError(f"refinement landed on the real axis at {z!r}")
    return ZeroRecord(
        t=z.imag,
        s=z,
        xi=z.real - 0.5,
        z_modulus=abs(f(z)),
        q_value=q_gb(z, params).value,
        refine_iterations=iterations,
        params_used=params,
    )


def scan_critical_line(
    t_min: float,
    t_max: float,
    step: float = 0.25,
    tol: float = 1e-9,
    *,
    max_iter: int = 50,
    params: EvalParams | None = None,
    strict_refine: bool = False,
) -> list[ZeroRecord]:
    """Scan |Z(1/2 + it)| for t in [t_min, t_max] and refine candidates.

    Grid local minima below max(10 sqrt(tol), 0.5) are refined; failed
    refinements are skipped with a logged warning unless
    ``strict_refine`` is set. Records are deduplicated within step/2
    and restricted to ordinates strictly inside (t_min, t_max).
    """
    cfg = ScanConfig(step=step, tol=tol, max_iter=max_iter, strict_refine=strict_refine)
    if not isinstance(t_min, (int, float)) or not isinstance(t_max, (int, float)):
        raise ParameterError("t_min and t_max must be numbers")
    if not (math.isfinite(t_min) and math.isfinite(t_max)) or t_min < 0 or t_max <= t_min:
        raise ParameterError(f"need 0 <= t_min < t_max, got [{t_min!r}, {t_max!r}]")
    if params is None:
        params = auto_params(complex(0.5, t_max), max(1e-13, cfg.tol / 10.0))

    count = int(math.floor((t_max - t_min) / cfg.step + 1e-9))
    grid = [t_min + k * cfg.step for k in range(count + 1)]
    if grid[-1] < t_max - 1e-12:
        grid.append(t_max)
    moduli = [abs(zeta_gb(complex(0.5, t), params).value) for t in grid]

    gate = max(10.0 * math.sqrt(cfg.tol), _GATE_FLOOR)
    candidates: list[float] = []
    for i, m in enumerate(moduli):
        if m >= gate:
            continue
        left_ok = i == 0 or moduli[i - 1] >= m
        right_ok = i == len(moduli) - 1 or moduli[i + 1] >= m
        if left_ok and right_ok:
            candidates.append(grid[i])

    records: list[ZeroRecord] = []
    skipped = 0
    for t in candidates:
        try:
            rec = refine_zero(complex(0.5, t), cfg.tol, cfg.max_iter, params)
        except RefinementError as exc:
            if cfg.strict_refine:
                raise
            skipped += 1
            logger.warning("refinement skipped near t = %.6f: %s", t, exc)
            continue
        if t_min < rec.t < t_max:
            records.append(rec)

    records.sort(key=lambda r: r.t)
    deduped: list[ZeroRecord] = []
    for rec in records:
        if deduped and rec.t - deduped[-1].t < cfg.step / 2:
            continue
        deduped.append(rec)
    if skipped:
        logger.warning("scan of [%s, %s]: %d candidate(s) failed to refine", t_min, t_max, skipped)
    return deduped


# ---------------------------------------------------------------------------
# argument principle over rectangles
# ---------------------------------------------------------------------------


def _phase_walk(
    za: complex,
    zb: complex,
    fa: complex,
    fb: complex,
    f,
    depth: int,
) -> float:
    delta = math.remainder(cmath.phase(fb) - cmath.phase(fa), math.tau)
    if abs(delta) < _PHASE_LIMIT:
        return delta
    if depth >= _MAX_SPLIT_DEPTH:
        raise BoundaryError(
            f"phase step stayed above pi/2 after {_MAX_SPLIT_DEPTH} splits near {za!r}; "
            "a zero sits on or near the boundary, nudge the rectangle (for instance by 0.05 in t)"
        )
    mid = (za + zb) / 2
    fm = f(mid)
    return _phase_walk(za, mid, fa, fm, f, depth + 1) + _phase_walk(mid, zb, fm, fb, f, depth + 1)


def rectangle_winding(rect: Rectangle, params: EvalParams | None = None) -> tuple[int, float]:
    """Winding number of Z along the rectangle boundary and its residual.

    Returns (count, |winding - count|). The count equals zeros minus
    poles inside; keep s = 1 outside the rectangle. Samples with
    |Z| < 1e-6 on the contour abort with BoundaryError.
    """
    if not isinstance(rect, Rectangle):
        raise ParameterError(f"rect must be a Rectangle, got {type(rect).__name__}")
    if params is None:
        worst = complex(rect.sigma_max, max(abs(rect.t_min), abs(rect.t_max)))
        params = auto_params(worst, 1e-9)

    def f(z: complex) -> complex:
        value = zeta_gb(z, params).value
        if abs(value) < _BOUNDARY_MODULUS:
            raise BoundaryError(
                f"|Z| = {abs(value):.3e} at boundary point {z!r}; "
                "a zero sits on the contour, nudge the rectangle (for instance by 0.05 in t)"
            )
        return value

    corners = rect.corners()
    total = 0.0
    for idx in range(4):
        za, zb = corners[idx], corners[(idx + 1) % 4]
        segments = max(4, math.ceil(abs(zb - za) / 0.25))
        nodes = [za + (zb - za) * (k / segments) for k in range(segments + 1)]
        values = [f(z) for z in nodes]
        for k in range(segments):
            total += _phase_walk(nodes[k], nodes[k + 1], values[k], values[k + 1], f, 0)

    winding = total / math.tau
    count = round(winding)
    residual = abs(winding - count)
    if residual >= 0.25:
        raise InconclusiveError(
            f"winding number {winding:.6f} is {residual:.3f} away from an integer",
            residual=residual,
        )
    return int(count), residual


def count_zeros_rectangle(rect: Rectangle, params: EvalParams | None = None) -> int:
    """Number of zeros inside ``rect`` by the argument principle."""
    return rectangle_winding(rect, params)[0]


# ---------------------------------------------------------------------------
# record persistence: JSON lines and CSV, 17 significant digits
# ---------------------------------------------------------------------------

RECORD_FIELDS = ("t", "re_s", "xi", "z_modulus", "q_re", "q_im", "N", "nu", "iterations")


def _record_row(rec: ZeroRecord) -> dict[str, str]:
    return {
        "t": fmt_float(rec.t),
        "re_s": fmt_float(rec.s.real),
        "xi": fmt_float(rec.xi),
        "z_modulus": fmt_float(rec.z_modulus),
        "q_re": fmt_float(rec.q_value.real),
        "q_im": fmt_float(rec.q_value.imag),
        "N": str(rec.params_used.cutoff_n),
        "nu": str(rec.params_used.tail_order),
        "iterations": str(rec.refine_iterations),
    }


def _record_from_row(row: dict[str, str]) -> ZeroRecord:
    t = float(row["t"])
    return ZeroRecord(
        t=t,
        s=complex(float(row["re_s"]), t),
        xi=float(row["xi"]),
        z_modulus=float(row["z_modulus"]),
        q_value=complex(float(row["q_re"]), float(row["q_im"])),
        refine_iterations=int(row["iterations"]),
        params_used=EvalParams(cutoff_n=int(row["N"]), tail_order=int(row["nu"])),
    )


def write_records_csv(records: list[ZeroRecord]) -> str:
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=RECORD_FIELDS, lineterminator="\n")
    writer.writeheader()
    for rec in records:
        writer.writerow(_record_row(rec))
    return out.getvalue()


def read_records_csv(text: str) -> list[ZeroRecord]:
    reader = csv.DictReader(io.StringIO(text))
    return [_record_from_row(row) for row in reader]


def write_records_jsonl(records: list[ZeroRecord]) -> str:
    lines = []
    for rec in records:
        row = _record_row(rec)
        # values are pre-formatted decimals; emit them unquoted
        lines.append("{" + ", ".join(f"{json.dumps(k)}: {row[k]}" for k in RECORD_FIELDS) + "}")
    return "".join(line + "\n" for line in lines)


def read_records_jsonl(text: str) -> list[ZeroRecord]:
    records = []
    for line in text.splitlines():
        if not line.strip():
            continue
        data = json.loads(line)
        records.append(_record_from_row({k: repr(v) for k, v in data.items()}))
    return records
