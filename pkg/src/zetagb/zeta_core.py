"""Gram-Backlund evaluation of the zeta function in binary64.

The evaluator combines a truncated Dirichlet sum with the Euler-Maclaurin
correction

    Z(s) = sum_{n=1}^{N-1} n^{-s}  +  N^{1-s}/(s-1)  +  N^{-s}/2
         + sum_{mu=1}^{nu} B_{2mu}/(2mu)! * s(s+1)...(s+2mu-2) * N^{-s-2mu+1}

and certifies the truncation error with the first-omitted-term rule

    |R| <= |B_{2nu+2}/(2nu+2)!| * |s(s+1)...(s+2nu)|
           * N^{-Re(s)-2nu-1} * |s+2nu+1| / (Re(s)+2nu+1).

Everything is plain binary64; powers go through exp(-s ln n) with the
real logarithm, so no branch ambiguity arises.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

from .bernoulli import MAX_INDEX, BernoulliTable, _full_table
from .errors import ParameterError, PoleError, PrecisionError

__all__ = [
    "DEFAULT_TARGET_EPS",
    "EvalParams",
    "EvalResult",
    "dirichlet_partial_sum",
    "em_tail",
    "zeta_gb",
    "auto_params",
    "remainder_bound",
]

DEFAULT_TARGET_EPS = 1e-8

# auto_params search space: cutoffs double up to 2^6 times, tail orders
# sweep this band. Wider nu stops paying off before the factorial blow-up.
_AUTO_DOUBLINGS = 6
_AUTO_NU_RANGE = range(2, 26)
_EPS_FLOOR = 1e-13
_IM_CAP = 500.0


def _as_complex(s: object, name: str = "s") -> complex:
    try:
        z = complex(s)  # type: ignore[arg-type]
    except (TypeError, ValueError) as exc:
        raise ParameterError(f"{name} must be a complex number, got {s!r}") from exc
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ParameterError(f"{name} must have finite components, got {z!r}")
    return z


@dataclass(frozen=True)
class EvalParams:
    """Evaluation knobs: Dirichlet cutoff N, tail order nu, target accuracy."""

    cutoff_n: int
    tail_order: int
    target_eps: float = DEFAULT_TARGET_EPS

    def __post_init__(self) -> None:
        if not isinstance(self.cutoff_n, int) or self.cutoff_n < 2:
            raise ParameterError(f"cutoff_n must be an integer >= 2, got {self.cutoff_n!r}")
        if not isinstance(self.tail_order, int) or self.tail_order < 1:
            raise ParameterError(f"tail_order must be an integer >= 1, got {self.tail_order!r}")
        if 2 * self.tail_order > MAX_INDEX:
            raise ParameterError(
                f"tail_order {self.tail_order} needs Bernoulli indices beyond the cap {MAX_INDEX}"
            )
        eps = self.target_eps
        if not isinstance(eps, (int, float)) or not math.isfinite(eps) or eps <= 0:
            raise ParameterError(f"target_eps must be a finite positive number, got {eps!r}")


@dataclass(frozen=True)
class EvalResult:
    """Evaluated value plus the certified truncation bound that produced it."""

    value: complex
    remainder_bound: float
    params_used: EvalParams


def _rpow(base: float, exponent: complex) -> complex:
    # base^exponent for real base > 0 via the principal (real) logarithm
    return cmath.exp(exponent * math.log(base))


def dirichlet_partial_sum(s: complex, cutoff_n: int) -> complex:
    """sum_{n=1}^{cutoff_n - 1} n^{-s}, terms in ascending order."""
    s = _as_complex(s)
    if not isinstance(cutoff_n, int) or cutoff_n < 2:
        raise ParameterError(f"cutoff_n must be an integer >= 2, got {cutoff_n!r}")
    total = 1.0 + 0.0j
    for n in range(2, cutoff_n):
        total += cmath.exp(-s * math.log(n))
    return total


@lru_cache(maxsize=None)
def _coeff(mu: int) -> float:
    # B_{2mu}/(2mu)! rounded once from the exact rational
    return float(_full_table()[2 * mu] / math.factorial(2 * mu))


def remainder_bound(s: complex, cutoff_n: int, tail_order: int) -> float:
    """Certified bound on the dropped tail after ``tail_order`` terms.

    Requires Re(s) + 2 nu + 1 > 0; outside that region the correction
    series itself is meaningless at this order.
    """
    s = _as_complex(s)
    nu = tail_order
    denom = s.real + 2 * nu + 1
    if denom <= 0:
        raise ParameterError(
            f"tail order {nu} too small for Re(s) = {s.real}; need Re(s) + 2*nu + 1 > 0"
        )
    prod = 1.0
    for k in range(2 * nu + 1):
        prod *= abs(s + k)
    scale = math.exp(-denom * math.log(cutoff_n))
    return abs(_coeff(nu + 1)) * prod * scale * abs(s + 2 * nu + 1) / denom


def _em_correction(s: complex, cutoff_n: int, tail_order: int, coeffs) -> complex:
    # N^{-s}/2 + sum_mu c_mu * s(s+1)...(s+2mu-2) * N^{-s-2mu+1}; safe at s = 0
    n = cutoff_n
    total = _rpow(n, -s) / 2
    prod = s
    npow = _rpow(n, -s - 1)
    inv_n2 = 1.0 / (n * n)
    for mu in range(1, tail_order + 1):
        if mu > 1:
            prod *= (s + 2 * mu - 3) * (s + 2 * mu - 2)
        total += coeffs(mu) * prod * npow
        npow *= inv_n2
    return total


def _em_tail_r(s: complex, cutoff_n: int, tail_order: int, coeffs) -> complex:
    # Abbreviated form r(N, s) with the leading s factored out:
    # N^{-s}/(2s) + sum_mu c_mu * (s+1)...(s+2mu-2) * N^{-s-2mu+1}
    n = cutoff_n
    total = _rpow(n, -s) / (2 * s)
    prod = 1.0 + 0.0j
    npow = _rpow(n, -s - 1)
    inv_n2 = 1.0 / (n * n)
    for mu in range(1, tail_order + 1):
        if mu > 1:
            prod *= (s + 2 * mu - 3) * (s + 2 * mu - 2)
        total += coeffs(mu) * prod * npow
        npow *= inv_n2
    return total


def em_tail(s: complex, params: EvalParams, table: BernoulliTable) -> tuple[complex, float]:
    """Abbreviated tail r(N, s) and its certified bound divided by |s|.

    The product in the mu = 1 term is empty, so that term is
    (B_2/2) * N^{-s-1}. The second return value scales the full-sum
    bound by 1/|s| so that |s| * bound matches the evaluator's bound.
    """
    s = _as_complex(s)
    if s == 0:
        raise ParameterError("the abbreviated tail divides by s; s = 0 is excluded")
    nu = params.tail_order
    if not table.covers(2 * (nu + 1)):
        raise ParameterError(
            f"table covers indices up to {table.max_index}, need {2 * (nu + 1)} for tail order {nu}"
        )

    def coeffs(mu: int) -> float:
        return float(table[2 * mu] / math.factorial(2 * mu))

    r = _em_tail_r(s, params.cutoff_n, nu, coeffs)
    bound = remainder_bound(s, params.cutoff_n, nu)
    return r, bound / abs(s)


def zeta_gb(s: complex, params: EvalParams | None = None, *, eps: float | None = None) -> EvalResult:
    """Evaluate the Gram-Backlund extension at ``s``.

    With ``params`` omitted the cutoff and tail order come from
    ``auto_params`` at target accuracy ``eps`` (default 1e-8). The
    correction sum keeps its leading s factor, so s = 0 needs no
    special route and lands on -0.5 to machine rounding.
    """
    s = _as_complex(s)
    if s == 1:
        raise PoleError("s = 1 is the simple pole of the extension")
    if params is None:
        params = auto_params(s, DEFAULT_TARGET_EPS if eps is None else eps)
    n = params.cutoff_n
    value = (
        dirichlet_partial_sum(s, n)
        + _rpow(n, 1 - s) / (s - 1)
        + _em_correction(s, n, params.tail_order, _coeff)
    )
    if not cmath.isfinite(value):
        raise ParameterError(f"evaluation overflowed at s = {s!r} with cutoff {n}")
    return EvalResult(value=value, remainder_bound=remainder_bound(s, n, params.tail_order), params_used=params)


def auto_params(s: complex, eps: float) -> EvalParams:
    """Pick the first (N, nu) on the schedule whose certified bound meets ``eps``.

    The cutoff starts at max(16, ceil(2 (|Im s| + 1))) and doubles up to
    2^6 times; for each cutoff the tail order sweeps 2..25. Accuracy
    requests below 1e-13 are refused: binary64 rounding already eats that.
    """
    s = _as_complex(s)
    if abs(s.imag) > _IM_CAP:
        raise ParameterError(f"|Im s| = {abs(s.imag)} exceeds the supported range {_IM_CAP}")
    if not isinstance(eps, (int, float)) or not math.isfinite(eps) or eps <= 0:
        raise ParameterError(f"eps must be a finite positive number, got {eps!r}")
    if eps < _EPS_FLOOR:
        raise PrecisionError(f"eps = {eps} is below the binary64 floor {_EPS_FLOOR}")

    base = max(16, math.ceil(2.0 * (abs(s.imag) + 1.0)))
    best = math.inf
    for doubling in range(_AUTO_DOUBLINGS + 1):
        cutoff = base << doubling
        for nu in _AUTO_NU_RANGE:
            if s.real + 2 * nu + 1 <= 0:
                continue
            bound = remainder_bound(s, cutoff, nu)
            if bound < best:
                best = bound
            if bound <= eps:
                return EvalParams(cutoff_n=cutoff, tail_order=nu, target_eps=float(eps))
    raise PrecisionError(
        f"no schedule entry certifies eps = {eps} at s = {s!r}; best bound {best:.3e}",
        best_bound=best,
    )
