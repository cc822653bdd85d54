"""Cross-checks of the test oracles against mpmath.

The oracles feed frozen expected values into the other test modules, so
they get their own validation against an arbitrary-precision library
that shares no code with either the oracles or the package.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath as mp

import oracles


def test_bernoulli_scheme_small_values() -> None:
    assert oracles.bernoulli_akiyama_tanigawa(0) == Fraction(1)
    assert oracles.bernoulli_akiyama_tanigawa(1) == Fraction(-1, 2)
    assert oracles.bernoulli_akiyama_tanigawa(2) == Fraction(1, 6)
    assert oracles.bernoulli_akiyama_tanigawa(4) == Fraction(-1, 30)
    assert oracles.bernoulli_akiyama_tanigawa(12) == Fraction(-691, 2730)


def test_bernoulli_scheme_matches_mpmath_to_40() -> None:
    mp.mp.dps = 40
    for n in range(0, 42, 2):
        ours = float(oracles.bernoulli_akiyama_tanigawa(n))
        ref = float(mp.bernoulli(n))
        assert abs(ours - ref) <= 1e-12 * max(1.0, abs(ref))


def test_transcribed_evaluator_matches_mpmath_zeta() -> None:
    mp.mp.dps = 30
    points = [2 + 0j, -0.5 + 3j, 0.25 + 30j, 3 - 7j, 0.5 + 14.134725j]
    for s in points:
        ours = oracles.gb_eval(s)
        ref = complex(mp.zeta(mp.mpc(s.real, s.imag)))
        assert abs(ours - ref) <= 1e-11 * max(1.0, abs(ref))


def test_direct_series_partial_sums() -> None:
    # frozen: direct_series(2, 999) == 1.64393356668156 to 17 digits
    assert abs(oracles.direct_series(2 + 0j, 999).real - 1.64393356668156) <= 5e-14
    # the millionth partial sum sits within the integral tail of zeta(2)
    tail = abs(oracles.direct_series(2 + 0j, 10**6) - complex(mp.zeta(2)))
    assert tail <= 1.0e-6


def test_modulus_minimizer_matches_mpmath_ordinates() -> None:
    mp.mp.dps = 30
    brackets = ((14.0, 14.3), (20.9, 21.2), (24.9, 25.2))
    for k, (lo, hi) in enumerate(brackets, start=1):
        ours = oracles.bisect_modulus_zero(lo, hi)
        ref = float(mp.im(mp.zetazero(k)))
        assert abs(ours - ref) <= 5e-10
