"""Audit tests: per-zero proposition checks, the factorization rest,
the eight-line verdict report, and its deterministic JSON rendering."""

from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetagb.audit import (
    CONTROL_POINTS,
    DEFAULT_SAMPLE_SEED,
    SAMPLE_BOX,
    TOLERANCES,
    audit_range,
    audit_zero,
    draw_samples,
    factorization_check,
    q_variation,
    render_text,
    report_to_json,
)
from zetagb.errors import ParameterError
from zetagb.qfunction import q_gb
from zetagb.zero_scan import ScanConfig, ZeroRecord, refine_zero
from zetagb.zeta_core import EvalParams

FIRST_ORDINATE = 14.13472514172102


# ---------------------------------------------------------------------------
# factorization algebra
# ---------------------------------------------------------------------------


def test_factorization_deviation_equals_the_rest() -> None:
    s_h = complex(0.6, 21.0)
    q = complex(7.0, -3.0)
    rest = abs(q - s_h * (1 - s_h))
    dev = factorization_check(s_h, q, draw_samples(50))
    assert abs(dev - rest) <= 1e-10 * (1.0 + abs(q))


@settings(max_examples=100, deadline=None)
@given(
    sh_re=st.floats(min_value=0.0, max_value=1.0),
    sh_im=st.floats(min_value=0.0, max_value=50.0),
    q_re=st.floats(min_value=-50.0, max_value=50.0),
    q_im=st.floats(min_value=-50.0, max_value=50.0),
)
def test_factorization_rest_is_constant_in_s(sh_re, sh_im, q_re, q_im) -> None:
    s_h = complex(sh_re, sh_im)
    q = complex(q_re, q_im)
    rest = abs(q - s_h * (1 - s_h))
    dev = factorization_check(s_h, q, draw_samples(25))
    assert abs(dev - rest) <= 1e-10 * (1.0 + abs(q))


def test_factorization_rejects_empty_samples() -> None:
    with pytest.raises(ParameterError):
        factorization_check(0.5 + 14j, 200 + 0j, [])


def test_draw_samples_is_seeded_and_boxed() -> None:
    assert draw_samples(10, 123) == draw_samples(10, 123)
    assert draw_samples(10, 123) != draw_samples(10, 124)
    lo_s, hi_s, lo_t, hi_t = SAMPLE_BOX
    for s in draw_samples(200):
        assert lo_s <= s.real <= hi_s
        assert lo_t <= s.imag <= hi_t
    with pytest.raises(ParameterError):
        draw_samples(0)


# ---------------------------------------------------------------------------
# per-zero checks
# ---------------------------------------------------------------------------


@pytest.fixture(scope="module")
def first_zero() -> ZeroRecord:
    return refine_zero(complex(0.5, 14.1))


def test_audit_zero_passes_at_a_real_zero(first_zero) -> None:
    checks = audit_zero(first_zero)
    assert checks.xi_abs <= TOLERANCES["xi"]
    assert checks.zero_residual_abs <= TOLERANCES["zero_residual"]
    assert checks.q_imag_rel <= TOLERANCES["q_imag_rel"]
    assert checks.q_vs_quarter_plus_t2 <= TOLERANCES["q_vs_quarter_plus_t2"]
    assert checks.division_rest_abs <= TOLERANCES["division_rest"]
    assert checks.conj_relation_abs <= TOLERANCES["conj_relation"]
    gap = abs(checks.factorization_max_dev - checks.division_rest_abs)
    assert gap <= TOLERANCES["factorization_agree"] * (1.0 + abs(first_zero.q_value))


def test_conj_relation_is_twice_xi(first_zero) -> None:
    checks = audit_zero(first_zero)
    assert abs(checks.conj_relation_abs - 2.0 * checks.xi_abs) <= 1e-12


def test_audit_zero_flags_an_off_line_record() -> None:
    params = EvalParams(64, 8)
    s = complex(0.6, FIRST_ORDINATE)
    fake = ZeroRecord(t=FIRST_ORDINATE, s=s, xi=0.1, z_modulus=1e-11,
                      q_value=q_gb(s, params).value, refine_iterations=3,
                      params_used=params)
    checks = audit_zero(fake)
    assert checks.xi_abs == pytest.approx(0.1, abs=1e-12)
    assert checks.conj_relation_abs == pytest.approx(0.2, abs=1e-12)
    assert checks.zero_residual_abs > 1.0


def test_audit_zero_rejects_weaker_params(first_zero) -> None:
    used = first_zero.params_used
    with pytest.raises(ParameterError):
        audit_zero(first_zero, EvalParams(used.cutoff_n // 2, used.tail_order))
    with pytest.raises(ParameterError):
        audit_zero("not a record")  # type: ignore[arg-type]


def test_q_variation_across_controls() -> None:
    var = q_variation([2 + 0j, 3 + 0j], EvalParams(8, 6))
    assert var.max_delta == pytest.approx(0.12523005928371228, rel=1e-12)
    assert len(var.points) == 2
    with pytest.raises(ParameterError):
        q_variation([2 + 0j], EvalParams(8, 6))


# ---------------------------------------------------------------------------
# range audits and reports
# ---------------------------------------------------------------------------


def test_audit_range_over_the_first_window() -> None:
    report = audit_range(14.0, 15.0)
    assert report.complete
    assert report.abort_reason is None
    assert len(report.zero_checks) == 1
    assert report.half_counts == (0, 0)
    assert len(report.verdict_lines) == 8
    assert all(" PASS " in line for line in report.verdict_lines)
    assert [line.split()[0] for line in report.verdict_lines] == [
        "I", "II", "III", "IV", "V", "VI", "VII", "VIII",
    ]
    assert report.sample_seed == DEFAULT_SAMPLE_SEED
    assert len(report.consistency_controls) == len(CONTROL_POINTS)


def test_audit_range_with_no_zeros_is_vacuously_complete() -> None:
    report = audit_range(1.0, 3.0)
    assert report.complete
    assert report.zero_checks == ()
    assert report.half_counts == (0, 0)
    assert any("vacuous" in line for line in report.verdict_lines)
    assert not any(" FAIL " in line for line in report.verdict_lines)


def test_audit_range_aborts_to_a_partial_report() -> None:
    cfg = ScanConfig(max_iter=1, strict_refine=True)
    report = audit_range(14.0, 15.0, cfg)
    assert not report.complete
    assert "RefinementError" in (report.abort_reason or "")
    assert len(report.verdict_lines) == 8
    assert all(" SKIP " in line for line in report.verdict_lines)
    assert "INCOMPLETE" in render_text(report)


def test_audit_range_validation() -> None:
    with pytest.raises(ParameterError):
        audit_range(-1.0, 5.0)
    with pytest.raises(ParameterError):
        audit_range(5.0, 5.0)
    with pytest.raises(ParameterError):
        audit_range(1.0, 3.0, seed="x")  # type: ignore[arg-type]


def test_report_json_is_deterministic_and_round_trips() -> None:
    first = report_to_json(audit_range(14.0, 15.0))
    second = report_to_json(audit_range(14.0, 15.0))
    assert first == second
    payload = json.loads(first)
    assert payload["schema_version"] == "1"
    assert payload["complete"] is True
    assert len(payload["verdicts"]) == 8
    assert payload["params"]["N"] >= 2
    from zetagb.serialize import dumps

    assert dumps(payload, indent=2) + "\n" == first


def test_render_text_mentions_the_verdicts() -> None:
    report = audit_range(14.0, 15.0)
    text = render_text(report)
    assert "verdicts:" in text
    assert "zeros found: 1" in text
