import dataclasses
import json

import pytest

from oddsum.sums import u_fast, v_fast
from oddsum.verify import (
    CLAIMS,
    THEOREM_IDS,
    Evaluators,
    RangeConfig,
    check,
    run_all,
)

SMOKE = RangeConfig(
    max_n=64, max_m=5, max_r=3, max_p=16, random_big_trials=5, random_bits=64, seed=7
)


def test_registry_shape():
    assert len(THEOREM_IDS) == 22
    assert len(set(THEOREM_IDS)) == 22
    assert set(CLAIMS) == set(THEOREM_IDS)
    for claim in CLAIMS.values():
        assert claim and "\n" not in claim


def test_run_all_smoke_passes():
    reports = run_all(SMOKE)
    assert [r.theorem for r in reports] == list(THEOREM_IDS)
    assert all(r.status == "pass" for r in reports)
    assert all(r.counterexample is None for r in reports)
    by_id = {r.theorem: r.checked_count for r in reports}
    assert by_id["P1B"] == 64
    assert by_id["L2"] == (SMOKE.max_r + 1) * (SMOKE.max_p + 1)
    assert by_id["COR6"] == SMOKE.max_r * SMOKE.max_p
    assert by_id["P2D"] == SMOKE.max_n + SMOKE.random_big_trials


def test_reports_are_deterministic():
    first = run_all(SMOKE)
    second = run_all(SMOKE)
    assert [r.line() for r in first] == [r.line() for r in second]
    assert [json.dumps(r.record(), sort_keys=True) for r in first] == [
        json.dumps(r.record(), sort_keys=True) for r in second
    ]


def test_pass_line_format():
    report = check("P1B", SMOKE)
    assert report.line() == "P1B pass checked=64"


def test_record_shape():
    report = check("P1B", SMOKE)
    record = report.record()
    assert record["theorem"] == "P1B"
    assert record["status"] == "pass"
    assert record["checked"] == 64
    assert record["range"]["max_n"] == 64 and record["range"]["seed"] == 7
    assert record["counterexample"] is None
    assert "elapsed" not in record


def test_unknown_theorem_raises():
    with pytest.raises(ValueError):
        check("T9")


def test_default_config_is_the_documented_range():
    config = RangeConfig()
    assert (config.max_n, config.max_m, config.max_r, config.max_p) == (
        1 << 16,
        14,
        8,
        256,
    )
    assert (config.random_big_trials, config.random_bits, config.seed) == (1000, 256, 0)


def test_pass_report_counts_the_full_range():
    config = RangeConfig(max_n=4096, random_big_trials=2, random_bits=64)
    report = check("ORACLE_UVG", config)
    assert report.status == "pass"
    assert report.checked_count == 4096


def test_corrupted_v_fails_at_smallest_corrupted_n():
    def bad_v(n):
        value = v_fast(n)
        return value + 1 if n in (37, 100) else value

    ev = dataclasses.replace(Evaluators(), sum_v=bad_v)
    report = check("T5", SMOKE, ev)
    assert report.status == "fail"
    assert report.checked_count == 37
    assert dict(report.counterexample.inputs)["n"] == "37"
    assert "fail" in report.line() and "n=37" in report.line()


def test_corrupted_u_fails_oracle_and_sharp_bounds():
    def bad_u(n):
        return u_fast(n) + (1 if n == 6 else 0)

    ev = dataclasses.replace(Evaluators(), sum_u=bad_u)
    for theorem in ("ORACLE_UVG", "T2"):
        report = check(theorem, SMOKE, ev)
        assert report.status == "fail"
        assert report.checked_count == 6
        assert dict(report.counterexample.inputs)["n"] == "6"


def test_corrupted_u_fail_record_round_trips_through_json():
    def bad_u(n):
        return u_fast(n) + (1 if n == 6 else 0)

    ev = dataclasses.replace(Evaluators(), sum_u=bad_u)
    record = check("ORACLE_UVG", SMOKE, ev).record()
    parsed = json.loads(json.dumps(record))
    assert parsed["status"] == "fail"
    assert parsed["counterexample"]["inputs"] == {"n": "6", "function": "U"}
    assert parsed["counterexample"]["expected"] == "14"
    assert parsed["counterexample"]["actual"] == "15"


def test_corrupted_h_is_noticed():
    ev = dataclasses.replace(Evaluators(), h=lambda n: 0)
    report = check("L1", SMOKE, ev)
    assert report.status == "fail"
    # h = 0 wrongly claims the all-ones signature at n = 2
    assert dict(report.counterexample.inputs)["n"] == "2"


def test_corrupted_dev_g_breaks_reflection():
    def bad_g(n):
        from oddsum.deviations import dev_g

        return dev_g(n) + (1 if n == 9 else 0)

    ev = dataclasses.replace(Evaluators(), dev_g=bad_g)
    report = check("P6B", SMOKE, ev)
    assert report.status == "fail"
    assert dict(report.counterexample.inputs)["n"] == "9"


def test_seed_changes_random_arguments_but_not_verdicts():
    for seed in (0, 1, 12345):
        config = dataclasses.replace(SMOKE, seed=seed)
        assert check("P2C", config).status == "pass"
        assert check("EQ4_IDENTITY", config).status == "pass"
