import dataclasses
import json
import subprocess
import sys

import pytest

from leeperfect import survey
from leeperfect.outcomes import Caps, InternalInconsistencyError, Status, Tier
from leeperfect.survey import Verdict, check, counts, emit, parse_report, scan


def test_check_examples():
    v = check(57, 2)
    assert v.excluded
    assert {"kim", "small_v"} <= set(v.fired())
    assert v.tier is Tier.UNCONDITIONAL

    v = check(16, 2)
    assert v.overall == "open" and not v.fired()

    v = check(20, 2)
    assert v.excluded and v.fired() == ["lambda"]


def test_check_n2_is_open():
    v = check(2, 2)
    assert v.overall == "open"
    survey.assert_oracle_coupling(v, oracle_exists=True)


def test_coupling_violation_raises():
    v = check(4, 2)
    assert v.excluded
    with pytest.raises(InternalInconsistencyError):
        survey.assert_oracle_coupling(v, oracle_exists=True)


def test_early_exit_stops_after_first_exclusion():
    v = check(4, 2, early_exit=True)
    assert v.excluded and len(v.outcomes) == 1


def test_criteria_subset():
    v = check(8, 2, criteria=["kim"])
    assert [o.criterion for o in v.outcomes] == ["kim"]
    assert not v.excluded  # n=8 is excluded by small_v only
    v = check(8, 2, criteria=["small_v"])
    assert v.excluded


def test_scan_sorted_and_range():
    verdicts = scan(2, 1, 6)  # lower end clamps to n=2
    assert [v.n for v in verdicts] == [2, 3, 4, 5, 6]


def test_scan_worker_pool_matches_serial():
    caps = dataclasses.replace(Caps(), thread_count=2)
    parallel = scan(2, 3, 12, caps, early_exit=False)
    serial = scan(2, 3, 12, Caps(), early_exit=False)
    assert parallel == serial


def test_counts_monotone_in_criteria():
    base = counts(2, 60, ["kim"]).total
    more = counts(2, 60, ["kim", "small_v"]).total
    assert more >= base


def test_counts_r3():
    assert counts(3, 10, ["square24"]).total == 1


def test_cap_monotonicity_on_field_check():
    # raising caps turns Skipped into a decision, never Excluded into Open
    low = dataclasses.replace(Caps(), max_field_degree=10)
    v_low = check(14, 2, low, criteria=["lambda", "field"])
    fields_low = [o for o in v_low.outcomes if o.criterion == "field"]
    assert any(o.status is Status.SKIPPED for o in fields_low)
    assert not v_low.excluded
    v_high = check(14, 2, criteria=["lambda", "field"])
    assert v_high.excluded and "field" in v_high.fired()


def test_emit_parse_roundtrip():
    caps = Caps()
    verdicts = scan(2, 3, 8, caps, early_exit=False)
    text = emit(verdicts, "json", caps)
    caps2, parsed = parse_report(text)
    assert caps2 == caps
    assert parsed == verdicts
    # byte-identical reruns
    assert text == emit(scan(2, 3, 8, caps, early_exit=False), "json", caps)


def test_emit_csv_schema():
    verdicts = scan(2, 3, 5, early_exit=False)
    text = emit(verdicts, "csv")
    lines = text.splitlines()
    assert lines[0] == "n,r,order,overall,tier,criteria_fired,skips"
    assert len(lines) == 1 + len(verdicts)
    assert "\r" not in text


def test_caps_file_roundtrip(tmp_path):
    caps = Caps(max_field_degree=70, seed=99)
    path = tmp_path / "caps.txt"
    caps.to_file(path)
    assert Caps.from_file(path) == caps
    path.write_text("max_field_degree = 33\n# comment\nseed = 7\n")
    loaded = Caps.from_file(path)
    assert loaded.max_field_degree == 33 and loaded.seed == 7
    path.write_text("bogus = 1\n")
    with pytest.raises(ValueError):
        Caps.from_file(path)


def test_verdict_json_holds_certificates():
    v = check(8, 2)
    doc = v.to_json()
    small_v = [o for o in doc["outcomes"] if o["criterion"] == "small_v"][0]
    assert small_v["certificate"]["fired"] == [5]
    assert Verdict.from_json(doc) == v


def _run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "leeperfect", *args],
        capture_output=True, text=True, timeout=600,
    )


def test_cli_check_and_exit_codes():
    res = _run_cli("check", "--r", "2", "--n", "4", "--format", "csv")
    assert res.returncode == 0
    assert "4,2,41,excluded" in res.stdout

    res = _run_cli("check", "--r", "5", "--n", "4")
    assert res.returncode == 1  # usage error

    res = _run_cli("scan", "--r", "2", "--from", "3", "--to", "6", "--format", "csv")
    assert res.returncode == 0 and len(res.stdout.splitlines()) == 5


def test_cli_empty_caps_file_means_defaults():
    # an empty caps file yields the default caps, which admit the n=14 check
    res = _run_cli(
        "check", "--r", "2", "--n", "14", "--format", "csv", "--strict",
        "--caps", "/dev/null",
    )
    assert res.returncode == 0


def test_cli_strict_skip_with_small_caps(tmp_path):
    caps = tmp_path / "caps.txt"
    caps.write_text("max_field_degree = 10\n")
    res = _run_cli("check", "--r", "2", "--n", "14", "--format", "csv",
                   "--strict", "--caps", str(caps))
    assert res.returncode == 3
