"""CLI behavior: exit codes, output formats, determinism, cap overrides."""

import io
import json

from zerosum import parse_group, parse_sequence
from zerosum.cli import _emit_report, run, strip_timing
from zerosum.structure import VerificationReport


def invoke(argv, env=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_davenport_json():
    code, out, err = invoke(["davenport", "--group", "3,6"])
    assert code == 0 and err == ""
    payload = json.loads(out)
    assert payload["D"] == 8 and payload["group"] == "3,6"
    assert payload["nodes"] > 0


def test_davenport_text_and_csv():
    code, out, _ = invoke(["davenport", "--group", "2,4", "--output", "text"])
    assert code == 0 and "D(2,4) = 5" in out
    code, out, _ = invoke(["davenport", "--group", "2,4", "--output", "csv"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "group,D,witness,elapsed_ms,nodes"
    assert lines[1].startswith('"2,4",5,')


def test_enumerate_stream_and_summary():
    code, out, _ = invoke(["enumerate", "--group", "2,4"])
    assert code == 0
    lines = out.splitlines()
    summary = json.loads(lines[-1])
    assert summary["total"] == 8 == len(lines) - 1
    assert summary["orbits"] == 1
    assert lines[0] == "[0,1]^3 [1,0] [1,1]"
    G = parse_group("2,4")
    for line in lines[:-1]:
        assert line == str(parse_sequence(G, line))  # canonical text round-trips


def test_enumerate_canonical():
    code, out, _ = invoke(["enumerate", "--group", "2,4", "--canonical"])
    assert code == 0
    lines = out.splitlines()
    assert lines[:-1] == ["[0,1]^3 [1,0] [1,1]"]


def test_classify_json():
    code, out, _ = invoke(
        ["classify", "--group", "2,4", "--sequence", "[0,1]^3 [1,2] [1,3]"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["is_type1"] is True
    assert {"e1": "[1,0]", "e2": "[0,1]", "j": 2, "x": [1, 2]} in payload[
        "type1_witnesses"
    ]


def test_classify_rejects_short_sequence():
    code, out, err = invoke(["classify", "--group", "2,4", "--sequence", "[0,0]"])
    assert code == 2 and out == "" and "error" in err


def test_verify_exit_codes_and_reports():
    code, out, _ = invoke(["verify", "theorem", "--group", "2,4"])
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] is True and payload["violations"] == []
    code, out, _ = invoke(["verify", "property-b", "--m", "2"])
    assert code == 0 and json.loads(out)["checked"] == 1
    code, out, _ = invoke(["verify", "cyclic", "--n", "6"])
    assert code == 0 and json.loads(out)["checked"] == 2
    code, out, _ = invoke(
        ["verify", "egz", "--n", "3", "--trials", "20", "--seed", "7"]
    )
    assert code == 0 and json.loads(out)["checked"] == 21
    code, out, _ = invoke(["verify", "tm1", "--m", "2", "--t", "2"])
    assert code == 0 and json.loads(out)["checked"] == 1


def test_verify_missing_flags_is_usage_error():
    code, out, err = invoke(["verify", "property-b"])
    assert code == 2 and "requires --m" in err
    code, out, err = invoke(["verify", "tm1", "--m", "2"])
    assert code == 2 and "--t" in err


def test_usage_errors():
    code, _, _ = invoke(["no-such-command"])
    assert code == 2
    code, _, _ = invoke(["davenport"])  # missing --group
    assert code == 2
    code, _, err = invoke(["davenport", "--group", "4,2"])
    assert code == 2 and "divide" in err


def test_cap_exceeded_exit_code():
    code, _, err = invoke(["davenport", "--group", "10,10"])
    assert code == 3 and "cap" in err
    code, _, err = invoke(["enumerate", "--group", "2,4", "--cap", "4"])
    assert code == 3


def test_env_var_overrides_enumeration_cap(monkeypatch):
    monkeypatch.setenv("ZEROSUM_CAP_ORDER", "4")
    code, _, err = invoke(["enumerate", "--group", "3,6"])
    assert code == 3
    monkeypatch.setenv("ZEROSUM_CAP_ORDER", "64")
    code, _, _ = invoke(["enumerate", "--group", "3,6"])
    assert code == 0


def test_flag_cap_beats_env(monkeypatch):
    monkeypatch.setenv("ZEROSUM_CAP_ORDER", "4")
    code, _, _ = invoke(["enumerate", "--group", "3,6", "--cap", "40"])
    assert code == 0


def test_json_lines_discipline():
    _, out, _ = invoke(["verify", "cyclic", "--n", "8"])
    for line in out.splitlines():
        json.loads(line)


def test_identical_invocations_are_byte_identical():
    a = invoke(["enumerate", "--group", "2,6"])[1]
    b = invoke(["enumerate", "--group", "2,6"])[1]
    assert strip_timing(a) == strip_timing(b)
    a = invoke(["verify", "egz", "--n", "4", "--trials", "50", "--seed", "3"])[1]
    b = invoke(["verify", "egz", "--n", "4", "--trials", "50", "--seed", "3"])[1]
    assert strip_timing(a) == strip_timing(b)


def test_strip_timing_only_touches_elapsed():
    text = '{"elapsed_ms": 1234, "nodes": 99}\n'
    assert strip_timing(text) == '{"elapsed_ms": 0, "nodes": 99}\n'


def test_report_with_violations_exits_one():
    report = VerificationReport(
        check="synthetic",
        params={},
        checked=1,
        violations=["[1,1]"],
        verdict=False,
        elapsed_ms=0,
    )
    out = io.StringIO()
    assert _emit_report(out, report, "json") == 1
    assert json.loads(out.getvalue())["verdict"] is False
    out = io.StringIO()
    assert _emit_report(out, report, "text") == 1
    assert "FAILED" in out.getvalue()


def test_verify_text_and_csv_outputs():
    code, out, _ = invoke(
        ["verify", "cyclic", "--n", "6", "--output", "text"]
    )
    assert code == 0 and "verified" in out
    code, out, _ = invoke(["verify", "cyclic", "--n", "6", "--output", "csv"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "check,params,checked,violations,verdict,elapsed_ms"
    assert lines[1].startswith("cyclic,")
