import io
import json
import subprocess
import sys

import pytest

from spsymbols.cli import run

IDENT = {"ring": "Z", "n": 2, "sign": 1, "columns": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]}
DEEP = {"ring": "Z", "columns": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 3]]}


def call(*argv):
    out = io.StringIO()
    status = run(list(argv), out)
    text = out.getvalue()
    assert text.endswith("\n")
    return status, json.loads(text)


def test_reduce_identity():
    status, out = call("reduce", json.dumps(IDENT))
    assert status == 0
    assert len(out["terms"]) == 1
    assert out["terms"][0]["columns"] == [[[int(i == j), 0] for j in range(4)] for i in range(4)]
    assert "trace" in out


def test_reduce_verify_and_trace_file(tmp_path):
    path = tmp_path / "trace.jsonl"
    status, out = call("reduce", json.dumps(DEEP), "--verify", "--trace-file", str(path))
    assert status == 0 and out["verified"] is True
    lines = path.read_text().splitlines()
    assert lines and all(json.loads(line)["step"] for line in lines)


def test_depth_example():
    assert call("depth", json.dumps(DEEP)) == (0, {"depth": 3})


def test_verify_roundtrip():
    _, red = call("reduce", json.dumps(DEEP), "--trace", "off")
    payload = {"symbol": DEEP, "relation": {"terms": red["terms"]}}
    assert call("verify", json.dumps(payload)) == (0, {"equal": True})
    payload["relation"]["terms"] = red["terms"][1:]
    assert call("verify", json.dumps(payload)) == (0, {"equal": False})


def test_relation_and_candidate():
    status, out = call("relation", json.dumps({"symbol": IDENT, "x": [1, 1, 1, 1]}), "--verify")
    assert status == 0 and len(out["terms"]) == 4 and out["verified"]
    status, out = call("candidate", json.dumps(DEEP))
    assert status == 0 and out["index"] == 3


def test_hnf_and_check_id():
    status, out = call("hnf", json.dumps(DEEP))
    assert status == 0 and set(out) == {"gamma", "t"}
    status, out = call("check-id", json.dumps({"symbol": {"columns": IDENT["columns"]}, "x": [1, 2, 3, 4]}))
    assert status == 0 and out["holds"]


def test_random_is_deterministic():
    a = io.StringIO()
    b = io.StringIO()
    run(["random", "--mode", "deep-symbol", "--seed", "5", "--max-depth", "9", "--n", "3"], a)
    run(["random", "--seed", "5", "--max-depth", "9", "--n", "3", "--mode", "deep-symbol"], b)
    assert a.getvalue() == b.getvalue()


def test_reduce_output_is_byte_identical():
    outs = set()
    for _ in range(2):
        buf = io.StringIO()
        run(["reduce", json.dumps(DEEP)], buf)
        outs.add(buf.getvalue())
    assert len(outs) == 1


def test_domain_error_exit_code():
    bad = {"columns": [[1, 0, 0, 0], [0, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0]]}
    status, out = call("reduce", json.dumps(bad))
    assert status == 2 and out["error"] == "isotropy-violation"
    status, out = call("candidate", json.dumps(IDENT))
    assert status == 2 and out["error"] == "precondition"


@pytest.mark.parametrize("text", ["{not json", '{"columns": [[1, 0], [0]]}', "[1, 2]", '{"columns": [[true, 0], [0, 1]]}'])
def test_malformed_input(text):
    status, out = call("reduce", text)
    assert status == 1 and out["error"] == "malformed-input"


def test_ring_flag_and_stdin(monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps({"columns": [[1, 0], [[1, 1], 3]]})))
    status, out = call("reduce", "--ring", "Z[i]")
    assert status == 0 and all(t["ring"] == "Z[i]" for t in out["terms"])


def test_module_entry_point(tmp_path):
    f = tmp_path / "in.json"
    f.write_text(json.dumps(DEEP))
    proc = subprocess.run([sys.executable, "-m", "spsymbols", "depth", "--in", str(f)], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout) == {"depth": 3}
