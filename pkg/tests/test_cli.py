import io
import json
import subprocess
import sys

import pytest

from ordnota.cli import run


def call(*argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_cmp():
    assert call("cmp", "--system", "main:1", "C(C(0,0),0)", "C(W,0)") == (0, "<\n", "")


def test_std_and_explain():
    assert call("std", "--system", "main:1", "0") == (0, "standard\n", "")
    code, out, _ = call("std", "--system", "main:1", "--explain", "C(W,C(0,0))")
    assert code == 0
    assert out.splitlines()[0] == "nonstandard"
    assert "base-not-minimal" in out


def test_diff_matrix():
    code, out, _ = call("diff", "C(C(W+C(W*2,0),C(W*2,0)),0)", "--systems", "dor,main:2")
    assert code == 0
    assert out == "dor\t✓\nmain:2\t✗\n"


def test_norm_and_formats():
    assert call("norm", "--system", "main:1", "C(W,C(0,0))")[1] == "C(W,0)\n"
    assert call("parse", "--system", "main:1", "--format", "postfix", "C(0,W)")[1] == "W 0 C\n"
    code, out, _ = call("parse", "--system", "main:1", "--format", "structured", "C(0,W)")
    assert json.loads(out) == {"term": "C(0,W)", "postfix": "W 0 C"}
    assert call("parse", "--system", "dor", "--format", "c1", "C(W,0)")[0] == 0


def test_convert():
    assert call("convert", "--to", "omega_n", "--level", "2", "W_1")[1] == "C(W_2,0)\n"
    assert call("convert", "--system", "main:1", "--to", "c", "W+1")[1] == "C(0,W)\n"
    code, _, err = call("convert", "--system", "main:1", "--to", "c1", "C(W,C(0,0))")
    assert code == 1 and err


def test_config():
    assert call("config", "--system", "main:1", "C(W,0)", "0")[1] == "Lx. C(W,x) | x<W\n"


def test_enum():
    code, out, _ = call("enum", "--system", "main:0", "--max", "5")
    assert out.splitlines()[:3] == ["0", "C(0,0)", "C(0,C(0,0))"]


def test_batch_from_stdin(monkeypatch):
    code, out, _ = call("cmp", "--system", "main:1", stdin="# pairs\n0 ; W\nW ; 0\n", monkeypatch=monkeypatch)
    assert (code, out) == (0, "<\n>\n")


def test_batch_from_file(tmp_path):
    f = tmp_path / "terms.txt"
    f.write_text("C#2(W,0)  # sugar\n0\n", encoding="utf-8")
    assert call("parse", "--system", "dor", "--file", str(f))[1] == "C(W,C(W,0))\n0\n"


def test_exit_codes():
    assert call("parse", "--system", "main:1", "C(0,")[0] == 2
    assert call("parse", "--system", "nope", "0")[0] == 2
    assert call("bogus")[0] == 2
    assert call("cmp", "--system", "main:1", "0")[0] == 2
    assert call("parse", "--file", "/nonexistent/file")[0] == 2
    code, out, err = call("norm", "--system", "main:1", "C(0,0,0)")
    assert code == 2 and not out
    assert "arguments" in err


def test_errors_report_byte_offsets():
    code, _, err = call("parse", "--system", "main:1", "C(0,Ω)")
    assert code == 2 and "offset 4" in err


def test_fuzz_and_audit():
    code, out, _ = call("fuzz", "--system", "main:1", "--count", "30", "--seed", "3")
    assert code == 0 and out.strip() == "30/30 normalized to standard fixed points"
    code, out, _ = call("audit", "--system", "main:1", "--max", "5", "--samples", "100", "--budget", "200")
    assert code == 0 and "transitivity: pass" in out


def test_audit_reports_broken_rule():
    code, out, _ = call("audit", "--system", "dor-pass:broken", "--max", "5", "--samples", "100")
    assert code == 1 and "descending chain" in out


def test_width_override(monkeypatch):
    monkeypatch.setenv("ORDNOTA_WIDTH", "20")
    out = call("enum", "--system", "main:1", "--max", "9")[1]
    assert all(len(line) <= 20 for line in out.splitlines())


def test_pipe_identity():
    for text in ("C(W,C(0,0))", "C(C(W,0),W)", "C(C(C(W,W),W),0)"):
        _, normed, _ = call("norm", "--system", "main:1", text)
        assert call("std", "--system", "main:1", normed.strip())[1] == "standard\n"


@pytest.mark.parametrize("argv", [["enum", "--system", "dor", "--max", "7", "--format", "structured"],
                                  ["fuzz", "--system", "combined", "--count", "20", "--format", "structured"]])
def test_reruns_are_byte_identical(argv):
    assert call(*argv) == call(*argv)


def test_console_script_runs():
    proc = subprocess.run([sys.executable, "-m", "ordnota.cli", "cmp", "--system", "main:1", "0", "W"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "<\n"
