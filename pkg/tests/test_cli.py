import json
import subprocess
import sys

from twopoint.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_plambda(capsys):
    code, out, _ = run(capsys, "compute", "plambda", "--lambda", "2")
    assert code == 0
    assert out.strip() == "-1/4*z[-1]^3 + z[-1]*z[0]"


def test_compute_flambda_factored(capsys):
    code, out, _ = run(capsys, "compute", "flambda", "--lambda", "1", "--mu", "2", "--factored")
    assert code == 0
    assert out.strip().splitlines() == ["-1*(z[-2] - 15/4)*(z[-2] - 3/4)", "roots: {15/4, 3/4}"]


def test_compute_sugawara2(capsys):
    code, out, _ = run(capsys, "compute", "sugawara2", "--k2", "1", "--level", "1")
    assert code == 0
    assert out.strip().endswith("mod J(1)")
    code, out, _ = run(capsys, "compute", "sugawara2", "--k2", "1", "--level", "1", "--json")
    data = json.loads(out)
    assert data["schema"] == 1 and data["algebra"] == "TWO" and data["level2"] == 2
    assert data["terms"]


def test_compute_half_level(capsys):
    code, out, _ = run(capsys, "compute", "lstorto", "--k2", "2", "--level", "3/2", "--json")
    assert code == 0
    assert json.loads(out)["level2"] == 3


def test_compute_misc(capsys):
    code, out, _ = run(capsys, "compute", "coordmap", "--family", "s", "--n", "-2")
    assert code == 0 and out.splitlines()[0] == "a^-2*a[-2]"
    code, out, _ = run(capsys, "compute", "hyper", "--lambda", "1", "--mu", "1", "--nu", "0", "--json")
    data = json.loads(out)
    assert code == 0 and data["series"] == "1 - 2*a^-1*t"
    code, out, _ = run(capsys, "compute", "sugawara1", "--k", "1", "--level", "1")
    assert code == 0 and "(e:t:0)(f:t:0)" in out


def test_usage_errors(capsys):
    assert run(capsys, "compute", "plambda")[0] == 2
    assert run(capsys, "compute", "plambda", "--lambda", "0")[0] == 2
    assert run(capsys, "compute", "hyper", "--lambda", "1", "--mu", "1", "--nu", "1")[0] == 2
    assert run(capsys, "compute", "sugawara1", "--k", "1", "--level", "1/2")[0] == 2
    assert run(capsys, "compute", "sugawara2", "--k2", "1", "--level", "1/3")[0] == 2
    assert run(capsys, "verify", "nonsense")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "flambda", "--max-weight", "3", "--jobs", "1")
    assert code == 0
    assert out.splitlines()[-1] == "OK"
    assert out.splitlines()[0] == "flambda: 10/10 pass"


def test_verify_failure_exit_code(capsys):
    # the one-variable index 2k+1 does not match the diagonal image
    code, out, _ = run(capsys, "verify", "specialization", "--index-offset", "1", "--jobs", "1")
    assert code == 1
    assert "FAIL" in out and "expected:" in out and out.splitlines()[-1] == "FAILED"


def test_verify_json_schema(capsys):
    code, out, _ = run(capsys, "verify", "residues", "--json", "--jobs", "1")
    data = json.loads(out)
    assert code == 0 and data["schema"] == 1 and data["ok"] is True
    (rep,) = data["suites"]
    assert rep["suite"] == "residues"
    for c in rep["cases"]:
        assert set(c) == {"name", "params", "status", "expected", "actual"}
        assert c["status"] == "pass"
    code, out, _ = run(capsys, "verify", "residues", "--json", "--timings", "--jobs", "1")
    assert all("elapsed_ms" in c for c in json.loads(out)["suites"][0]["cases"])


def test_verify_deterministic(capsys):
    outs = {run(capsys, "verify", "duality", "--seed", "5", "--json", "--jobs", str(j))[1]
            for j in (1, 2, 1)}
    assert len(outs) == 1


def test_verify_group(capsys):
    code, out, _ = run(capsys, "verify", "weyl", "--quick", "--jobs", "1")
    lines = out.splitlines()
    assert code == 0
    assert lines[0].startswith("weyl: ") and lines[1].startswith("weyl-casimir: ")


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "twopoint", "compute", "plambda", "--lambda", "1"],
                       capture_output=True, text=True, timeout=60)
    assert p.returncode == 0
    assert p.stdout.strip() == "z[-1]^2"
