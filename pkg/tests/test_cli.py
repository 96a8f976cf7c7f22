import json
import subprocess
import sys

import pytest

from wgcalc.cli import EXIT_CAPACITY, EXIT_FAIL, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


class TestExamples:
    def test_wg_scaled(self, capsys):
        code, env = run_json(capsys, "wg", "--k", "2", "--d", "2", "--scaled")
        assert code == EXIT_OK
        assert env["result"] == {"[1,1]": "4/3", "[2]": "-2/3"}
        assert env["command"] == "wg"

    def test_topcoef(self, capsys):
        code, env = run_json(capsys, "topcoef", "--k", "5")
        assert code == EXIT_OK and env["passed"]
        assert env["result"]["values"]["[5]"] == 14
        assert env["result"]["factorization"]["[5]"] == "Cat_4"

    def test_integrate(self, capsys):
        code, env = run_json(capsys, "integrate", "--d", "2", "--u", "1,1", "--ubar", "1,1")
        assert code == EXIT_OK
        assert env["result"] == {"exact": "1/2"}


class TestCommands:
    def test_wg_table_order_d8(self, capsys):
        code, env = run_json(capsys, "wg", "--k", "8", "--d", "8", "--scaled")
        assert env["parameters"]["order"][0] == "[1,1,1,1,1,1,1,1]"
        assert env["parameters"]["order"][-1] == "[8]"
        assert env["result"]["[1,1,1,1,1,1,1,1]"] == "3245092/19305"
        assert env["result"]["[7,1]"] == "151/195"

    def test_wg_text_is_aligned(self, capsys):
        code, out, _ = run(capsys, "wg", "--k", "3", "--d", "3", "--scaled", "--text")
        lines = out.splitlines()
        assert lines[1].split() == ["[1,1,1]", "21/10"]
        assert len({len(l) for l in lines[1:]}) == 1

    def test_wg_symbolic(self, capsys):
        code, env = run_json(capsys, "wg", "--k", "2", "--symbolic")
        assert env["result"]["[2]"] == "-1/(d*(d - 1)*(d + 1))"
        assert env["parameters"]["d"] == "d"

    def test_wg_restricted_flag(self, capsys):
        code, env = run_json(capsys, "wg", "--k", "3", "--d", "2")
        assert env["parameters"]["restricted"] is True

    def test_char(self, capsys):
        code, env = run_json(capsys, "char", "--k", "5", "--table")
        assert env["result"]["[3,2]"]["[1,1,1,1,1]"] == 5
        code, env = run_json(capsys, "char", "--k", "4", "--lam", "[2,2]", "--mu", "[4]")
        assert env["result"] == 0

    def test_integrate_mc(self, capsys):
        code, env = run_json(capsys, "integrate", "--d", "3", "--u", "1,1 2,2", "--ubar", "1,1 2,2",
                             "--samples", "20000", "--seed", "1")
        assert env["result"]["exact"] == "1/8"
        assert set(env["result"]["mc"]) == {"mean", "stderr", "samples"}
        assert code == EXIT_OK and env["passed"]

    def test_integrate_symbolic(self, capsys):
        code, env = run_json(capsys, "integrate", "--symbolic", "--u", "1,1 1,2", "--ubar", "1,1 1,2")
        assert env["result"]["exact"] == "1/(d*(d + 1))"

    def test_connection(self, capsys):
        code, env = run_json(capsys, "connection", "--k", "4", "--classes", "[1,1,2]", "[1,3]")
        assert env["result"] == {"[2,1,1]": 4, "[4]": 4}
        code, env = run_json(capsys, "connection", "--classes", "[1,1,1,2]", "[1,4]", "--degenerate")
        assert env["result"] == {"[5]": 5}

    def test_formanek(self, capsys):
        code, env = run_json(capsys, "formanek", "--d", "2")
        assert code == EXIT_OK and env["passed"]
        assert env["result"]["computed_scalar"] == env["result"]["expected_scalar"] == "-3"
        code, out, _ = run(capsys, "formanek", "--d", "2", "--text")
        assert out.splitlines()[-1] == "PASS"

    def test_rsk(self, capsys):
        code, env = run_json(capsys, "rsk", "--word", "strange")
        assert env["result"]["shape"] == "[2,2,1,1,1]"
        assert env["result"]["Q"] == [[1, 2], [3, 5], [4], [6], [7]]
        code, env = run_json(capsys, "rsk", "--perm", "(1 2)")
        assert env["result"]["P"] == [["1"], ["2"]]

    def test_goodbasis(self, capsys):
        code, env = run_json(capsys, "goodbasis", "--k", "5", "--d", "2", "--count")
        assert env["result"] == {"count": 42, "expected": 42}
        code, env = run_json(capsys, "goodbasis", "--k", "3", "--d", "2")
        assert len(env["result"]["permutations"]) == 5

    def test_conjecture(self, capsys):
        code, env = run_json(capsys, "conjecture", "--d-max", "6")
        assert code == EXIT_OK and env["passed"]
        assert env["result"]["5"]["largest_denominator"] == 126
        code, env = run_json(capsys, "conjecture", "--d-min", "13", "--d-max", "13")
        assert code == EXIT_FAIL and not env["passed"]
        assert env["result"]["13"]["counterexamples"] == [["[7,1,1,1,1,1,1]", "[2,2,2,2,1,1,1,1,1]"]]

    def test_verify_all_smoke(self, capsys):
        code, out, _ = run(capsys, "verify-all", "--level", "smoke", "--text")
        lines = [l for l in out.splitlines() if l.startswith(("PASS", "FAIL"))]
        assert len(lines) == 13 and all(l.startswith("PASS") for l in lines)
        assert code == EXIT_OK


class TestEnvelope:
    def test_timing_only_on_request(self, capsys):
        _, env = run_json(capsys, "topcoef", "--k", "3")
        assert "timing" not in env
        _, env = run_json(capsys, "topcoef", "--k", "3", "--timing")
        assert env["timing"]["seconds"] >= 0

    def test_sorted_keys(self, capsys):
        _, out, _ = run(capsys, "wg", "--k", "4", "--d", "5")
        env = json.loads(out)
        assert out == json.dumps(env, sort_keys=True, indent=2) + "\n"

    def test_byte_identical_subprocess(self):
        argv = [sys.executable, "-m", "wgcalc", "integrate", "--d", "2", "--u", "1,1 1,2",
                "--ubar", "1,1 1,2", "--samples", "5000", "--seed", "3"]
        a = subprocess.run(argv, capture_output=True, check=True).stdout
        b = subprocess.run(argv, capture_output=True, check=True).stdout
        assert a == b and b"1/6" in a


class TestErrors:
    def test_unknown_command(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["bogus"])
        assert info.value.code == EXIT_USAGE
        assert "usage" in capsys.readouterr().err

    def test_bad_partition_sizes(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["connection", "--classes", "[2,1]", "[2]"])
        assert info.value.code == EXIT_USAGE

    def test_value_errors(self, capsys):
        assert run(capsys, "wg", "--k", "3")[0] == EXIT_USAGE
        assert run(capsys, "integrate", "--d", "2", "--u", "1,5", "--ubar", "1,1")[0] == EXIT_USAGE
        assert run(capsys, "rsk")[0] == EXIT_USAGE

    def test_capacity(self, capsys):
        code, _, err = run(capsys, "formanek", "--d", "4")
        assert code == EXIT_CAPACITY and "capacity" in err
