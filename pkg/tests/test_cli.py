import io
import json
import subprocess
import sys

from prymrank.cli import main


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def run_json(*argv):
    code, text = run("--no-timing", *argv)
    return code, (json.loads(text) if text else None)


def test_no_args_is_usage_error(capsys):
    assert main([]) == 2
    assert "usage" in capsys.readouterr().err


def test_unknown_subcommand():
    assert run("frobnicate")[0] == 2


def test_hyper_x6_minus_1_zero_matrix():
    code, doc = run_json("hw", "hyper", "--p", "5", "--d", "-1,0,0,0,0,0,1")
    assert code == 0
    assert doc["command"] == "hw hyper"
    assert doc["result"]["matrix"] == [[0, 0], [0, 0]] and doc["result"]["p_rank"] == 0
    assert set(doc) == {"command", "params", "result", "timing_ms"}
    assert doc["timing_ms"] is None


def test_timing_present_by_default():
    code, text = run("hw", "hyper", "--p", "5", "--d", "-1,0,0,0,0,0,1")
    assert isinstance(json.loads(text)["timing_ms"], float)


def test_verify_tables_p3():
    code, doc = run_json("verify-paper", "--p", "3")
    assert code == 0 and len(doc["result"]["rows"]) == 6


def test_verify_tables_p5_reports_failure():
    code, doc = run_json("search", "verify-paper", "--p", "5")
    assert code == 1
    assert not all(r["passed"] for r in doc["result"]["rows"])


def test_malformed_polynomial():
    assert run("hw", "quartic", "--p", "3", "--q", "u^4 + $")[0] == 2


def test_malformed_element_list():
    assert run("hw", "hyper", "--p", "5", "--d", "1,x,2")[0] == 2


def test_quartic_and_section():
    code, doc = run_json("hw", "quartic", "--p", "3", "--q", "u^4 + v^4 + 1")
    assert code == 0 and doc["result"]["p_rank"] == 0
    code, doc = run_json("hw", "section", "--p", "5", "--v", "2,3,3,1",
                         "--h", "X1^4 + X2^4 + X3^4 + X4^4")
    assert code == 0 and len(doc["result"]["matrix"]) == 3


def test_prym_bruin_row_3_0():
    code, doc = run_json("prym", "bruin", "--p", "3", "--q", "2,0,2,0,0,1,1,1,1,0,1,2,2,2,2")
    r = doc["result"]
    assert code == 0 and (r["f"], r["f_prime"], r["X_smooth"], r["Z_smooth"]) == (3, 0, True, True)


def test_prym_smooth_and_phi():
    assert run_json("prym", "smooth", "--p", "5", "--f", "(u^2+v*w)^2")[1]["result"]["smooth"] is False
    code, doc = run_json("prym", "phi", "--p", "5", "--d", "-1,0,0,0,0,0,1",
                         "--p1", "0,2", "--p2", "1,0")
    assert code == 0 and doc["result"]["kappa_value"] == 0


def test_extension_field_elements():
    # F_9 elements written "c0,c1" and separated by ';'
    code, doc = run_json("count", "curve", "--p", "3", "--k", "2",
                         "--d", "1,0;0,1;0,0;1,0;0,0;0,0;1,0")
    assert code == 0 and doc["result"]["kummer_naive"] == doc["result"]["kummer_formula"]


def test_count_kummer_x6_minus_1():
    code, doc = run_json("count", "kummer", "--p", "5", "--d", "-1,0,0,0,0,0,1")
    assert doc["result"] == {"n1": 6, "n2": 46, "a1": 0, "a2": 10, "jac": 36,
                             "kummer_naive": 36, "kummer_formula": 36, "congruence_ok": True}


def test_csv_and_text_formats():
    code, text = run("--format", "csv", "--no-timing", "hw", "hyper", "--p", "5",
                     "--d", "-1,0,0,0,0,0,1")
    assert code == 0 and text.splitlines()[0] == "key,value"
    code, text = run("--format", "text", "--no-timing", "hw", "hyper", "--p", "5",
                     "--d", "-1,0,0,0,0,0,1")
    assert text.startswith("hw hyper\n")


def test_seed_option_after_subcommand_equals_global():
    a = run_json("search", "find", "--p", "3", "--f", "3", "--fp", "0", "--seed", "4")
    b = run_json("--seed", "4", "search", "find", "--p", "3", "--f", "3", "--fp", "0")
    assert a == b and a[1]["params"]["seed"] == 4


def test_seed_from_environment(monkeypatch):
    monkeypatch.setenv("PRYMRANK_SEED", "4")
    a = run_json("search", "find", "--p", "3", "--f", "3", "--fp", "0")
    monkeypatch.delenv("PRYMRANK_SEED")
    b = run_json("search", "find", "--p", "3", "--f", "3", "--fp", "0", "--seed", "4")
    assert a == b


def test_output_independent_of_threads(monkeypatch):
    argv = ["--no-timing", "search", "find", "--p", "3", "--f", "1", "--fp", "1", "--seed", "2"]
    one = run(*argv)
    monkeypatch.setenv("PRYMRANK_THREADS", "3")
    three = run(*argv)
    assert one == three and one[0] == 0


def test_bad_thread_count():
    assert run("--threads", "0", "hw", "hyper", "--p", "5", "--d", "-1,0,0,0,0,0,1")[0] == 2


def test_search_exhausted_exit_code():
    code, doc = run_json("search", "find", "--p", "3", "--f", "0", "--fp", "0", "--budget", "2")
    assert code == 1 and doc["result"]["found"] is False


def test_contradictory_target_is_usage_error():
    assert run("search", "find", "--p", "5", "--f", "3", "--fp", "2",
               "--curve", "-1,0,0,0,0,0,1")[0] == 2


def test_degree_b_wrong_prime():
    assert run("search", "degree-b", "--p", "7")[0] == 2


def test_module_entry_point_is_byte_stable():
    cmd = [sys.executable, "-m", "prymrank", "--no-timing", "prym", "kummer", "--p", "7",
           "--d", "-1,0,0,0,0,0,1"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["command"] == "prym kummer"
