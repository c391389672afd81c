import json

import pytest

from solab.cli import RunConfig, main, report_body, run


def call(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def report(capsys, *argv):
    code, out, err = call(capsys, *argv)
    return code, json.loads(out), err


def test_pins_exact(capsys):
    code, doc, _ = report(capsys, "pins", "--n", "5", "--a", "(1 2)(3 4)", "--exact")
    assert code == 0 and doc["passed"]
    assert doc["result"]["p_ins"] == "2/5"
    assert doc["provenance"]["config"]["command"] == "pins"
    assert "timestamp" in doc["provenance"]["runtime"]


def test_pins_montecarlo_deterministic(capsys):
    argv = ("pins", "--n", "7", "--a", "(1 2 3)", "--samples", "2000", "--seed", "11")
    _, a, _ = report(capsys, *argv)
    _, b, _ = report(capsys, *argv, "--workers", "2")
    assert report_body(a) == report_body(b)


def test_csv_output(capsys):
    code, out, _ = call(capsys, "fpagl", "--q-max", "9", "--csv")
    lines = out.strip().splitlines()
    assert code == 0
    assert lines[0] == "q,max_fix,sqrt_q,pass"
    assert [line.split(",")[0] for line in lines[1:]] == ["2", "3", "4", "5", "7", "8", "9"]
    _, out2, _ = call(capsys, "--output", "csv", "fpagl", "--q-max", "9")
    assert out2 == out


def test_pretty_output(capsys):
    code, out, _ = call(capsys, "--output", "pretty", "totient-count", "--n", "1000", "--delta1", "0.5",
                        "--delta2", "0.3")
    assert code == 0 and "all checks passed" in out


def test_eta_range(capsys):
    code, doc, _ = report(capsys, "eta", "--n", "5..5")
    assert code == 0
    assert "2/5" in json.dumps(doc["result"])


def test_two_coset(capsys):
    code, doc, _ = report(capsys, "two-coset", "--n", "5")
    assert code == 0 and doc["passed"]
    assert "19/30" in json.dumps(doc["result"])


def test_solubilizer_and_crucial(capsys):
    code, doc, _ = report(capsys, "solubilizer", "--group", "alt5", "--g", "(1 2 3 4 5)")
    assert code == 0 and doc["result"]["ratio"] == "1/6"
    code, doc, _ = report(capsys, "crucial", "--construction", "alt5^2:swap", "--g", "swap",
                          "--eta", "from-eta-exact:5")
    assert code == 0 and doc["passed"]
    assert doc["result"]["t"] == 1 and doc["result"]["ratio"] == "11/30"


def test_verify_exit_codes(capsys):
    code, doc, _ = report(capsys, "verify", "iota", "--omega-max", "6")
    assert code == 0 and doc["passed"]
    code, doc, err = report(capsys, "verify", "facile", "--n-max", "9")
    assert code == 1 and not doc["passed"]
    assert "facile-bound" in doc["failures"]
    assert "failed checks" in err and "facile-bound" in err


def test_usage_errors_have_remedy(capsys):
    code, _, err = call(capsys, "pins", "--n", "5", "--a", "(1 2", "--exact")
    assert code == 2 and "solab: remedy:" in err
    code, _, err = call(capsys, "--level", "smoke", "eta", "--n", "7")
    assert code == 2 and "--level deep" in err
    code, _, err = call(capsys, "solubilizer", "--group", "foo7", "--g", "()")
    assert code == 2 and "recipe" in err
    code, _, err = call(capsys, "totient-count", "--n", "100", "--delta1", "1.5", "--delta2", "0.3")
    assert code == 2 and "remedy" in err
    with pytest.raises(SystemExit):
        main(["pins", "--bogus"])


def test_unknown_command_in_run():
    from solab.cli import UsageError

    with pytest.raises(UsageError):
        run(RunConfig("nope"))
    with pytest.raises(UsageError):
        run(RunConfig("fpagl", {"q_max": 9}, workers=0))


def test_config_round_trip(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    code, first, _ = report(capsys, "lambda-rate", "--n", "20", "--delta1", "0.6", "--delta2", "0.3",
                            "--samples", "1000", "--seed", "4", "--save-config", str(cfg))
    assert code == 0
    text = cfg.read_text()
    assert "command = lambda-rate" in text and "samples = 1000" in text
    code, second, _ = report(capsys, "--config", str(cfg))
    assert report_body(first) == report_body(second)
    # command-line flags override the file
    _, third, _ = report(capsys, "--config", str(cfg), "--seed", "5")
    assert third["provenance"]["config"]["seed"] == 5


def test_config_file_errors(capsys, tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("# no command\nseed = 3\n")
    code, _, err = call(capsys, "--config", str(cfg))
    assert code == 2 and "command" in err
    cfg.write_text("command = fpagl\nwhatever = 3\n")
    code, _, err = call(capsys, "--config", str(cfg))
    assert code == 2 and "whatever" in err
    code, _, err = call(capsys, "--config", str(tmp_path / "missing.cfg"))
    assert code == 2


def test_replay(capsys, tmp_path):
    code, out, _ = call(capsys, "wreath", "--s", "alt5", "--m", "2", "--pairs", "2", "--samples", "600",
                        "--seed", "3")
    assert code == 0
    saved = tmp_path / "report.json"
    saved.write_text(out)
    code, out2, _ = call(capsys, "replay", str(saved), "--check", "--workers", "2")
    assert code == 0
    assert report_body(json.loads(out2)) == report_body(json.loads(out))
    doc = json.loads(out)
    doc["result"] = "tampered"
    saved.write_text(json.dumps(doc))
    code, _, err = call(capsys, "replay", str(saved), "--check")
    assert code == 1 and "differs" in err
    saved.write_text("not json")
    code, _, err = call(capsys, "replay", str(saved))
    assert code == 2 and "remedy" in err


def test_nontransitivity_exact_and_sampled(capsys):
    code, doc, _ = report(capsys, "nontransitivity", "--n", "6", "--g", "(1 2)")
    assert code == 0
    code, doc2, _ = report(capsys, "nontransitivity", "--n", "12", "--g", "(1 2)", "--samples", "1000")
    assert code == 0 and doc2["passed"]


def test_bt_lists(capsys):
    code, doc, _ = report(capsys, "bt", "--t", "1,1.1,2,100", "--limit", "10000")
    assert code == 0 and doc["passed"]
