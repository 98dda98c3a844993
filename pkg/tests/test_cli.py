#!/usr/bin/env python3

# Import special modules ...
try:
    import pytest
except:
    raise Exception("\"pytest\" is not installed; run \"pip install --user pytest\"") from None

# Import my modules ...
from recsim.sim import cli

# ******************************************************************************

def test_run(tmp_path, microScenario):
    fname = microScenario()
    assert cli(["run", "--config", fname, "--out", str(tmp_path / "out"), "--seed", "3", "--debug"]) == 0
    for name in ("trades.csv", "metrics.csv", "consensus.csv", "validations.csv", "ledger.txt", "public_view.csv"):
        assert (tmp_path / "out" / name).exists()

def test_compare_consensus(tmp_path):
    assert cli(["compare-consensus", "--ledger-sizes", "100,1000", "--green-ratios", "0.3", "--out", str(tmp_path)]) == 0
    assert len((tmp_path / "compare.csv").read_text(encoding = "utf-8").splitlines()) == 9

def test_plot_data(tmp_path):
    assert cli(["plot-data", "energy", "--out", str(tmp_path)]) == 0
    assert (tmp_path / "energy.csv").exists()

def test_help_is_not_an_error(capsys):
    assert cli(["--help"]) == 0
    assert "compare-consensus" in capsys.readouterr().out

def test_unknown_flag(capsys):
    assert cli(["run", "--config", "x.cfg", "--frobnicate"]) != 0
    assert "usage" in capsys.readouterr().err

def test_missing_config(tmp_path, capsys):
    assert cli(["run", "--config", str(tmp_path / "missing.cfg"), "--out", str(tmp_path)]) == 1
    assert "ERROR" in capsys.readouterr().err

def test_bad_scenario(tmp_path, microScenario, capsys):
    fname = microScenario(n_consumers = 4)
    assert cli(["run", "--config", fname, "--out", str(tmp_path / "out")]) == 1
    assert "consumers" in capsys.readouterr().err
