import subprocess
import sys

import pytest

from qhomog.scenarios.cli import main


def test_figure3(tmp_path, capsys):
    assert main(["figure3", "--out", str(tmp_path)]) == 0
    assert (tmp_path / "figure3.csv").exists()


def test_figure4_json_and_plot(tmp_path):
    pytest.importorskip("matplotlib")
    args = ["figure4", "--out", str(tmp_path), "--format", "json", "--plot", "--eta", "0.3", "--N", "2", "--n-max", "3"]
    assert main(args) == 0
    assert (tmp_path / "figure4.json").exists() and (tmp_path / "figure4.svg").exists()


def test_sweep_and_config_error(tmp_path):
    good = tmp_path / "good.cfg"
    good.write_text("eta = pi/8\nN = 2\nn_max = 2\n")
    assert main(["sweep", str(good), "--out", str(tmp_path)]) == 0
    bad = tmp_path / "bad.cfg"
    bad.write_text("eta = 0.1\nN = x\n")
    assert main(["sweep", str(bad), "--out", str(tmp_path)]) == 2


def test_missing_config_is_io_error(tmp_path):
    assert main(["sweep", str(tmp_path / "nope.cfg")]) == 4


def test_capacity_error(tmp_path):
    assert main(["figure4", "--out", str(tmp_path), "--N", "6", "--n-max", "1", "--cap", "5"]) == 3


def test_unwritable_output(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    assert main(["figure3", "--out", str(blocker / "sub")]) == 4


def test_selftest(capsys):
    assert main(["selftest"]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS") == 4


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "qhomog", "figure3", "--out", str(tmp_path)],
                          capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
