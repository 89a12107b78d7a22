import json
import subprocess
import sys

import pytest

from kreinext.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# classify
# ---------------------------------------------------------------------------


def test_classify_zero_provider_json(capsys):
    argv = [
        "classify", "--provider", "zero",
        "--q", "0.6", "--phi", "0.4", "--gamma", "1.2",
    ]
    code, out, err = run(capsys, *argv)
    assert code == 0 and err == ""
    payload = json.loads(out)
    assert payload["class"] == "SigmaJstProper"
    assert payload["csym"] == {
        "chi": -0.69314718056,
        "omega1": 1.6,
        "omega2": 0.8,
    }
    assert payload["gauge_phase"] == 0.0
    # byte-identical on a second run
    code2, out2, _ = run(capsys, *argv)
    assert code2 == 0 and out2 == out


def test_classify_upsilon_u_collapsed_payload(capsys):
    code, out, _ = run(
        capsys,
        "classify", "--provider", "degenerate_sl",
        "--q", "0", "--r", "1", "--phi", "1.5707963", "--xi", "0",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["class"] == "UpsilonU"
    assert set(payload["csym"]) == {"chi", "omega"}


def test_classify_rejects_bad_parameters(capsys):
    code, out, err = run(
        capsys, "classify", "--provider", "zero", "--q", "1.2", "--r", "0"
    )
    assert code == 2 and out == "" and "error:" in err


def test_unknown_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_config_file_fills_gaps_but_flags_win(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text(
        "# zero-data run\n"
        "provider = zero\n"
        "q = 0.6\n"
        "phi = 0.4\n"
        "gamma = 1.2\n"
    )
    code, out, _ = run(capsys, "classify", "--config", str(cfg))
    assert code == 0
    assert json.loads(out)["csym"]["omega1"] == 1.6
    # an explicit flag overrides the file
    code, out, _ = run(capsys, "classify", "--config", str(cfg), "--gamma", "0.2")
    assert code == 0
    assert json.loads(out)["csym"]["omega1"] == pytest.approx(0.6)


def test_config_file_rejects_unknown_keys(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("provider = zero\nwavelength = 7\n")
    code, _, err = run(capsys, "classify", "--config", str(cfg))
    assert code == 2 and "wavelength" in err


def test_tolerance_env_var_must_parse(monkeypatch, capsys):
    monkeypatch.setenv("KREIN_EXT_TOL", "not_a_float")
    code, _, err = run(capsys, "classify", "--provider", "zero", "--q", "0.5")
    assert code == 2 and "error:" in err


def test_output_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, out, _ = run(
        capsys,
        "classify", "--provider", "zero", "--q", "0.6", "--phi", "0.4",
        "--gamma", "1.2", "--output", str(target),
    )
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["class"] == "SigmaJstProper"
    assert target.read_text().endswith("\n")


# ---------------------------------------------------------------------------
# spectrum
# ---------------------------------------------------------------------------

SMALL_BOX = ["--re-min", "0.5", "--re-max", "8", "--im-min", "0.5", "--im-max", "8"]
WIDE_BOX = ["--re-min", "15", "--re-max", "25", "--im-min", "0.5", "--im-max", "5"]
A8_FLAGS = ["--q", "0.7071067811865476", "--phi", "1", "--gamma", "0", "--xi", "0"]


def test_spectrum_empty_box(capsys):
    code, out, _ = run(
        capsys, "spectrum", "--provider", "degenerate_sl", *A8_FLAGS, *SMALL_BOX
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "DiscreteSet"
    assert payload["winding_total"] == 0
    assert payload["eigenvalues"] == []


def test_spectrum_finds_eigenvalue_and_csv_matches(capsys):
    code, out, _ = run(
        capsys, "spectrum", "--provider", "degenerate_sl", *A8_FLAGS, *WIDE_BOX
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["winding_total"] == 1
    (eig,) = payload["eigenvalues"]
    assert eig["re"] == pytest.approx(19.202085106920425, abs=1e-8)
    assert eig["im"] == pytest.approx(1.7081089258494573, abs=1e-8)

    code, out, _ = run(
        capsys,
        "spectrum", "--provider", "degenerate_sl", *A8_FLAGS, *WIDE_BOX, "--csv",
    )
    assert code == 0
    header, row = out.strip().splitlines()
    assert header == "re,im,residual"
    re_str, im_str, _res = row.split(",")
    assert float(re_str) == pytest.approx(eig["re"])
    assert float(im_str) == pytest.approx(eig["im"])


def test_spectrum_zero_determinant_exit_code(capsys):
    code, out, _ = run(
        capsys,
        "spectrum", "--provider", "degenerate_sl",
        "--r", "0", "--phi", "0", *WIDE_BOX,
    )
    assert code == 3
    assert json.loads(out)["verdict"] == "IdenticallyZeroDeterminant"


def test_spectrum_requires_full_box(capsys):
    code, _, err = run(
        capsys,
        "spectrum", "--provider", "degenerate_sl", "--re-min", "0.5",
    )
    assert code == 2 and "box" in err


# ---------------------------------------------------------------------------
# bundled suites
# ---------------------------------------------------------------------------


def test_examples_sec51_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "kreinext.cli", "examples", "sec51"],
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert proc.returncode == 0, proc.stdout + proc.stderr
    lines = proc.stdout.strip().splitlines()
    assert lines and all(line.endswith(": PASS") for line in lines)


def test_examples_sec52_in_process(capsys):
    code, out, _ = run(capsys, "examples", "sec52")
    assert code == 0
    assert all(line.endswith(": PASS") for line in out.strip().splitlines())


def test_examples_sec53_in_process(capsys):
    code, out, _ = run(capsys, "examples", "sec53")
    assert code == 0
    assert all(line.endswith(": PASS") for line in out.strip().splitlines())
