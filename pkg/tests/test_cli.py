import json

import numpy as np
import pytest

from ptliouville.cli import dumps_canonical, main

from _oracles import assert_spectra_match, bloch_liouvillian_eigs

EXAMPLE1_N2 = {
    "n": 2,
    "hamiltonian": {
        "couplings": [{"i": 0, "j": 1, "jx": 1.0, "jy": 1.0, "jz": 0.5}],
        "fields_x": [0.3, 0.7],
    },
    "noise": {"type": "dephasing", "gammas": [0.2, 0.4]},
}

SINGLE_QUBIT = {
    "n": 1,
    "hamiltonian": {"fields_x": [1.0]},
    "noise": {"type": "dephasing", "gammas": [1.0]},
}


def write_model(tmp_path, doc, name="model.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCheck:
    def test_certified_model(self, tmp_path, capsys):
        path = write_model(tmp_path, EXAMPLE1_N2)
        code, out, err = run_cli(capsys, "check", "--model", path)
        assert code == 0
        assert err == ""
        doc = json.loads(out)
        assert doc["overall"] is True
        assert doc["pt_residual"] < 1e-10
        z = np.array(doc["Z"])
        assert np.max(np.abs(z - np.eye(2))) < 1e-10

    def test_field_injection_fails_condition_i(self, tmp_path, capsys):
        doc = dict(EXAMPLE1_N2)
        doc["custom"] = {"h_extra": [{"word": "ZI", "coeff": 0.5}]}
        path = write_model(tmp_path, doc)
        code, out, _ = run_cli(capsys, "check", "--model", path)
        assert code == 1
        parsed = json.loads(out)
        assert parsed["cond_i"] is False
        assert parsed["pt_residual"] > 1e-3

    def test_missing_file(self, tmp_path, capsys):
        code, out, err = run_cli(capsys, "check", "--model", str(tmp_path / "nope.json"))
        assert code == 2
        assert out == ""
        assert "nope.json" in err

    def test_invalid_json(self, tmp_path, capsys):
        path = tmp_path / "broken.json"
        path.write_text('{"n": }')
        code, out, err = run_cli(capsys, "check", "--model", str(path))
        assert code == 2
        assert "line 1" in err


class TestSpectrum:
    def test_commutator_rows(self, tmp_path, capsys):
        doc = {
            "n": 1,
            "hamiltonian": {"fields_x": [0.5]},
            "noise": {"type": "dephasing", "gammas": [0.0]},
        }
        path = write_model(tmp_path, doc)
        code, out, _ = run_cli(capsys, "spectrum", "--model", path)
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "index,re_L,im_L,re_Lprime,im_Lprime"
        rows = [line.split(",") for line in lines[1:]]
        eigs = [complex(float(r[1]), float(r[2])) for r in rows]
        assert_spectra_match(eigs, [0, 0, 1j, -1j], 1e-12)
        for r in rows:  # no noise: shifted spectrum equals the plain one
            assert float(r[1]) == pytest.approx(float(r[3]), abs=1e-12)

    def test_bloch_rows(self, tmp_path, capsys):
        doc = {
            "n": 1,
            "hamiltonian": {"fields_x": [1.0]},
            "noise": {"type": "dephasing", "gammas": [0.5]},
        }
        path = write_model(tmp_path, doc)
        code, out, _ = run_cli(capsys, "spectrum", "--model", path)
        assert code == 0
        rows = [line.split(",") for line in out.strip().splitlines()[1:]]
        eigs = [complex(float(r[1]), float(r[2])) for r in rows]
        assert_spectra_match(eigs, bloch_liouvillian_eigs(1.0, 0.5), 1e-10)

    def test_size_guard(self, tmp_path, capsys):
        doc = {"n": 7, "noise": {"type": "dephasing", "gammas": [0.1] * 7}}
        path = write_model(tmp_path, doc)
        code, out, err = run_cli(capsys, "spectrum", "--model", path)
        assert code == 2
        assert "size guard" in err

    def test_json_format(self, tmp_path, capsys):
        path = write_model(tmp_path, SINGLE_QUBIT)
        code, out, _ = run_cli(capsys, "spectrum", "--model", path, "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert len(doc["eigenvalues"]) == 4
        assert doc["shift"] == pytest.approx(2.0)


class TestScan:
    def test_single_qubit_transition(self, tmp_path, capsys):
        path = write_model(tmp_path, SINGLE_QUBIT)
        code, out, _ = run_cli(
            capsys, "scan", "--model", path,
            "--lambda-min", "0.1", "--lambda-max", "2.0", "--resolution", "1e-6",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "lambda,n_imag_axis,classification"
        tail = json.loads(lines[-1])
        assert tail["gamma_pt"] == pytest.approx(1.0, abs=1e-6)
        lo, hi = tail["bracket"]
        assert hi - lo < 1e-6

    def test_no_transition_is_null(self, tmp_path, capsys):
        path = write_model(tmp_path, SINGLE_QUBIT)
        code, out, _ = run_cli(
            capsys, "scan", "--model", path,
            "--lambda-min", "0.01", "--lambda-max", "0.05",
        )
        assert code == 0
        tail = json.loads(out.strip().splitlines()[-1])
        assert tail["gamma_pt"] is None

    def test_uncertified_model_exits_one(self, tmp_path, capsys):
        doc = dict(EXAMPLE1_N2)
        doc["custom"] = {"h_extra": [{"word": "ZI", "coeff": 0.5}]}
        path = write_model(tmp_path, doc)
        code, out, err = run_cli(capsys, "scan", "--model", path)
        assert code == 1
        assert out == ""
        assert "certification" in err

    def test_json_format(self, tmp_path, capsys):
        path = write_model(tmp_path, SINGLE_QUBIT)
        code, out, _ = run_cli(
            capsys, "scan", "--model", path, "--format", "json",
            "--lambda-min", "0.01", "--lambda-max", "0.05",
        )
        doc = json.loads(out)
        assert doc["gamma_pt"] is None
        assert all(p["classification"] == "UNBROKEN" for p in doc["probes"])


class TestVMatrix:
    def test_single_qubit_values(self, tmp_path, capsys):
        doc = {
            "n": 1,
            "hamiltonian": {"fields_x": [1.0]},
            "noise": {"type": "dephasing", "gammas": [0.5]},
        }
        path = write_model(tmp_path, doc)
        code, out, _ = run_cli(capsys, "vmatrix", "--model", path)
        assert code == 0
        parsed = json.loads(out)
        assert np.allclose(parsed["V"], [[0, 0.25], [0.25, 0]], atol=1e-12)
        assert parsed["asymmetry"] == pytest.approx(0.0, abs=1e-12)
        assert parsed["parities"] == [1, 1]

    def test_random_family2(self, tmp_path, capsys):
        doc = {
            "n": 2,
            "hamiltonian": {"couplings": [{"i": 0, "j": 1, "jx": 0.9, "jy": 0.4, "jz": -0.3}]},
            "noise": {"type": "injection", "a": [0.7, 0.2], "b": [0.1, 0.8]},
        }
        path = write_model(tmp_path, doc)
        code, out, _ = run_cli(capsys, "vmatrix", "--model", path)
        assert code == 0
        parsed = json.loads(out)
        assert parsed["asymmetry"] < 1e-12
        assert set(parsed["parities"]) <= {-1, 1}

    def test_violating_model_reports_asymmetry(self, tmp_path, capsys):
        doc = {
            "n": 1,
            "custom": {
                "h": [{"word": "X", "coeff": 1.0}, {"word": "Z", "coeff": 1.0}],
                "lindblads": [[{"word": "X", "coeff": 0.5}, {"word": "Y", "coeff": [0, 0.5]}]],
                "u": [{"word": "Y", "coeff": 1.0}],
                "w": [{"word": "X", "coeff": 1.0}],
            },
        }
        path = write_model(tmp_path, doc)
        code, out, _ = run_cli(capsys, "vmatrix", "--model", path)
        assert code == 0  # informational even when certification fails
        parsed = json.loads(out)
        assert parsed["asymmetry"] > 1e-3
        assert parsed["parities"] is None  # [H, W] != 0, no joint eigenbasis


class TestDeterminism:
    def test_byte_identical_reruns(self, tmp_path, capsys):
        path = write_model(tmp_path, EXAMPLE1_N2)
        outputs = set()
        for _ in range(2):
            _, out, _ = run_cli(capsys, "check", "--model", path)
            outputs.add(out)
        assert len(outputs) == 1

    def test_out_file_matches_stdout(self, tmp_path, capsys):
        path = write_model(tmp_path, SINGLE_QUBIT)
        _, out, _ = run_cli(capsys, "spectrum", "--model", path)
        target = tmp_path / "spec.csv"
        code, stdout, _ = run_cli(capsys, "spectrum", "--model", path, "--out", str(target))
        assert code == 0
        assert stdout == ""
        assert target.read_text() == out

    def test_float_serialization_roundtrips(self):
        values = [0.1, 1 / 3, 2e-17, 123456.789, -0.25]
        text = dumps_canonical(values)
        assert json.loads(text) == values

    def test_csv_unsupported_for_check(self, tmp_path, capsys):
        path = write_model(tmp_path, EXAMPLE1_N2)
        code, _, err = run_cli(capsys, "check", "--model", path, "--format", "csv")
        assert code == 2
        assert "json" in err
