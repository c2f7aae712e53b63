import json

import pytest

from dualgain import check_interlacing, spectrum
from dualgain.cli import run
from dualgain.graph_io import save
from dualgain.spectra import radius_report


@pytest.fixture
def triangle_file(tmp_path, dual_spectrum_triangle):
    path = tmp_path / "triangle.ggf"
    save(dual_spectrum_triangle, path)
    return str(path)


@pytest.fixture
def balanced_file(tmp_path, balanced_triangle):
    path = tmp_path / "balanced.ggf"
    save(balanced_triangle, path)
    return str(path)


class TestSpectrumCommand:
    def test_table_output(self, triangle_file, capsys):
        assert run(["spectrum", triangle_file]) == 0
        out = capsys.readouterr().out
        assert "1.93185165258 + 0.172546030068·eps" in out
        assert "-1.41421356237 + 0.471404520791·eps" in out

    def test_json_round_trip(self, triangle_file, dual_spectrum_triangle, capsys):
        assert run(["spectrum", triangle_file, "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload == spectrum(dual_spectrum_triangle).to_dict()

    def test_byte_identical_reruns(self, triangle_file, capsys):
        run(["spectrum", triangle_file, "--matrix", "laplacian"])
        first = capsys.readouterr().out
        run(["spectrum", triangle_file, "--matrix", "laplacian"])
        assert capsys.readouterr().out == first


class TestBalanceCommand:
    def test_balanced(self, balanced_file, capsys):
        assert run(["balance", balanced_file]) == 0
        out = capsys.readouterr().out
        assert out.startswith("balanced")
        assert "theta[2]" in out

    def test_unbalanced_witness(self, triangle_file, capsys):
        assert run(["balance", triangle_file]) == 0
        out = capsys.readouterr().out
        assert out.startswith("unbalanced")
        assert "witness cycle" in out


class TestReportCommands:
    def test_radius_json(self, triangle_file, dual_spectrum_triangle, capsys):
        assert run(["radius", triangle_file, "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload == radius_report(dual_spectrum_triangle).to_dict()
        assert payload["bound_holds"] is True and payload["equality"] is False

    def test_interlace_default_chain(self, triangle_file, capsys):
        assert run(["interlace", triangle_file]) == 0
        assert "holds" in capsys.readouterr().out

    def test_interlace_explicit_subset(self, triangle_file, capsys):
        assert run(["interlace", triangle_file, "--keep", "0,2",
                    "--matrix", "laplacian"]) == 0
        assert "holds" in capsys.readouterr().out

    def test_interlace_json_round_trip(self, triangle_file, dual_spectrum_triangle,
                                       capsys):
        assert run(["interlace", triangle_file, "--keep", "0,1",
                    "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        expected = check_interlacing(dual_spectrum_triangle, [0, 1]).to_dict()
        assert payload == expected

    def test_balance_json(self, balanced_file, capsys):
        assert run(["balance", balanced_file, "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["balanced"] is True and len(payload["theta"]) == 3

    def test_charpoly(self, balanced_file, capsys):
        assert run(["charpoly", balanced_file]) == 0
        out = capsys.readouterr().out
        assert "c_2 = -3" in out
        assert "c_3 = -2" in out

    def test_mdet(self, balanced_file, capsys):
        assert run(["mdet", balanced_file]) == 0
        out = capsys.readouterr().out
        assert out.count("(2.0") == 2


class TestClosedFormCommands:
    def test_cycle_command(self, capsys):
        code = run(["cycle", "--n", "3", "--ring", "complex",
                    "--gain", "(1.0+0.0i) + (0.0+0.0i)*eps"])
        assert code == 0
        out = capsys.readouterr().out
        assert "2 + 0·eps" in out and "-1 + 0·eps" in out

    def test_path_command(self, capsys):
        assert run(["path", "--n", "3", "--matrix", "laplacian"]) == 0
        out = capsys.readouterr().out
        assert "3 + 0·eps" in out and "1 + 0·eps" in out and "0 + 0·eps" in out


class TestGenerateConvert:
    def test_generate_then_read(self, tmp_path, capsys):
        out_file = tmp_path / "c5.ggf"
        assert run(["generate", "cycle", "--n", "5", "--ring", "real",
                    "--gain", "(-1.0)", "--out", str(out_file)]) == 0
        assert run(["spectrum", str(out_file)]) == 0
        assert "·eps" in capsys.readouterr().out

    def test_generate_random_deterministic(self, capsys):
        assert run(["generate", "random", "--n", "5", "--seed", "9"]) == 0
        first = capsys.readouterr().out
        assert run(["generate", "random", "--n", "5", "--seed", "9"]) == 0
        assert capsys.readouterr().out == first

    def test_convert_widens_ring(self, tmp_path, balanced_file, capsys):
        out_file = tmp_path / "widened.ggf"
        assert run(["convert", balanced_file, "--ring", "quaternion",
                    "--out", str(out_file)]) == 0
        text = out_file.read_text()
        assert '"ring": "quaternion"' in text
        assert run(["convert", str(out_file), "--ring", "complex"]) == 2

    def test_convert_is_canonical_identity(self, triangle_file, capsys):
        assert run(["convert", triangle_file]) == 0
        out = capsys.readouterr().out
        assert out == open(triangle_file).read()


class TestCheckCommand:
    @pytest.mark.parametrize("suite", ["interlacing", "switching-invariance",
                                       "radius-bounds", "mdet-product",
                                       "coefficient", "dq2dc", "closed-forms"])
    def test_suites_pass(self, suite, capsys):
        assert run(["check", suite, "--trials", "8", "--seed", "1"]) == 0
        assert "8/8 trials passed" in capsys.readouterr().out

    def test_json_payload(self, capsys):
        assert run(["check", "dq2dc", "--trials", "5", "--seed", "2",
                    "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload == {"suite": "dq2dc", "trials": 5, "passes": 5, "failures": 0}

    def test_same_seed_byte_identical(self, capsys):
        run(["check", "mdet-product", "--trials", "4", "--seed", "3"])
        first = capsys.readouterr().out
        run(["check", "mdet-product", "--trials", "4", "--seed", "3"])
        assert capsys.readouterr().out == first

    def test_violation_exits_one_with_counterexample(self, monkeypatch, capsys,
                                                     balanced_triangle):
        import dualgain.cli as cli_mod
        from dualgain import parse

        def rigged(trials, seed):
            return 2, balanced_triangle, "synthetic violation"

        monkeypatch.setitem(cli_mod._SUITES, "interlacing", rigged)
        assert run(["check", "interlacing", "--trials", "10", "--seed", "0"]) == 1
        out = capsys.readouterr().out
        assert "FAILED at trial 2" in out and "synthetic violation" in out
        # the counterexample is a replayable document
        doc = out.split("counterexample:\n", 1)[1]
        assert parse(doc).graph == balanced_triangle.graph


class TestErrorHandling:
    def test_missing_file(self, capsys):
        assert run(["spectrum", "/nonexistent/file.ggf"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_malformed_file(self, tmp_path, capsys):
        bad = tmp_path / "bad.ggf"
        bad.write_text("{not json")
        assert run(["spectrum", str(bad)]) == 2
        assert "error:" in capsys.readouterr().err

    def test_bad_gain_text(self, capsys):
        assert run(["cycle", "--n", "3", "--gain", "garbage"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_output_file(self, tmp_path, triangle_file):
        out_file = tmp_path / "spec.json"
        assert run(["spectrum", triangle_file, "--format", "json",
                    "--out", str(out_file)]) == 0
        json.loads(out_file.read_text())
