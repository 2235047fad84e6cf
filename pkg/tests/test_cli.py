import json

import pytest

from hopfib.cli import main
from hopfib.fileio import canonical_json, corpus_instance_to_dict, instance_from_dict


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


@pytest.fixture
def q8_file(tmp_path, capsys):
    path = tmp_path / "q8.json"
    code = main(
        ["corpus", "--family", "group", "--group", "q8",
         "--central-subgroup", "center", "--p", "7", "-o", str(path)]
    )
    capsys.readouterr()
    assert code == 0
    return path


class TestCorpusCommand:
    def test_group_file_written_and_parses(self, q8_file):
        data = json.loads(q8_file.read_text())
        assert data["schema"] == 1
        assert data["dim"] == 8
        inst = instance_from_dict(data)
        assert inst.a.dim == 2

    def test_qsl2_file(self, tmp_path, capsys):
        path = tmp_path / "qsl2.json"
        code = main(["corpus", "--family", "qsl2", "--ell", "3", "--p", "7", "-o", str(path)])
        capsys.readouterr()
        assert code == 0
        assert json.loads(path.read_text())["dim"] == 27

    def test_bad_parameters_exit_2(self, tmp_path, capsys):
        code = main(["corpus", "--family", "qsl2", "--ell", "4", "--p", "7",
                     "-o", str(tmp_path / "x.json")])
        err = capsys.readouterr().err
        assert code == 2
        assert "odd" in err

    def test_custom_cayley_table(self, tmp_path, capsys):
        cayley = {"cayley": [[(i + j) % 5 for j in range(5)] for i in range(5)]}
        gpath = tmp_path / "c5.json"
        gpath.write_text(json.dumps(cayley))
        out = tmp_path / "c5alg.json"
        code = main(["corpus", "--family", "group", "--cayley-file", str(gpath),
                     "--central-subgroup", "trivial", "--p", "11", "-o", str(out)])
        capsys.readouterr()
        assert code == 0
        assert json.loads(out.read_text())["dim"] == 5


class TestRoundTrip:
    def test_serialize_parse_serialize_is_identity(self, q8_file):
        raw = q8_file.read_text()
        inst = instance_from_dict(json.loads(raw))
        assert canonical_json(corpus_instance_to_dict(inst)) == raw


class TestAxiomsCommand:
    def test_valid_file_exit_0(self, q8_file, capsys):
        code, report = run(capsys, "axioms", "--input", str(q8_file))
        assert code == 0
        assert report["results"]["passed"] is True

    def test_corrupted_file_exit_1_with_witness(self, q8_file, tmp_path, capsys):
        data = json.loads(q8_file.read_text())
        data["mul"][5][3] = (data["mul"][5][3] + 1) % 7  # bump one coefficient
        bad = tmp_path / "corrupted.json"
        bad.write_text(canonical_json(data))
        code, report = run(capsys, "axioms", "--input", str(bad))
        assert code == 1
        failed = [c for c in report["results"]["checks"] if not c["passed"]]
        assert failed
        assert all(c["witness"] is not None for c in failed)

    def test_unreadable_input_exit_2(self, tmp_path, capsys):
        path = tmp_path / "nope.json"
        path.write_text("{not json")
        code = main(["axioms", "--input", str(path)])
        capsys.readouterr()
        assert code == 2


class TestCharactersCommand:
    def test_q8_characters(self, q8_file, capsys):
        code, report = run(capsys, "characters", "--input", str(q8_file))
        assert code == 0
        assert report["results"]["count"] == 4
        for values in report["results"]["characters"]:
            assert values[0] == 1  # identity group-like maps to 1


class TestSimplesCommand:
    def test_q8_simple_dims(self, q8_file, capsys):
        code, report = run(capsys, "simples", "--input", str(q8_file), "--seed", "1")
        assert code == 0
        dims = [r["dim"] for r in report["results"]["records"]]
        assert dims == [1, 1, 1, 1, 2]


class TestVerifyCommand:
    def test_q8_verify_exit_0_all_true(self, q8_file, capsys):
        code, report = run(capsys, "verify", "--input", str(q8_file),
                           "--mode", "global", "--seed", "7")
        assert code == 0
        conds = report["results"]["conditions"]
        assert all(conds[k] is True for k in ("cond_i", "cond_ii", "cond_iii", "cond_iv"))

    def test_s3c2_verify_exit_0_all_false_agree(self, tmp_path, capsys):
        path = tmp_path / "s3c2.json"
        main(["corpus", "--family", "group", "--group", "s3c2",
              "--central-subgroup", "center", "--p", "7", "-o", str(path)])
        capsys.readouterr()
        code, report = run(capsys, "verify", "--input", str(path),
                           "--mode", "global", "--seed", "7")
        assert code == 0  # conditions all false but they agree
        conds = report["results"]["conditions"]
        assert all(conds[k] is False for k in ("cond_i", "cond_ii", "cond_iii", "cond_iv"))

    def test_report_bytes_deterministic(self, q8_file, tmp_path, capsys):
        r1 = tmp_path / "r1.json"
        r2 = tmp_path / "r2.json"
        main(["verify", "--input", str(q8_file), "--seed", "3", "--report", str(r1)])
        capsys.readouterr()
        main(["verify", "--input", str(q8_file), "--seed", "3", "--report", str(r2)])
        capsys.readouterr()
        assert r1.read_bytes() == r2.read_bytes()

    def test_uniform_fibers_flag(self, q8_file, capsys):
        code, report = run(capsys, "verify", "--input", str(q8_file),
                           "--uniform-fibers", "--seed", "0")
        assert code == 0
        uf = report["results"]["uniform_fibers"]
        assert uf["consistent"] is True
        assert len(uf["entries"]) == 2

    def test_input_digest_present(self, q8_file, capsys):
        _, report = run(capsys, "characters", "--input", str(q8_file))
        assert report["input_digest"].startswith("sha256:")
        assert report["timing"] is None

    def test_qm2_experiment_via_cli(self, tmp_path, capsys):
        path = tmp_path / "qm2.json"
        code = main(["corpus", "--family", "qm2", "--t", "3", "--p", "7", "-o", str(path)])
        capsys.readouterr()
        assert code == 0
        code, report = run(capsys, "verify", "--input", str(path),
                           "--mode", "local", "--seed", "7")
        assert code == 0
        results = report["results"]
        assert results["mode"] == "experiment"
        assert results["hopf"] is False
        assert results["conditions"]["cond_iii"] is True
        assert results["witnesses"]["action"] == "two-sided"
        assert results["x_order"] == 9
