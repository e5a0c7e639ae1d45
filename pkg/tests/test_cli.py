import json

import pytest

from kunzcone.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


class TestInfo:
    def test_golden(self, capsys):
        data = run_json(capsys, "info", "--gens", "4,13,18")
        assert data == {
            "generators": [4, 13, 18],
            "multiplicity": 4,
            "embedding_dimension": 3,
            "frobenius": 27,
        }

    def test_minimalizes(self, capsys):
        data = run_json(capsys, "info", "--gens", "4,13,18,31")
        assert data["generators"] == [4, 13, 18]


class TestApery:
    def test_golden(self, capsys):
        data = run_json(capsys, "apery", "--gens", "4,13,18")
        assert data["modulus"] == 4
        assert data["apery"] == [0, 13, 18, 31]
        assert data["kunz"] == [0, 3, 4, 7]

    def test_explicit_modulus(self, capsys):
        data = run_json(capsys, "apery", "--gens", "4,13,18", "--m", "13")
        assert data["modulus"] == 13
        assert len(data["apery"]) == 13


class TestPoset:
    def test_json(self, capsys):
        data = run_json(capsys, "poset", "--gens", "4,13,18")
        assert data["relations"] == [[0, 1], [0, 2], [0, 3], [1, 3], [2, 3]]
        assert data["labels"]["3"] == 31

    def test_dot(self, capsys):
        code, out, _ = run_cli(capsys, "poset", "--gens", "4,13,18", "--dot")
        assert code == 0
        assert out.startswith("digraph kunz_poset {")
        assert out.count("->") == 4

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "poset.dot"
        code, out, _ = run_cli(
            capsys, "poset", "--gens", "4,13,18", "--dot", "--out", str(target)
        )
        assert code == 0
        assert out == ""
        assert target.read_text().startswith("digraph kunz_poset {")


class TestFace:
    def test_golden(self, capsys):
        data = run_json(capsys, "face", "--gens", "4,13,18")
        assert data["tight"] == [[1, 2]]
        assert data["dimension"] == 2
        assert data["subgroup"] == [0]
        assert data["poset"]["relations"] == [[0, 1], [0, 2], [0, 3], [1, 3], [2, 3]]


class TestEga:
    def test_params_golden(self, capsys):
        data = run_json(capsys, "ega", "--params", "13,1,4,1")
        assert data["generators"] == [13, 14, 15, 16, 17]
        assert data["frobenius"] == 38
        assert data["face_dimension"] == 2
        assert data["rays"]["r"] == list(range(13))
        assert data["rays"]["t"] == [0, 10, 7, 4, 1, 11, 8, 5, 2, 12, 9, 6, 3]

    def test_no_rays_outside_regime(self, capsys):
        data = run_json(capsys, "ega", "--params", "7,2,1,3")
        assert data["face_dimension"] == 1
        assert "rays" not in data

    def test_detect(self, capsys):
        data = run_json(capsys, "ega", "--detect", "--gens", "11,12,14,16,18,20")
        assert data["detected"] == {"a": 11, "h": 2, "k": 5, "d": -2}

    def test_detect_none(self, capsys):
        data = run_json(capsys, "ega", "--detect", "--gens", "5,6,9")
        assert data["detected"] is None


class TestGlue:
    def test_golden(self, capsys):
        data = run_json(capsys, "glue", "--gens", "4,13,18", "--alpha", "31", "--beta", "3")
        assert data["glued"] == [12, 31, 39, 54]
        assert data["augmented"] is True
        assert data["face_dims"] == [2, 2]
        assert data["base_poset"]["relations"] == [[0, 1], [0, 2], [0, 3], [1, 3], [2, 3]]
        assert len(data["glued_poset"]["relations"]) > 0

    def test_plain(self, capsys):
        data = run_json(capsys, "glue", "--gens", "4,13,18", "--alpha", "43", "--beta", "3")
        assert data["glued"] == [12, 39, 43, 54]
        assert data["augmented"] is False


class TestEmbed:
    def test_golden(self, capsys):
        data = run_json(capsys, "embed", "--n", "12", "--hgen", "3", "--rho", "7")
        assert data["beta"] == 3
        assert data["subgroup"] == [0, 3, 6, 9]
        assert data["decomposition"]["7"] == [0, 1]
        assert data["beta_ray"] == [g % 3 for g in range(12)]


class TestVerify:
    def test_roundtrip_suite(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--suite", "roundtrip", "--seed", "7", "--max-m", "8"
        )
        assert code == 0
        data = json.loads(out)
        assert data["suite"] == "roundtrip"
        assert data["seed"] == 7
        assert data["checks"] > 0
        assert data["failures"] == 0

    def test_deterministic(self, capsys):
        _, out1, _ = run_cli(capsys, "verify", "--suite", "ega", "--seed", "3", "--max-m", "8")
        _, out2, _ = run_cli(capsys, "verify", "--suite", "ega", "--seed", "3", "--max-m", "8")
        assert out1 == out2


class TestExitCodes:
    def test_domain_error_is_one(self, capsys):
        code, out, err = run_cli(capsys, "info", "--gens", "4,6")
        assert code == 1
        assert out == ""
        assert err.startswith("NotCofinite:")

    def test_invalid_params_is_one(self, capsys):
        code, _, err = run_cli(capsys, "ega", "--params", "11,1,5,-2")
        assert code == 1
        assert err.startswith("InvalidParams:")

    def test_post_parse_usage_error_is_two(self, capsys):
        code, _, err = run_cli(capsys, "ega")
        assert code == 2
        assert err.startswith("usage error:")

    def test_detect_without_gens_is_two(self, capsys):
        code, _, err = run_cli(capsys, "ega", "--detect")
        assert code == 2
        assert err.startswith("usage error:")

    def test_argparse_errors_are_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["bogus"])
        assert exc.value.code == 2
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--suite", "bogus"])
        assert exc.value.code == 2
        with pytest.raises(SystemExit) as exc:
            main(["info"])
        assert exc.value.code == 2

    def test_bad_gens_text_is_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["info", "--gens", "4,x"])
        assert exc.value.code == 2


class TestDeterminism:
    def test_byte_identical_json(self, capsys):
        _, out1, _ = run_cli(capsys, "face", "--gens", "6,8,10,13,15,17")
        _, out2, _ = run_cli(capsys, "face", "--gens", "6,8,10,13,15,17")
        assert out1 == out2
        assert out1.endswith("\n")
