"""CLI behaviour: outputs, schemas, determinism, error records."""

import json
import pathlib

import pytest
from jsonschema import Draft202012Validator
from referencing import Registry, Resource

import jumploci
from jumploci.cli import main, parse_character

SCHEMA_DIR = pathlib.Path(jumploci.__file__).parent / "schemas"


def _registry():
    resources = []
    for f in SCHEMA_DIR.glob("*.json"):
        obj = json.loads(f.read_text())
        resources.append((obj["$id"], Resource.from_contents(obj)))
    return Registry().with_resources(resources)


def validate(name, instance):
    schema = json.loads((SCHEMA_DIR / f"{name}.json").read_text())
    Draft202012Validator(schema, registry=_registry()).validate(instance)


@pytest.fixture
def trefoil_file(tmp_path):
    f = tmp_path / "trefoil.grp"
    f.write_text("<x, y | x y x y^-1 x^-1 y^-1>\n")
    return str(f)


@pytest.fixture
def z2_json_file(tmp_path):
    f = tmp_path / "z2.json"
    f.write_text(json.dumps({"generators": ["x", "y"], "relators": ["[x,y]"]}))
    return str(f)


@pytest.fixture
def t3_form_file(tmp_path):
    f = tmp_path / "t3.form"
    f.write_text(json.dumps({"n": 3, "terms": [{"i": 1, "j": 2, "k": 3, "c": 1}]}))
    return str(f)


@pytest.fixture
def model5_form_file(tmp_path):
    f = tmp_path / "model5.form"
    f.write_text(json.dumps({
        "n": 5,
        "terms": [
            {"i": 1, "j": 2, "k": 5, "c": 1},
            {"i": 3, "j": 4, "k": 5, "c": 1},
        ],
    }))
    return str(f)


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAlex:
    def test_trefoil_json(self, capsys, trefoil_file):
        code, out, err = run_cli(capsys, ["--seed", "1", "alex", trefoil_file])
        assert code == 0 and not err
        report = json.loads(out)
        validate("alex", report)
        assert report["delta"] == "t^2 - t + 1"
        assert report["b1"] == 1
        assert report["almost_principal"]["consistent"] is True

    def test_json_presentation_input(self, capsys, z2_json_file):
        code, out, _ = run_cli(capsys, ["alex", z2_json_file, "--ideal-d", "1", "--ideal-d", "2"])
        assert code == 0
        report = json.loads(out)
        validate("alex", report)
        assert report["delta"] == "1"
        assert [i["d"] for i in report["ideals"]] == [1, 2]

    def test_text_format(self, capsys, trefoil_file):
        code, out, _ = run_cli(capsys, ["--format", "text", "alex", trefoil_file])
        assert code == 0
        assert "delta = t^2 - t + 1" in out


class TestCharvar:
    def test_zeta6_membership(self, capsys, trefoil_file):
        code, out, _ = run_cli(capsys, ["charvar", trefoil_file, "6:1", "--d", "1"])
        assert code == 0
        report = json.loads(out)
        validate("charvar", report)
        assert report["rank_based"] is True
        assert report["ideal_based"] is True
        assert report["agree"] is True

    def test_nonmember(self, capsys, trefoil_file):
        code, out, _ = run_cli(capsys, ["charvar", trefoil_file, "2:1"])
        report = json.loads(out)
        assert report["rank_based"] is False and report["agree"] is True

    def test_identity_character_is_error(self, capsys, trefoil_file):
        code, out, err = run_cli(capsys, ["charvar", trefoil_file, "2:0"])
        assert code == 1
        record = json.loads(err)
        validate("error", record)

    def test_parse_character(self):
        chi = parse_character("6:1,2")
        assert chi.order == 6 and chi.exponents == (1, 2)
        with pytest.raises(ValueError):
            parse_character("6")


class TestClassify:
    def test_volume_form(self, capsys, t3_form_file):
        code, out, _ = run_cli(capsys, ["classify", t3_form_file])
        assert code == 0
        report = json.loads(out)
        validate("classify", report)
        assert report["class"] == "ZxSurface"
        assert report["g"] == 1
        assert report["corank"] == 1

    def test_model_form(self, capsys, model5_form_file):
        code, out, _ = run_cli(capsys, ["classify", model5_form_file])
        report = json.loads(out)
        validate("classify", report)
        assert report["class"] == "ZxSurface" and report["g"] == 2
        assert report["genericity_mode"]["mode"] == "symbolic"

    def test_zero_form(self, capsys, tmp_path):
        f = tmp_path / "zero.form"
        f.write_text(json.dumps({"n": 4, "terms": []}))
        code, out, _ = run_cli(capsys, ["classify", str(f)])
        report = json.loads(out)
        validate("classify", report)
        assert report["class"] == "Free" and report["rank"] == 4

    def test_rational_coefficients(self, capsys, tmp_path):
        f = tmp_path / "frac.form"
        f.write_text(json.dumps({"n": 3, "terms": [{"i": 1, "j": 2, "k": 3, "c": "-2/3"}]}))
        code, out, _ = run_cli(capsys, ["classify", str(f)])
        assert code == 0
        assert json.loads(out)["class"] == "ZxSurface"


class TestBrieskorn:
    def test_336(self, capsys):
        code, out, _ = run_cli(capsys, ["brieskorn", "3,3,6"])
        assert code == 0
        report = json.loads(out)
        validate("brieskorn", report)
        assert report["components"] == 3
        assert report["dim"] == 2
        assert report["e"] == "-3/2"
        assert report["torsion"] == {"T": 12, "ord_h": 3, "alpha": 4}
        assert report["includes_identity"] is False

    def test_sweep_json(self, capsys):
        code, out, _ = run_cli(capsys, ["brieskorn", "sweep", "--max", "3", "--n", "3"])
        report = json.loads(out)
        validate("brieskorn-sweep", report)
        assert len(report["rows"]) == 8

    def test_sweep_csv(self, capsys):
        code, out, _ = run_cli(
            capsys, ["--format", "csv", "brieskorn", "sweep", "--max", "3", "--n", "3"]
        )
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0].startswith("exponents,orbits,g,e,b,T")
        assert len(lines) == 9

    def test_csv_rejected_elsewhere(self, capsys, trefoil_file):
        code, out, err = run_cli(capsys, ["--format", "csv", "alex", trefoil_file])
        assert code == 1
        validate("error", json.loads(err))

    def test_bad_exponents(self, capsys):
        code, out, err = run_cli(capsys, ["brieskorn", "1,2,3"])
        assert code == 1
        validate("error", json.loads(err))


class TestHolonomy:
    def test_threeform_input(self, capsys, t3_form_file):
        code, out, _ = run_cli(capsys, ["holonomy", t3_form_file, "--degree", "4"])
        assert code == 0
        report = json.loads(out)
        validate("holonomy", report)
        assert report["ranks"] == [3, 0, 0, 0]

    def test_relation_list_input(self, capsys, tmp_path):
        f = tmp_path / "rels.json"
        f.write_text(json.dumps({"n": 2, "relations": [[1]]}))
        code, out, _ = run_cli(capsys, ["holonomy", str(f), "--degree", "4"])
        report = json.loads(out)
        validate("holonomy", report)
        assert report["ranks"] == [2, 0, 0, 0]

    def test_degree_cap(self, capsys, t3_form_file):
        code, out, err = run_cli(capsys, ["holonomy", t3_form_file, "--degree", "9"])
        assert code == 1
        validate("error", json.loads(err))


class TestErrors:
    def test_parse_error_has_offset(self, capsys, tmp_path):
        f = tmp_path / "bad.grp"
        f.write_text("<x, y | x z>")
        code, out, err = run_cli(capsys, ["alex", str(f)])
        assert code == 2
        record = json.loads(err)
        validate("error", record)
        assert record["error"]["type"] == "parse"
        assert record["error"]["offset"] == 10

    def test_missing_file(self, capsys):
        code, out, err = run_cli(capsys, ["alex", "/nonexistent/file.grp"])
        assert code == 2
        validate("error", json.loads(err))

    def test_bad_json(self, capsys, tmp_path):
        f = tmp_path / "bad.form"
        f.write_text("{not json")
        code, out, err = run_cli(capsys, ["classify", str(f)])
        assert code == 2
        validate("error", json.loads(err))


class TestDeterminism:
    def test_byte_identical_reruns(self, capsys, trefoil_file, model5_form_file):
        commands = [
            ["--seed", "42", "--trials", "30", "alex", trefoil_file],
            ["charvar", trefoil_file, "6:1"],
            ["classify", model5_form_file],
            ["brieskorn", "3,3,6"],
            ["--format", "csv", "brieskorn", "sweep", "--max", "4", "--n", "3"],
        ]
        for argv in commands:
            _, first, _ = run_cli(capsys, argv)
            _, second, _ = run_cli(capsys, argv)
            assert first == second
