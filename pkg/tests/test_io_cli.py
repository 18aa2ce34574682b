import json

import pytest

from stonefin.cli import main
from stonefin.io import FormatError, function_from_json, load_function, parse_field, tensor_from_json
from stonefin.valfield import FiniteField, GaussianField, RationalField

DISCRETE3 = {"points": ["1", "2", "3"], "opens": [[], ["1"], ["2"], ["3"], ["1", "2"], ["1", "3"], ["2", "3"], ["1", "2", "3"]]}
SIERPINSKI = {"points": ["0", "1"], "opens": [[], ["1"], ["0", "1"]]}


@pytest.fixture
def files(tmp_path):
    (tmp_path / "d3.json").write_text(json.dumps(DISCRETE3))
    (tmp_path / "s.json").write_text(json.dumps(SIERPINSKI))
    (tmp_path / "bad.json").write_text(json.dumps({"points": ["a", "b"], "opens": [[], ["a"]]}))
    (tmp_path / "f.json").write_text(
        json.dumps({"space": "d3.json", "field": "p-adic:2", "values": {"1": 1, "2": 2, "3": 4}})
    )
    d4 = {"points": list("1234")}
    d4["opens"] = [[str(i + 1) for i in range(4) if m >> i & 1] for m in range(16)]
    (tmp_path / "g.json").write_text(
        json.dumps({"space": d4, "field": {"kind": "p-adic", "p": 2}, "values": {"1": 1, "2": 3, "3": 4, "4": 12}})
    )
    (tmp_path / "t.json").write_text(
        json.dumps(
            {
                "extension": "F4/F2",
                "space": {"points": ["1", "2"], "opens": [[], ["1"], ["2"], ["1", "2"]]},
                "terms": [
                    {"coefficient": "1", "values": {"1": 1, "2": 0}},
                    {"coefficient": "x", "values": {"1": 0, "2": 1}},
                ],
            }
        )
    )
    return tmp_path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, (json.loads(out.out) if code == 0 and out.out.strip().startswith("{") else out)


def test_parse_field_forms():
    assert parse_field("p-adic:3") == RationalField(3)
    assert parse_field("trivial-q") == RationalField()
    assert parse_field("trivial-qi") == GaussianField()
    assert parse_field('{"kind": "trivial-fq", "q": 4}') == FiniteField(4)


def test_function_json_errors():
    with pytest.raises(FormatError, match="values"):
        function_from_json({"space": DISCRETE3, "field": "trivial-q"})
    with pytest.raises(FormatError, match="extension"):
        tensor_from_json({"space": DISCRETE3, "terms": []})


def test_load_function_resolves_relative_space(files):
    f = load_function(files / "f.json")
    assert [str(v) for v in f.values] == ["1", "2", "4"]


def test_space_commands(files, capsys):
    code, out = run(capsys, "space", "check", files / "d3.json")
    assert code == 0 and out["valid"] and out["points"] == 3
    code, out = run(capsys, "space", "describe", files / "s.json")
    assert out["components"] == [["0", "1"]] and out["connected"]
    code, out = run(capsys, "space", "check", files / "bad.json")
    assert code == 2 and "full point set" in out.err


def test_clopen_and_uf(files, capsys):
    code, out = run(capsys, "clopen", files / "s.json")
    assert out["size"] == 2
    code, out = run(capsys, "uf", "build", files / "d3.json")
    assert code == 0 and len(out["points"]) == 3


def test_seminorm_command(files, capsys):
    code, out = run(capsys, "seminorm", "--function", files / "f.json")
    assert out["sup_norm"] == "1" and out["algebraic_norm"] == "1"
    assert sorted(out["ultrafilter_seminorms"].values()) == ["1", "2^-1", "2^-2"]


def test_ideal_and_spectrum_commands(files, capsys):
    code, out = run(capsys, "ideal", "--function", files / "f.json", "--point", "2")
    (m,) = out["maximal_ideals"]
    assert m["zero_set"] == ["2"] and m["quotient_norm"] == "2^-1" and m["residue"] == "2"
    code, out = run(capsys, "ideal", "--space", files / "s.json", "--field", "p-adic:3")
    assert len(out["maximal_ideals"]) == 1
    code, out = run(capsys, "spectrum", "--space", files / "d3.json", "--field", "trivial-fq:2")
    assert out["homeomorphic_to_uf"] and len(out["points"]) == 3
    code, out = run(capsys, "ideal")
    assert code == 2


def test_gelfand_command(files, capsys):
    code, out = run(capsys, "gelfand", "--space", files / "d3.json", "--partition", "1,2|3")
    assert out["roundtrip"] and out["recovered"] == [["1", "2"], ["3"]]
    code, out = run(capsys, "gelfand", "--space", files / "d3.json", "--partition", "1,2")
    assert code == 2


def test_approx_command(files, capsys):
    code, out = run(capsys, "approx", "--function", files / "g.json", "--epsilon", "2^0")
    assert out["blocks"] == [["1", "2"], ["3", "4"]]
    assert out["error"] == "2^-1" and out["within_epsilon"] and out["norm_bound"]
    code, out = run(capsys, "approx", "--function", files / "g.json", "--epsilon", "0")
    assert code == 2


def test_tensor_command(files, capsys):
    code, out = run(capsys, "tensor-check", "--element", files / "t.json")
    assert out["isometry"] and out["tensor_norm"] == "1" == out["sup_norm"]
    code, out = run(capsys, "tensor-check", "--element", files / "t.json", "--extension", "C/R")
    assert code == 2


def test_verify_command(files, capsys):
    code, out = run(capsys, "verify", "--suite", "boolean-laws", "--max-points", "2")
    assert code == 0 and out["ok"]
    target = files / "report.json"
    code = main(["verify", "--suite", "gelfand", "--max-points", "3", "--out", str(target)])
    assert code == 0 and json.loads(target.read_text())["ok"]
    assert "gelfand: pass" in capsys.readouterr().out
    code, out = run(capsys, "verify", "--suite", "bogus")
    assert code == 2 and "unknown suite" in out.err


def test_missing_file_exits_2(capsys, tmp_path):
    code, out = run(capsys, "space", "check", tmp_path / "nope.json")
    assert code == 2
