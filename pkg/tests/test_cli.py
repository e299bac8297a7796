import json

import pytest

from quiverbelt.cli import ParseError, main, parse_entry, parse_matrix_spec


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_entry_shorthand():
    assert abs(parse_entry("cos(1/3)").to_float() - 1.0) < 1e-12
    assert abs(parse_entry("-cos(2/5)").to_float() + 0.618034) < 1e-5
    from fractions import Fraction

    assert parse_entry("3/2") == Fraction(3, 2)
    with pytest.raises(ParseError):
        parse_entry("cos(x)")


def test_parse_matrix_spec_rank3():
    B = parse_matrix_spec("cos(1/3),0,cos(2/5)")
    assert B.rank == 3
    assert abs(B[0, 1].to_float() - 1.0) < 1e-12
    assert B[0, 2].is_zero()


def test_classify_path_quiver(capsys):
    code, out, _ = run(["classify", "--entries", "cos(1/3),cos(1/3),0"], capsys)
    assert code == 0
    assert "FiniteType" in out


def test_classify_markov(capsys):
    code, out, _ = run(["classify", "--entries", "2,-2,2"], capsys)
    assert code == 0
    assert "MarkovClass" in out


def test_classify_affine_json(capsys):
    code, out, _ = run(
        ["classify", "--affine", "5", "--format", "json"], capsys
    )
    assert code == 0
    data = json.loads(out)
    assert data["kind"] == "affine" and data["denominator"] == 5
    assert abs(data["markov_constant_float"] - 4.0) < 1e-12


def test_enumerate_sph_counts(capsys):
    code, out, err = run(["enumerate", "--sph", "1/5,2/5"], capsys)
    assert code == 0
    assert json.loads(out)["vertices"] == 40
    assert "closed=True" in err


def test_enumerate_affine_exports(tmp_path, capsys):
    dot = tmp_path / "g.dot"
    code, _, _ = run(
        ["enumerate", "--affine", "5", "--depth", "4", "--format", "dot", "--out", str(dot)],
        capsys,
    )
    assert code == 0
    assert dot.read_text().startswith("graph exchange {")
    svg = tmp_path / "g.svg"
    code, _, _ = run(
        ["enumerate", "--affine", "5", "--depth", "4", "--format", "svg", "--out", str(svg)],
        capsys,
    )
    assert code == 0
    assert svg.read_text().startswith("<svg")


def test_enumerate_deterministic_json(tmp_path, capsys):
    outputs = []
    for name in ("a.json", "b.json"):
        path = tmp_path / name
        code, _, _ = run(
            [
                "enumerate", "--affine", "5", "--depth", "5",
                "--format", "json", "--out", str(path), "--seed", "7",
            ],
            capsys,
        )
        assert code == 0
        outputs.append(path.read_bytes())
    assert outputs[0] == outputs[1]


def test_rank2_csv(tmp_path, capsys):
    path = tmp_path / "periods.csv"
    code, _, _ = run(["rank2", "--max-b", "5", "--out", str(path)], capsys)
    assert code == 0
    lines = path.read_text().strip().splitlines()
    assert lines[0] == "a,b,u_halfsteps,period"
    assert any(line.startswith("1,3,") and line.endswith(",5") for line in lines)


def test_verify_subcommand_runs_named_checks(capsys):
    code, out, _ = run(
        ["verify", "--checks", "verlinde,rank2-periods"], capsys
    )
    assert code == 0
    assert out.count("PASS") == 2


def test_matrix_file_round_trip(tmp_path, capsys):
    from quiverbelt.exmatrix import affine_normal_form

    path = tmp_path / "m.json"
    path.write_text(json.dumps(affine_normal_form(5).to_json()))
    code, out, _ = run(["classify", "--matrix", str(path)], capsys)
    assert code == 0
    assert "Affine(d=5)" in out
