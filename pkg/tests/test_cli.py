import json

import pytest

from mckayquiver.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_quiver_text(capsys):
    code, out, _ = run(capsys, "quiver", "--r", "1", "--n", "4")
    assert code == 0
    assert out.splitlines()[0] == "G(1,1,4): 5 vertices, 12 arrows"
    assert "  [3,1] -> [3,1]" in out


def test_quiver_dot_for_s4(capsys):
    code, out, _ = run(capsys, "quiver", "--r", "1", "--p", "1", "--n", "4", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph")
    assert out.count("->") == 12


def test_quiver_json(capsys):
    code, out, _ = run(capsys, "quiver", "--r", "3", "--p", "3", "--n", "3", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["schema_version"] == 1
    assert (data["r"], data["p"], data["n"]) == (3, 3, 3)
    assert sum(v["dim"] ** 2 for v in data["vertices"]) == 54


def test_dihedral_five(capsys):
    code, out, _ = run(capsys, "quiver", "--r", "5", "--p", "5", "--n", "2", "--format", "json")
    data = json.loads(out)
    labels = [v["label"] for v in data["vertices"]]
    assert len(labels) == 4
    loops = [labels[a["src"]] for a in data["arrows"] if a["src"] == a["dst"]]
    assert loops == ["[1|-|1|-|-]"]


def test_output_is_byte_stable(capsys):
    _, first, _ = run(capsys, "quiver", "--r", "4", "--p", "2", "--n", "3", "--format", "dot")
    _, second, _ = run(capsys, "quiver", "--r", "4", "--p", "2", "--n", "3", "--format", "dot")
    assert first == second


def test_irreps(capsys):
    code, out, _ = run(capsys, "irreps", "--r", "3", "--p", "3", "--n", "3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert "[1|1|1]@2" in json.dumps(data)


def test_branch_restriction(capsys):
    code, out, _ = run(capsys, "branch", "--r", "3", "--n", "8", "--rep", "[2,1|2,1,1|1]", "--direction", "res-product")
    assert code == 0
    assert out.count(" x ") == 5
    assert "[2,1|2,1,1|-] x 2" in out


def test_branch_induction(capsys):
    code, out, _ = run(capsys, "branch", "--r", "3", "--n", "8", "--rep", "[2,1|2,1|1]", "--direction", "ind-product:1")
    assert code == 0
    for t in ["[2,1|2,1,1|1]", "[2,1|2,2|1]", "[2,1|3,1|1]"]:
        assert t in out


def test_branch_rejects_wrong_size(capsys):
    code, _, err = run(capsys, "branch", "--r", "3", "--n", "5", "--rep", "[2|1|-]", "--direction", "res-product")
    assert code == 2
    assert err.startswith("error:")


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "--r", "3", "--p", "1", "--n", "3")
    assert code == 0
    assert json.loads(out)["status"] == "PASS"


def test_verify_refuses_above_the_bound(capsys):
    code, _, err = run(capsys, "verify", "--r", "3", "--n", "3", "--bound", "100")
    assert code == 2
    assert "bound" in err


def test_bad_group(capsys):
    code, _, err = run(capsys, "quiver", "--r", "4", "--p", "3", "--n", "2")
    assert code == 2
    assert err


def test_threads_must_be_positive(capsys):
    with pytest.raises(SystemExit):
        main(["quiver", "--r", "2", "--n", "2", "--threads", "0"])


def test_chartable(capsys):
    code, out, _ = run(capsys, "chartable", "--r", "2", "--n", "2", "--format", "json")
    assert code == 0
    assert len(json.loads(out)["irreps"]) == 5


def test_lusztig_s3_exterior(capsys):
    code, out, _ = run(capsys, "lusztig", "--group", "s3", "--ideal", "ext")
    assert code == 0
    assert "relations for ideal exterior: 8" in out
    assert "rho21 -> rho21: AB-DC" in out


def test_lusztig_d4_dot(capsys):
    code, out, _ = run(capsys, "lusztig", "--group", "d4", "--ideal", "sym", "--out", "dot")
    assert code == 0
    assert "// V4 -> V4: EA+FB-GC-HD" in out


def test_lusztig_json(capsys):
    code, out, _ = run(capsys, "lusztig", "--group", "abelian:3:1,2", "--format", "json")
    assert code == 0
    assert json.loads(out)["schema_version"] == 1


def test_lusztig_custom_ideal(tmp_path, capsys):
    path = tmp_path / "ideal.txt"
    path.write_text("# xy + yx\n0 1 1 0\n")
    code, out, _ = run(capsys, "lusztig", "--group", "s3", "--ideal", f"custom:{path}")
    assert code == 0
    assert "AB+2E^2+DC" in out or "AB+DC+2E^2" in out
    assert "relations for ideal custom: 3" in out


def test_lusztig_custom_ideal_with_roots_of_unity(tmp_path, capsys):
    path = tmp_path / "ideal.txt"
    path.write_text("1, 0, 0, -z^2\n")
    code, _, err = run(capsys, "lusztig", "--group", "s3", "--ideal", f"custom:{path}")
    # x^2 - w^2 y^2 alone is not an S3-stable subspace
    assert code == 2
    assert "not stable" in err


def test_lusztig_custom_ideal_errors(tmp_path, capsys):
    path = tmp_path / "ideal.txt"
    path.write_text("1 2 3\n")
    code, _, err = run(capsys, "lusztig", "--group", "s3", "--ideal", f"custom:{path}")
    assert code == 2 and "4 coefficients" in err
    code, _, _ = run(capsys, "lusztig", "--group", "s3", "--ideal", f"custom:{tmp_path / 'missing'}")
    assert code == 2
    code, _, _ = run(capsys, "lusztig", "--group", "nope")
    assert code == 2
