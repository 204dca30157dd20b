import json

import pytest

from eulercc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_positive_masses(capsys):
    code, out, _ = run(capsys, "solve", "-m", "1,1,1", "-b", "-2")
    assert code == 0
    doc = json.loads(out)
    assert (doc["e1"], doc["e2"], doc["e3"], doc["total"]) == (1, 1, 1, 3)
    cells = {sol["cell"]: sol for sol in doc["solutions"]}
    assert cells[2]["s"] == pytest.approx(1.0, rel=1e-9)
    assert cells[2]["positions"] == [0.0, 1.0, pytest.approx(2.0)]
    assert doc["degenerate_family"] is None


def test_solve_no_configurations(capsys):
    code, out, _ = run(capsys, "solve", "-m", "0,-1,1", "-b", "-2")
    assert code == 0
    doc = json.loads(out)
    assert doc["total"] == 0
    assert doc["solutions"] == []


def test_solve_degenerate_family(capsys):
    code, out, _ = run(capsys, "solve", "-m", "1,1,1", "-b", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["total"] == "inf"
    assert doc["degenerate_family"] == "iii"


def test_solve_deterministic_output(capsys):
    _, out1, _ = run(capsys, "solve", "-m", "1,-1.2,1", "-b", "-2")
    _, out2, _ = run(capsys, "solve", "-m", "1,-1.2,1", "-b", "-2")
    assert out1 == out2


def test_solve_parse_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["solve", "-m", "1,1", "-b", "-2"])
    assert exc.value.code == 2


def test_grid_single_infinite_point(capsys):
    code, out, _ = run(capsys, "grid", "--m2", "0:0", "--b", "1:1", "-n", "1x1")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "m2,b,e1,e2,e3,total,on_frontier"
    assert lines[1] == "0,1,inf,inf,inf,inf,true"


def test_grid_check_passes(capsys):
    code, out, err = run(capsys, "grid", "--m2", "-2:0", "--b", "-2:0",
                         "-n", "6x6", "--check", "--margin", "0.05")
    assert code == 0
    assert err == ""
    assert len(out.strip().split("\n")) == 37


def test_signomial_count(capsys):
    code, out, _ = run(capsys, "signomial", "--terms", "[[1,0.5],[-3,1],[1,2]]")
    assert code == 0
    doc = json.loads(out)
    assert doc["sign_variations"] == 2
    assert doc["count"] == 2
    assert len(doc["roots"]) == 2


def test_signomial_identically_zero(capsys):
    code, out, _ = run(capsys, "signomial", "--terms", "[]")
    assert code == 0
    assert json.loads(out)["count"] == "identically_zero"


def test_signomial_gravitational_quintic(capsys):
    code, out, _ = run(capsys, "signomial", "--terms",
                       "[[2,0],[5,1],[4,2],[-4,3],[-5,4],[-2,5]]")
    assert code == 0
    doc = json.loads(out)
    assert doc["sign_variations"] == 1
    assert doc["count"] == 1


def test_bounds_commands(capsys):
    code, out, _ = run(capsys, "bounds", "straight", "-n", "6")
    assert code == 0 and out.strip() == "62"
    code, out, _ = run(capsys, "bounds", "khovanskii", "-d", "1,2", "-k", "4")
    assert code == 0 and out.strip() == "32768"
    code, out, _ = run(capsys, "bounds", "straight", "-n", "1")
    assert code == 0 and out.strip() == "0"


def test_output_file_writing(tmp_path, capsys):
    path = tmp_path / "out.json"
    code, out, _ = run(capsys, "solve", "-m", "1,1,1", "-b", "-2", "-o", str(path))
    assert code == 0
    assert out == ""
    doc = json.loads(path.read_text())
    assert doc["total"] == 3
