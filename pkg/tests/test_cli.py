from pathlib import Path

import pytest

from illusionfree.cli import EXIT_ERROR, EXIT_MISMATCH, EXIT_OK, main
from illusionfree.formats import parse_instance

DATA = Path(__file__).parent / "data"
CASCADE = str(DATA / "cascade.dif")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_oracle(capsys):
    code, out, _ = run(capsys, "solve", CASCADE, "--algo", "oracle")
    assert code == EXIT_OK
    assert "size: 4" in out and "flipped: 5 6 7 8" in out and "verified: yes" in out


def test_solve_auto_and_ptas(capsys):
    code, out, _ = run(capsys, "solve", CASCADE)
    assert code == EXIT_OK and "size: 4" in out
    grid = str(DATA / "instances" / "grid.dif")
    code, out, _ = run(capsys, "solve", grid, "--algo", "ptas", "--epsilon", "1/2")
    assert code == EXIT_OK and "k: 8" in out


def test_structure_mismatch(capsys):
    code, _, err = run(capsys, "solve", CASCADE, "--algo", "outgrid")
    assert code == EXIT_MISMATCH and "structure mismatch" in err


def test_demand_and_decomposition(capsys, tmp_path):
    demand = tmp_path / "demand.txt"
    demand.write_text("0\n")
    square = str(DATA / "square.dif")
    code, out, _ = run(capsys, "solve", square, "--demand", str(demand))
    assert code == EXIT_OK and "size: 1" in out
    td = tmp_path / "b.td"
    td.write_text("s td 1 4 4\nb 1 1 2 3 4\n")
    code, out, _ = run(capsys, "solve", square, "--decomposition", str(td))
    assert code == EXIT_OK and "width: 3" in out
    code, _, err = run(capsys, "solve", square, "--decomposition", str(td), "--algo", "cover")
    assert code == EXIT_ERROR


def test_verify(capsys, tmp_path):
    good = tmp_path / "good.txt"
    good.write_text("5\n6\n7\n8\n")
    assert run(capsys, "verify", CASCADE, "--solution", str(good))[1] == "valid\n"
    bad = tmp_path / "bad.txt"
    bad.write_text("5\n")
    code, out, _ = run(capsys, "verify", CASCADE, "--solution", str(bad))
    assert code == EXIT_MISMATCH and out.startswith("invalid") and "violators:" in out


def test_errors(capsys, tmp_path):
    broken = tmp_path / "broken.dif"
    broken.write_text("difr 1\nn 2\np 3/2\ncolors BR\nedges 0\n")
    code, _, err = run(capsys, "solve", str(broken))
    assert code == EXIT_ERROR and "line 3" in err
    assert run(capsys, "solve", str(tmp_path / "missing.dif"))[0] == EXIT_ERROR
    with pytest.raises(SystemExit):
        main(["solve"])


def test_generate_is_deterministic(capsys, tmp_path):
    args = ["generate", "--kind", "grid", "--n", "3x4", "--seed", "5", "--p", "2/3"]
    first = run(capsys, *args)[1]
    assert first == run(capsys, *args)[1]
    inst = parse_instance(first)
    assert inst.n == 12 and inst.kind == "grid"
    out = tmp_path / "g.dif"
    assert main(args + ["--out", str(out)]) == EXIT_OK
    assert out.read_text() == first


def test_reduce(capsys, tmp_path):
    code, out, err = run(capsys, "reduce", "hitting-set", str(DATA / "sample.hs"))
    assert code == EXIT_OK and "budget: 2" in err
    assert parse_instance(out).n == 5 + 2 + 2
    code, out, err = run(capsys, "reduce", "3sat", str(DATA / "formulas" / "single.fml"))
    assert code == EXIT_OK and "budget: 13" in err
    assert parse_instance(out).kind == "grid"


def test_bench(capsys, tmp_path):
    target = tmp_path / "bench.csv"
    assert main(["bench", "--suite", "structured", "--seeds", "1", "--out", str(target)]) == 0
    lines = target.read_text().splitlines()
    assert lines[0] == "instance,solver,p,size,verified,micros"
    assert len(lines) == 1 + 4 * 2
    assert all(row.split(",")[4] == "True" for row in lines[1:])
