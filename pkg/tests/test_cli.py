import subprocess
import sys
from fractions import Fraction

import pytest

from limpack import gen_named, parse_graph, serialize_graph
from limpack.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_graph(tmp_path, name, g):
    path = tmp_path / name
    path.write_text(serialize_graph(g))
    return str(path)


def test_gen_and_solve_cycle(tmp_path, capsys):
    out = str(tmp_path / "c6.graph")
    code, _, _ = run_cli(capsys, "gen", "--family", "cycle", "--n", "6", "--out", out)
    assert code == 0
    code, stdout, _ = run_cli(capsys, "solve", "--k", "2", out)
    assert code == 0
    lines = stdout.splitlines()
    assert lines[0] == "optimum: 4"
    assert lines[1].startswith("witness: ")
    assert lines[2].startswith("nodes: ")


def test_gen_copies(tmp_path, capsys):
    out = str(tmp_path / "h6x3.graph")
    code, _, _ = run_cli(
        capsys, "gen", "--family", "h6", "--copies", "3", "--out", out
    )
    assert code == 0
    g = parse_graph(open(out).read())
    assert g.n == 18 and g.m == 27


def test_gen_projective(tmp_path, capsys):
    out = str(tmp_path / "p.graph")
    code, _, _ = run_cli(
        capsys, "gen", "--family", "projective", "--q", "2", "--k", "1", "--out", out
    )
    assert code == 0
    assert parse_graph(open(out).read()).n == 7


def test_gen_usage_error(tmp_path, capsys):
    code, _, err = run_cli(
        capsys, "gen", "--family", "cycle", "--out", str(tmp_path / "x")
    )
    assert code == 2
    assert "usage error" in err


def test_gen_input_error(tmp_path, capsys):
    code, _, err = run_cli(
        capsys, "gen", "--family", "cycle", "--n", "2", "--out", str(tmp_path / "x")
    )
    assert code == 3
    assert "error" in err


def test_solve_dominating(tmp_path, capsys):
    path = write_graph(tmp_path, "c4.graph", parse_graph("4 4\n0 1\n1 2\n2 3\n3 0\n"))
    code, stdout, _ = run_cli(capsys, "solve", "--dominating", "--l", "1", "--k", "1", path)
    assert code == 0
    assert stdout.splitlines()[0] == "optimum: 2"


def test_solve_infeasible_exits_one(tmp_path, capsys):
    path = write_graph(tmp_path, "p.graph", gen_named("petersen"))
    code, _, err = run_cli(capsys, "solve", "--dominating", "--l", "9", "--k", "1", path)
    assert code == 1
    assert "infeasible" in err


def test_solve_missing_file(capsys):
    code, _, err = run_cli(capsys, "solve", "--k", "1", "/nonexistent/file.graph")
    assert code == 3


def test_verify_pipeline_valid(tmp_path, capsys):
    gpath = write_graph(tmp_path, "h6.graph", gen_named("h6"))
    code, stdout, _ = run_cli(capsys, "construct", "--method", "cubic2", "--k", "2", gpath)
    assert code == 0
    witness = stdout.splitlines()[-1].removeprefix("witness: ")
    ppath = tmp_path / "pack.txt"
    ppath.write_text(witness + "\n")
    code, stdout, _ = run_cli(capsys, "verify", "--k", "2", "--packing", str(ppath), gpath)
    assert code == 0
    assert stdout.splitlines()[0] == "valid: true"


def test_verify_invalid_exits_one(tmp_path, capsys):
    gpath = write_graph(tmp_path, "h6.graph", gen_named("h6"))
    ppath = tmp_path / "bad.txt"
    ppath.write_text("0 1 2\n")
    code, stdout, _ = run_cli(capsys, "verify", "--k", "2", "--packing", str(ppath), gpath)
    assert code == 1
    lines = stdout.splitlines()
    assert lines[0] == "valid: false"
    assert any(line.startswith("violation: vertex") for line in lines)


def test_verify_dominating(tmp_path, capsys):
    gpath = write_graph(tmp_path, "c4.graph", parse_graph("4 4\n0 1\n1 2\n2 3\n3 0\n"))
    ppath = tmp_path / "dom.txt"
    ppath.write_text("0 2\n")
    code, stdout, _ = run_cli(
        capsys, "verify", "--dominating", "--l", "1", "--k", "1", "--packing", str(ppath), gpath
    )
    assert code == 0


def test_verify_typed_graph(tmp_path, capsys):
    gpath = tmp_path / "typed.graph"
    gpath.write_text("2 2\n0 1 c\n0 1 d\n")
    ppath = tmp_path / "pack.txt"
    ppath.write_text("0 1\n")
    code, stdout, _ = run_cli(
        capsys, "verify", "--k", "2", "--packing", str(ppath), str(gpath)
    )
    assert code == 1
    assert "violation: cedge 0 1" in stdout
    # typed graphs only support k = 2
    code, _, err = run_cli(
        capsys, "verify", "--k", "1", "--packing", str(ppath), str(gpath)
    )
    assert code == 3


def test_construct_all_methods_verify(tmp_path, capsys):
    gpath = write_graph(tmp_path, "cubic.graph", gen_named("petersen"))
    for method in ("cubic2", "greedy", "sample-repair", "lll"):
        code, stdout, _ = run_cli(
            capsys, "construct", "--method", method, "--k", "2", "--seed", "3", gpath
        )
        assert code == 0, method
        witness = stdout.splitlines()[-1].removeprefix("witness: ")
        ppath = tmp_path / f"{method}.txt"
        ppath.write_text(witness + "\n")
        code, _, _ = run_cli(capsys, "verify", "--k", "2", "--packing", str(ppath), gpath)
        assert code == 0, method


def test_construct_cubic2_requires_k2(tmp_path, capsys):
    gpath = write_graph(tmp_path, "c6.graph", parse_graph("3 3\n0 1\n1 2\n0 2\n"))
    code, _, err = run_cli(capsys, "construct", "--method", "cubic2", "--k", "1", gpath)
    assert code == 2


def test_construct_trace(tmp_path, capsys):
    gpath = write_graph(tmp_path, "h6.graph", gen_named("h6"))
    tpath = tmp_path / "trace.txt"
    code, _, _ = run_cli(
        capsys, "construct", "--method", "cubic2", "--k", "2", "--trace", str(tpath), gpath
    )
    assert code == 0
    text = tpath.read_text()
    assert text.startswith("rule=")


def test_construct_typed_input_promoted_and_guarded(tmp_path, capsys):
    tpath = tmp_path / "typed.graph"
    tpath.write_text("3 2\n0 1 c\n1 2 d\n")
    code, stdout, _ = run_cli(capsys, "construct", "--method", "cubic2", "--k", "2", str(tpath))
    assert code == 0
    code, _, err = run_cli(capsys, "construct", "--method", "greedy", "--k", "2", str(tpath))
    assert code == 3  # randomized/greedy constructors need plain graphs


def test_construct_lll_report_lines(tmp_path, capsys):
    gpath = write_graph(tmp_path, "c6.graph", parse_graph("6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n"))
    code, stdout, _ = run_cli(
        capsys, "construct", "--method", "lll", "--k", "2", "--seed", "1", gpath
    )
    assert code == 0
    lines = stdout.splitlines()
    assert lines[0].startswith("size: ")
    assert lines[1].startswith("rounds: ")
    assert lines[2] in ("clamped: true", "clamped: false")
    assert lines[3] == "success: true"


def test_bounds_from_flags(capsys):
    code, stdout, _ = run_cli(
        capsys, "bounds", "--k", "2", "--n", "60", "--maxdeg", "3", "--mindeg", "3"
    )
    assert code == 0
    assert "packing_upper: 30" in stdout
    assert "random_lower: " in stdout


def test_bounds_from_file(tmp_path, capsys):
    gpath = write_graph(tmp_path, "p.graph", gen_named("petersen"))
    code, stdout, _ = run_cli(capsys, "bounds", "--k", "1", gpath)
    assert code == 0
    assert "greedy_lower: 1" in stdout
    assert "n: 10" in stdout


def test_bounds_needs_flags_or_file(capsys):
    code, _, err = run_cli(capsys, "bounds", "--k", "2")
    assert code == 2


def test_bench_table_properties(capsys):
    code, stdout, _ = run_cli(capsys, "bench", "--suite", "paper", "--no-timing")
    assert code == 0
    lines = stdout.splitlines()
    assert lines[0] == "family n k method size exact upper"
    assert len(lines) > 20
    for line in lines[1:]:
        family, n, k, method, size, exact, upper = line.split()
        n, k, size, exact = int(n), int(k), int(size), int(exact)
        upper_val = float(Fraction(upper))
        assert size <= exact <= upper_val + 1e-9
        if method == "cubic2":
            assert 3 * size >= n


def test_bench_byte_identical(capsys):
    code1, out1, _ = run_cli(capsys, "bench", "--suite", "paper", "--no-timing")
    code2, out2, _ = run_cli(capsys, "bench", "--suite", "paper", "--no-timing")
    assert code1 == code2 == 0
    assert out1 == out2


def test_construct_byte_identical(tmp_path, capsys):
    gpath = write_graph(tmp_path, "g.graph", gen_named("petersen"))
    outs = set()
    for _ in range(2):
        code, stdout, _ = run_cli(
            capsys, "construct", "--method", "sample-repair", "--k", "2", "--seed", "11", gpath
        )
        assert code == 0
        outs.add(stdout)
    assert len(outs) == 1


def test_usage_exit_code_from_argparse(capsys):
    assert main(["nonsense"]) == 2
    assert main([]) == 2


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0


def test_console_script_entrypoint(tmp_path):
    out = subprocess.run(
        [sys.executable, "-m", "limpack.cli", "bounds", "--k", "1", "--n", "10",
         "--maxdeg", "3", "--mindeg", "3"],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0
    assert "greedy_lower: 1" in out.stdout
