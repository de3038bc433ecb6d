from twoforests import format_edge_list, gen_named
from twoforests.cli import main


def _write(tmp_path, name, graph):
    path = tmp_path / name
    path.write_text(format_edge_list(graph) + "\n")
    return str(path)


def test_decompose_c4_base_case(tmp_path, capsys):
    path = _write(tmp_path, "c4.txt", gen_named("cycle", 4))
    code = main(["decompose", "--alpha", "7", "--input", path, "--verify"])
    out = capsys.readouterr()
    assert code == 0
    assert out.out == "0 1 H\n0 3 H\n1 2 H\n2 3 H\n"


def test_decompose_k4_witness(tmp_path, capsys):
    path = _write(tmp_path, "k4.txt", gen_named("complete", 4))
    code = main(["decompose", "--alpha", "5", "--input", path])
    out = capsys.readouterr()
    assert code == 1
    assert out.out == ""
    assert "0 1" in out.err and "2 3" in out.err


def test_decompose_output_file(tmp_path, capsys):
    path = _write(tmp_path, "c4.txt", gen_named("cycle", 4))
    dest = tmp_path / "part.txt"
    code = main(["decompose", "--alpha", "7", "--input", path, "--output", str(dest)])
    capsys.readouterr()
    assert code == 0
    assert dest.read_text() == "0 1 H\n0 3 H\n1 2 H\n2 3 H\n"


def test_check_configurations(tmp_path, capsys):
    path = _write(tmp_path, "p3.txt", gen_named("path", 3))
    assert main(["check", "--alpha", "15", "--input", path]) == 0
    assert capsys.readouterr().out == "small-vertex 0\n"

    path = _write(tmp_path, "c4.txt", gen_named("cycle", 4))
    assert main(["check", "--alpha", "5", "--input", path]) == 0
    assert capsys.readouterr().out == "light-edge 0 1\n"

    path = _write(tmp_path, "b4.txt", gen_named("banana", 4))
    assert main(["check", "--alpha", "5", "--input", path]) == 0
    assert capsys.readouterr().out == "alt-cycle 2 0 3 1\n"

    path = _write(tmp_path, "k4.txt", gen_named("complete", 4))
    assert main(["check", "--alpha", "5", "--input", path]) == 1
    assert capsys.readouterr().out.startswith("witness\n")


def test_gen_named_stdout(capsys):
    assert main(["gen", "named", "--name", "cycle", "--n", "4"]) == 0
    assert capsys.readouterr().out == "0 1\n0 3\n1 2\n2 3\n"


def test_gen_apollonian_determinism(capsys):
    assert main(["gen", "apollonian", "--n", "30", "--seed", "9"]) == 0
    first = capsys.readouterr().out
    assert main(["gen", "apollonian", "--n", "30", "--seed", "9"]) == 0
    assert capsys.readouterr().out == first
    assert len(first.splitlines()) == 3 * 30 - 6


def test_gen_series_parallel_subsample(capsys):
    assert main(["gen", "series-parallel", "--m", "20", "--seed", "3", "--p", "0.5"]) == 0
    first = capsys.readouterr().out
    assert main(["gen", "series-parallel", "--m", "20", "--seed", "3", "--p", "0.5"]) == 0
    assert capsys.readouterr().out == first


def test_fuzz_deterministic_and_green(capsys):
    argv = ["fuzz", "--alpha", "6", "--count", "10", "--seed", "3",
            "--family", "sp", "--max-n", "25"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    assert capsys.readouterr().out == first
    assert first.endswith("fuzz: 10/10 instances ok\n")


def test_usage_errors(tmp_path, capsys):
    assert main(["decompose", "--alpha", "7"]) == 3  # missing --input
    capsys.readouterr()
    assert main(["nonsense"]) == 3
    capsys.readouterr()
    assert main(["decompose", "--alpha", "7", "--input", str(tmp_path / "nope.txt")]) == 3
    capsys.readouterr()
    bad = tmp_path / "bad.txt"
    bad.write_text("0 0\n")
    assert main(["decompose", "--alpha", "7", "--input", str(bad)]) == 3
