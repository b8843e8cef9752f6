import json

import pytest

import kakimizu as kk
from kakimizu.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture()
def line_file(tmp_path):
    path = tmp_path / "line.json"
    assert main(["gen", "line", "--min", "0", "--max", "5", "-o", str(path)]) == 0
    return str(path)


@pytest.fixture()
def lattice_file(tmp_path):
    path = tmp_path / "lattice.json"
    assert main(["gen", "lattice", "--width", "5", "--height", "5", "-o", str(path)]) == 0
    return str(path)


@pytest.fixture()
def hexagon_file(tmp_path):
    path = tmp_path / "hexagon.json"
    system = kk.graph_to_system(6, [(i, (i + 1) % 6) for i in range(6)])
    path.write_text(kk.save_system(system), encoding="utf-8")
    return str(path)


def test_gen_then_distance(capsys, line_file):
    code, out, _ = run_cli(capsys, "distance", line_file, "-u", "u0", "-v", "u5")
    assert code == 0
    assert out == "5\n"


def test_spread_disjoint_pair(capsys, line_file):
    code, out, _ = run_cli(capsys, "spread", line_file, "-u", "u0", "-v", "u1")
    assert code == 0
    assert out == "0\n"


def test_distance_is_spread_plus_one_everywhere(capsys, lattice_file):
    system = kk.load_system(open(lattice_file, encoding="utf-8").read())
    ids = system.vertex_ids()
    for u, v in [("0_0", "3_2"), ("1_1", "4_0"), ("2_2", "2_3")]:
        assert u in ids and v in ids
        _, spread_out, _ = run_cli(capsys, "spread", lattice_file, "-u", u, "-v", v)
        _, dist_out, _ = run_cli(capsys, "distance", lattice_file, "-u", u, "-v", v)
        assert int(dist_out) == int(spread_out) + 1


def test_distance_same_vertex_is_zero(capsys, line_file):
    code, out, _ = run_cli(capsys, "distance", line_file, "-u", "u2", "-v", "u2")
    assert code == 0 and out == "0\n"


def test_validate_ok_and_errors(capsys, line_file, tmp_path):
    code, out, _ = run_cli(capsys, "validate", line_file)
    assert code == 0 and out.startswith("ok:")
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({
        "vertices": [{"id": "a", "complexity": [0, 0]},
                     {"id": "b", "complexity": [0, 0]}],
        "patterns": [{"u": "a", "v": "b", "support_start": 3, "counts": [1, 1]}],
    }), encoding="utf-8")
    code, _, err = run_cli(capsys, "validate", str(bad))
    assert code == 2
    assert "support misses" in err


def test_missing_file_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "validate", "/nonexistent/nowhere.json")
    assert code == 2 and "error:" in err


def test_unknown_vertex_is_usage_error(capsys, line_file):
    code, _, err = run_cli(capsys, "spread", line_file, "-u", "u0", "-v", "zz")
    assert code == 2 and "unknown vertex" in err


def test_bad_arguments_exit_2(capsys):
    assert main(["distance"]) == 2
    assert main(["nonsense"]) == 2
    capsys.readouterr()


def test_complex_export(capsys, tmp_path, line_file):
    dot = tmp_path / "graph.dot"
    simp = tmp_path / "simplices.txt"
    code, out, _ = run_cli(capsys, "complex", line_file,
                           "--export-dot", str(dot), "--export-simplices", str(simp))
    assert code == 0
    assert out.startswith("vertices 6 edges 5 dim 1")
    text = dot.read_text(encoding="utf-8")
    assert '"u0" -- "u1";' in text
    assert text.count("--") == 5
    lines = simp.read_text(encoding="utf-8").splitlines()
    assert "u0" in lines and "u0 u1" in lines


def test_links_subcommand(capsys, lattice_file):
    code, out, _ = run_cli(capsys, "links", lattice_file, "-s", "1_1")
    assert code == 0
    assert out.splitlines()[0].startswith("vertices: ")
    assert len(out.splitlines()[0].split()) == 7
    code, _, err = run_cli(capsys, "links", lattice_file, "-s", "0_0,3_3")
    assert code == 2 and "not a simplex" in err


def test_klarge_subcommand(capsys, lattice_file, hexagon_file):
    code, out, _ = run_cli(capsys, "klarge", lattice_file, "-k", "6")
    assert code == 0 and out == "6-large: true\n"
    code, out, _ = run_cli(capsys, "klarge", lattice_file, "-k", "7")
    assert code == 1 and out.startswith("7-large: false\nwitness:")


def test_h1_subcommand(capsys, lattice_file, hexagon_file):
    code, out, _ = run_cli(capsys, "h1", lattice_file)
    assert code == 0 and out == "H1 = 0\n"
    code, out, _ = run_cli(capsys, "h1", hexagon_file)
    assert code == 0 and out == "H1 = Z\n"


def test_reduce_subcommand(capsys, lattice_file, hexagon_file):
    code, out, _ = run_cli(capsys, "reduce", lattice_file,
                           "--cycle", "2_1,2_2,1_2,0_1,0_0,1_0")
    assert code == 0
    assert out.startswith("reduced in")
    code, out, _ = run_cli(capsys, "reduce", hexagon_file,
                           "--cycle", "g0,g1,g2,g3,g4,g5")
    assert code == 3
    assert out.startswith("inconclusive")
    code, _, err = run_cli(capsys, "reduce", lattice_file, "--cycle", "0_0,4_4")
    assert code == 2


def test_geodesic_subcommand(capsys, line_file):
    code, out, _ = run_cli(capsys, "geodesic", line_file, "-u", "u0", "-v", "u5")
    assert code == 0
    assert out == "u5 u4 u3 u2 u1 u0\n"


def test_verify_all_on_lattice_exits_zero(capsys, lattice_file, tmp_path):
    report_path = tmp_path / "report.json"
    code, out, _ = run_cli(capsys, "verify", lattice_file,
                           "--suite", "all", "--json", str(report_path))
    assert code == 0
    assert "overall: pass" in out
    doc = json.loads(report_path.read_text(encoding="utf-8"))
    assert doc["verdict"] == "pass"
    assert len(doc["claims"]) == 7


def test_verify_hexagon_fails(capsys, hexagon_file):
    code, out, _ = run_cli(capsys, "verify", hexagon_file, "--suite", "sc")
    assert code == 1
    assert "overall: fail" in out


def test_verify_hexagon_contractible_inconclusive(capsys, hexagon_file):
    code, out, _ = run_cli(capsys, "verify", hexagon_file, "--suite", "contractible")
    assert code == 3
    assert "overall: inconclusive" in out


def test_gen_graph_is_seeded_and_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["gen", "graph", "--vertices", "12", "--edge-prob", "0.3",
                 "-o", str(a), "--seed", "7"]) == 0
    assert main(["gen", "graph", "--vertices", "12", "--edge-prob", "0.3",
                 "-o", str(b), "--seed", "7"]) == 0
    assert a.read_bytes() == b.read_bytes()
    c = tmp_path / "c.json"
    assert main(["gen", "graph", "--vertices", "12", "--edge-prob", "0.3",
                 "-o", str(c), "--seed", "8"]) == 0
    assert a.read_bytes() != c.read_bytes()


def test_cli_outputs_are_byte_identical(capsys, lattice_file):
    first = run_cli(capsys, "verify", lattice_file, "--suite", "distance")
    second = run_cli(capsys, "verify", lattice_file, "--suite", "distance")
    assert first == second
    g1 = run_cli(capsys, "geodesic", lattice_file, "-u", "0_0", "-v", "4_4")
    g2 = run_cli(capsys, "geodesic", lattice_file, "-u", "0_0", "-v", "4_4")
    assert g1 == g2
