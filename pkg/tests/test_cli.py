import json

import pytest

from rankmono.cli import main


@pytest.fixture
def run(capsys):
    def _run(*argv):
        code = main(list(argv))
        out = capsys.readouterr()
        return code, out.out, out.err
    return _run


@pytest.fixture
def star(tmp_path):
    p = tmp_path / "star.txt"
    p.write_text("0 1\n0 2\n0 3\n")
    return str(p)


def test_centrality_star_seeley(run, star):
    code, out, _ = run("centrality", "--graph", star, "--measure", "seeley")
    assert code == 0 and out.splitlines() == ["0\t1/2", "1\t1/6", "2\t1/6", "3\t1/6"]


def test_centrality_k2_katz(run, tmp_path):
    p = tmp_path / "k2.txt"
    p.write_text("0 1\n")
    code, out, _ = run("centrality", "--graph", str(p), "--measure", "katz", "--alpha", "1/2")
    assert out.splitlines() == ["0\t2", "1\t2"]


def test_centrality_eigen_small(run, tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("0 2\n0 3\n0 4\n2 1\n")
    code, out, _ = run("centrality", "--graph", str(p), "--measure", "eigenvector", "--normalization", "l1")
    assert float(out.splitlines()[0].split("\t")[1]) == pytest.approx(0.30656, abs=1e-4)


def test_audit_geometric_family(run, tmp_path):
    p = tmp_path / "geo.txt"
    code, out, _ = run("family", "geometric", "--params", "j=10,k=36,r=2")
    p.write_text(out)
    code, out, _ = run("audit", "--graph", str(p), "--edge", "0,1", "--measure", "closeness", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["class"] == "bottom"
    code, _, _ = run("audit", "--graph", str(p), "--edge", "0,1", "--measure", "closeness", "--fail-on-violation")
    assert code == 1


def test_audit_betweenness_family_vertex_zero_flat(run, tmp_path):
    p = tmp_path / "b.txt"
    p.write_text(run("family", "betweenness", "--params", "h=2,j=3,k=2")[1])
    code, out, _ = run("audit", "--graph", str(p), "--edge", "0,1", "--measure", "betweenness")
    assert out.splitlines()[1].split("\t")[2] == "0"


def test_audit_tree_seeley_exits_zero(run, star):
    code, out, _ = run("audit", "--graph", star, "--edge", "1,2", "--measure", "seeley", "--fail-on-violation")
    assert code == 0 and out.splitlines()[1].split("\t")[-1] == "none"


@pytest.mark.parametrize("argv", [
    ("audit", "--graph", "STAR", "--edge", "0,1", "--measure", "seeley"),
    ("centrality", "--graph", "BAD", "--measure", "seeley"),
    ("centrality", "--graph", "STAR", "--measure", "nonsense"),
    ("reproduce", "no-such-claim"),
    ("sturm", "--poly=1,-2,1", "--lo", "0", "--hi", "2"),
])
def test_usage_and_parse_errors_exit_2(run, star, tmp_path, argv):
    bad = tmp_path / "bad.txt"
    bad.write_text("0 x\n")
    argv = [star if a == "STAR" else str(bad) if a == "BAD" else a for a in argv]
    assert run(*argv)[0] == 2


def test_argparse_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["centrality"])
    assert exc.value.code == 2


def test_sturm(run):
    code, out, _ = run("sturm", "--poly=-2,0,1", "--lo", "0", "--hi", "2", "--format", "json")
    assert json.loads(out)["roots"] == 1
    code, out, _ = run("sturm", "--poly=1,-2,1", "--lo", "0", "--hi", "2", "--distinct")
    assert out.split("\t")[-1].strip() == "1"


def test_fibration_round_trip(run, tmp_path):
    g, c, b = tmp_path / "g.txt", tmp_path / "c.tsv", tmp_path / "b.tsv"
    g.write_text(run("family", "pagerank", "--params", "k=5", "--coloring", str(c), "--base", str(b))[1])
    code, out, _ = run("fibration", "--graph", str(g), "--coloring", str(c), "--base", str(b), "--normalize")
    assert code == 0 and out.strip() == "valid"
    b.write_text("0 1 1\n")
    code, out, _ = run("fibration", "--graph", str(g), "--coloring", str(c), "--base", str(b), "--normalize")
    assert code == 1 and out.startswith("invalid")


def test_scan_is_byte_identical_across_runs(run, tmp_path):
    p = tmp_path / "geo.txt"
    p.write_text(run("family", "geometric", "--params", "j=3,k=4,r=1")[1])
    argv = ("scan", "--graph", str(p), "--measure", "closeness", "--samples", "15", "--seed", "3")
    first, second = run(*argv), run(*argv)
    assert first == second and first[1].startswith("edge\t")


def test_reproduce_single_claim(run):
    code, out, _ = run("reproduce", "eigen-small")
    assert code == 0 and out.startswith("[PASS] eigen-small")
