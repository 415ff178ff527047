import json

import pytest

from rotdist import from_ordering, generate, rotate
from rotdist.cli import main
from rotdist.elimtree import save_tree
from rotdist.graphs import save_graph


@pytest.fixture
def p3(tmp_path):
    g = generate("path", 3)
    paths = {}
    paths["graph"] = str(tmp_path / "g.json")
    save_graph(g, paths["graph"])
    chain = from_ordering(g, [0, 1, 2])
    rev = from_ordering(g, [2, 1, 0])
    paths["chain"] = str(tmp_path / "chain.json")
    paths["rev"] = str(tmp_path / "rev.json")
    save_tree(chain, paths["chain"])
    save_tree(rev, paths["rev"])
    return paths


def test_gen_and_validate(tmp_path, capsys):
    gpath = str(tmp_path / "g.json")
    assert main(["gen", "--family", "path", "-n", "5", "-o", gpath]) == 0
    tpath = str(tmp_path / "t.json")
    g = generate("path", 5)
    save_tree(from_ordering(g, [2, 1, 3, 0, 4]), tpath)
    assert main(["validate", "-g", gpath, "-s", tpath]) == 0
    out = capsys.readouterr().out
    assert "valid" in out


def test_gen_to_stdout(capsys):
    assert main(["gen", "--family", "star", "-n", "4"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["n"] == 4 and len(d["edges"]) == 3


def test_validate_rejects_bad_tree(tmp_path, capsys):
    gpath, tpath = str(tmp_path / "g.json"), str(tmp_path / "t.json")
    save_graph(generate("path", 3), gpath)
    with open(tpath, "w") as fh:
        json.dump({"parent": [-1, 0, 0]}, fh)
    assert main(["validate", "-g", gpath, "-s", tpath]) == 2
    assert "INVALID" in capsys.readouterr().out


def test_distance_yes_and_no(p3, capsys):
    rc = main(["distance", "-g", p3["graph"], "-s", p3["chain"], "-t", p3["rev"],
               "-k", "2", "--method", "fpt"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "verdict: YES" in out
    assert "length: 2" in out
    assert "witness: 0->1 1->2" in out
    rc = main(["distance", "-g", p3["graph"], "-s", p3["chain"], "-t", p3["rev"],
               "-k", "1", "--method", "fpt"])
    out = capsys.readouterr().out
    assert rc == 1
    assert "verdict: NO" in out


def test_distance_methods_agree(p3, capsys):
    outs = {}
    for method in ("fpt", "bfs", "auto"):
        rc = main(["distance", "-g", p3["graph"], "-s", p3["chain"],
                   "-t", p3["rev"], "-k", "2", "--method", method])
        assert rc == 0
        outs[method] = capsys.readouterr().out
    assert all("verdict: YES" in o for o in outs.values())
    assert "method: bfs" in outs["auto"]  # n <= 8 picks the oracle


def test_distance_same_tree(p3, capsys):
    rc = main(["distance", "-g", p3["graph"], "-s", p3["chain"], "-t", p3["chain"],
               "-k", "1"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "length: 0" in out


def test_distance_witness_round_trip(p3, tmp_path, capsys):
    wpath = str(tmp_path / "w.json")
    assert main(["distance", "-g", p3["graph"], "-s", p3["chain"], "-t", p3["rev"],
                 "-k", "3", "--method", "fpt", "--witness-out", wpath]) == 0
    capsys.readouterr()
    rc = main(["distance", "-g", p3["graph"], "-s", p3["chain"], "-t", p3["rev"],
               "--replay", wpath])
    out = capsys.readouterr().out
    assert rc == 0
    assert "verdict: YES" in out and "method: replay" in out
    # replaying onto the wrong target is a NO
    rc = main(["distance", "-g", p3["graph"], "-s", p3["chain"], "-t", p3["chain"],
               "--replay", wpath])
    assert rc == 1
    capsys.readouterr()


def test_distance_explain_json(p3, capsys):
    rc = main(["distance", "-g", p3["graph"], "-s", p3["chain"], "-t", p3["rev"],
               "-k", "2", "--method", "fpt", "--explain"])
    assert rc == 0
    d = json.loads(capsys.readouterr().out)
    assert d["verdict"] == "YES"
    assert d["marked"] == [0, 1, 2]
    assert d["method"] == "fpt"


def test_distance_requires_k(p3, capsys):
    assert main(["distance", "-g", p3["graph"], "-s", p3["chain"],
                 "-t", p3["rev"]]) == 2
    assert "INVALID_INPUT" in capsys.readouterr().err


def test_distance_invalid_tree_exit_code(p3, tmp_path, capsys):
    bad = str(tmp_path / "bad.json")
    with open(bad, "w") as fh:
        json.dump({"parent": [-1, 0, 0]}, fh)
    rc = main(["distance", "-g", p3["graph"], "-s", bad, "-t", p3["rev"], "-k", "1"])
    assert rc == 2
    assert "INVALID_INPUT" in capsys.readouterr().err


def test_disconnected_graph_exit_code(tmp_path, capsys):
    gpath = str(tmp_path / "g.json")
    with open(gpath, "w") as fh:
        json.dump({"n": 4, "edges": [[0, 1], [2, 3]]}, fh)
    tpath = str(tmp_path / "t.json")
    with open(tpath, "w") as fh:
        json.dump({"parent": [-1, 0, 1, 2]}, fh)
    rc = main(["distance", "-g", gpath, "-s", tpath, "-t", tpath, "-k", "1"])
    assert rc == 3
    assert "DISCONNECTED_GRAPH" in capsys.readouterr().err


def test_rotate_command(p3, tmp_path, capsys):
    out_path = str(tmp_path / "out.json")
    rc = main(["rotate", "-g", p3["graph"], "-s", p3["chain"],
               "-e", "0->1", "-e", "1->2", "-o", out_path])
    assert rc == 0
    printed = json.loads(capsys.readouterr().out)
    assert printed["parent"] == [1, 2, -1]
    with open(out_path) as fh:
        assert json.load(fh)["parent"] == [1, 2, -1]


def test_rotate_bad_edge(p3, capsys):
    rc = main(["rotate", "-g", p3["graph"], "-s", p3["chain"], "-e", "2->0"])
    assert rc == 2
    capsys.readouterr()


def test_rotate_needs_edges(p3, capsys):
    assert main(["rotate", "-g", p3["graph"], "-s", p3["chain"]]) == 2
    capsys.readouterr()


def test_enumerate_with_exports(p3, tmp_path, capsys):
    dot = str(tmp_path / "fg.dot")
    js = str(tmp_path / "fg.json")
    rc = main(["enumerate", "-g", p3["graph"], "--out-dot", dot, "--out-json", js])
    assert rc == 0
    assert "5 elimination trees" in capsys.readouterr().out
    assert "graph rotations {" in open(dot).read()
    assert len(json.load(open(js))["nodes"]) == 5


def test_enumerate_cap_exit_code(tmp_path, capsys):
    gpath = str(tmp_path / "g.json")
    save_graph(generate("path", 11), gpath)
    assert main(["enumerate", "-g", gpath]) == 4
    assert "INSTANCE_TOO_LARGE" in capsys.readouterr().err


def test_diameter_command(p3, capsys):
    assert main(["diameter", "-g", p3["graph"]]) == 0
    assert capsys.readouterr().out.strip() == "2"


def test_bench_csv(capsys):
    rc = main(["bench", "--family", "star", "--sizes", "10,20", "-k", "1",
               "--reps", "2", "--seed", "7"])
    assert rc == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "family,n,k,reps,median_ms"
    assert len(lines) == 3
    assert lines[1].startswith("star,10,1,2,")
    assert lines[2].startswith("star,20,1,2,")


def test_explain_command(p3, tmp_path, capsys):
    out_path = str(tmp_path / "dump.json")
    rc = main(["explain", "-g", p3["graph"], "-s", p3["chain"], "-t", p3["rev"],
               "-k", "2", "-o", out_path])
    assert rc == 0
    with open(out_path) as fh:
        d = json.load(fh)
    assert d["verdict"] == "YES"
    assert d["children_bad"] == [0, 1, 2]
    assert d["search"]["nodes_expanded"] > 0
    # a NO instance exits 1 but still dumps
    rc = main(["explain", "-g", p3["graph"], "-s", p3["chain"], "-t", p3["rev"],
               "-k", "1"])
    assert rc == 1
    assert json.loads(capsys.readouterr().out)["verdict"] == "NO"


def test_malformed_json_file(tmp_path, capsys):
    gpath = str(tmp_path / "g.json")
    with open(gpath, "w") as fh:
        fh.write("{not json")
    assert main(["diameter", "-g", gpath]) == 2
    assert "INVALID_INPUT" in capsys.readouterr().err


def test_missing_file(capsys):
    assert main(["diameter", "-g", "/no/such/file.json"]) == 2
    capsys.readouterr()
