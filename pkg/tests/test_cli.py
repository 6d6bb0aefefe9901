import json
import os
import random

import pytest

from sna import load_graph
from sna.cli import SUBCOMMANDS, run


@pytest.fixture(scope="module")
def graph_file(tmp_path_factory):
    rng = random.Random(4)
    path = tmp_path_factory.mktemp("g") / "g.txt"
    ids = rng.sample(range(10, 5000), 300)
    arcs = set()
    while len(arcs) < 1500:
        a, b = rng.choice(ids), rng.choice(ids[:120])
        if a != b:
            arcs.add((a, b))
    path.write_text("# synthetic\n# FromNodeId\tToNodeId\n" +
                    "".join(f"{a}\t{b}\n" for a, b in sorted(arcs)))
    return path


def call(capsys, *argv):
    code = run([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


ARGS = {
    "neighbors": ["--node", "NODE"],
    "domain": ["--node", "NODE"],
}


def argv_for(cmd, node):
    return [cmd] + [str(node) if a == "NODE" else a for a in ARGS.get(cmd, [])]


def test_stats_json(capsys, tmp_path):
    p = tmp_path / "t.txt"
    p.write_text("0 1\n1 2\n2 0\n2 2\n")
    code, out, _ = call(capsys, "stats", p)
    data = json.loads(out)
    assert code == 0
    assert data["n"] == 3 and data["m"] == 3
    assert data["average_degree"] == 2.0 and data["density"] == 0.5
    assert data["dropped_lines"] == 1


def test_degree_top(capsys, tmp_path):
    p = tmp_path / "t.txt"
    p.write_text("1 9\n2 9\n3 9\n9 1\n")
    code, out, _ = call(capsys, "degree", "--mode", "in", "--top", "1", p)
    assert code == 0
    assert out.splitlines() == ["external_id,score_raw,score_normalized", "9,3,1"]


def test_missing_file_exit_code(capsys):
    code, out, err = call(capsys, "stats", "missing.txt")
    assert code == 2 and out == "" and "file not found" in err


def test_usage_errors(capsys, graph_file):
    with pytest.raises(SystemExit) as exc:
        run(["stats", "--bogus", str(graph_file)])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        run(["frobnicate", str(graph_file)])
    assert exc.value.code == 1


def test_malformed_input_exit_code(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("0 1\n0 one\n")
    code, _, err = call(capsys, "stats", p)
    assert code == 2 and "line 2" in err
    code, out, _ = call(capsys, "stats", "--lenient", p)
    assert code == 0 and json.loads(out)["m"] == 1


def test_computation_error_exit_code_and_no_partial_file(capsys, graph_file, tmp_path):
    out_path = tmp_path / "core.txt"
    code, _, err = call(capsys, "kcore", "--k", "9999", "--out", out_path, graph_file)
    assert code == 3 and "empty" in err
    assert not out_path.exists() and list(tmp_path.iterdir()) == []
    code, _, err = call(capsys, "pagerank", "--tol", "1e-30", "--max-iter", "3", graph_file)
    assert code == 3 and "converge" in err


def test_unknown_node(capsys, graph_file):
    code, _, err = call(capsys, "neighbors", "--node", "1", graph_file)
    assert code == 2 and "does not occur" in err


def test_every_subcommand_is_byte_deterministic(capsys, graph_file, tmp_path):
    node = load_graph(graph_file).external(0)
    for cmd in SUBCOMMANDS:
        outputs = []
        for threads in ("1", "8", "1"):
            target = tmp_path / f"{cmd}-{threads}-{len(outputs)}.out"
            code, _, err = call(capsys, *argv_for(cmd, node), "--threads", threads,
                                "--out", target, graph_file)
            assert code == 0, (cmd, err)
            outputs.append(target.read_bytes())
        assert outputs[0] == outputs[1] == outputs[2], cmd
        assert b"\r" not in outputs[0]


def test_export_round_trip(capsys, graph_file, tmp_path):
    target = tmp_path / "export.txt"
    assert call(capsys, "export", "--out", target, graph_file)[0] == 0
    a, b = load_graph(graph_file), load_graph(target)
    assert a.id_map.internal_to_external.tolist() == b.id_map.internal_to_external.tolist()
    assert sorted(a.external_arcs()) == sorted(b.external_arcs())


def test_kcore_extraction_writes_edge_list(capsys, graph_file):
    code, out, _ = call(capsys, "kcore", "--format", "json", graph_file)
    summary = json.loads(out)
    code, out, _ = call(capsys, "kcore", "--k", "max", graph_file)
    core = load_graph(out)
    assert core.n == summary["max_core_size"]
    assert sorted(core.id_map.internal_to_external.tolist()) == sorted(summary["max_core_members"])
    assert core.degree("all").min() >= summary["max_k"] == summary["max_core_min_degree"]


def test_diameter_json(capsys, tmp_path):
    p = tmp_path / "p.txt"
    p.write_text("7 8\n8 9\n")
    code, out, _ = call(capsys, "diameter", p)
    assert json.loads(out) == {"interpretation": "directed", "length": 2, "source": 7, "target": 9,
                               "path": [7, 8, 9], "mean_geodesic": 1.33333, "finite_pairs": 3}


def test_neighbors_csv(capsys, tmp_path):
    p = tmp_path / "p.txt"
    p.write_text("7 8\n8 9\n7 10\n")
    code, out, _ = call(capsys, "neighbors", "--node", "7", p)
    assert out == "distance,count\n1,2\n2,1\n"
    code, out, _ = call(capsys, "neighbors", "--node", "7", "--nodes", p)
    assert out == "distance,count,nodes\n1,2,8 10\n2,1,9\n"


def test_brokerage_with_partition_file(capsys, tmp_path):
    g = tmp_path / "g.txt"
    g.write_text("1 2\n2 3\n")
    part = tmp_path / "part.csv"
    part.write_text("external_id,community\n1,0\n2,0\n3,1\n")
    code, out, _ = call(capsys, "brokerage", "--partition", part, g)
    assert out.splitlines()[1] == "2,0,0,1,0,0,1"
    code, out, _ = call(capsys, "brokerage", "--partition", part, "--format", "json", g)
    data = json.loads(out)
    assert data["persons_with_roles"] == 1 and data["argmax_node"] == 2
    part.write_text("1,0\n2,0\n")
    code, _, err = call(capsys, "brokerage", "--partition", part, g)
    assert code == 2 and "no community for node 3" in err


def test_contacts_matches_individual_subcommands(capsys, graph_file):
    code, out, _ = call(capsys, "contacts", "--top", "3", "--format", "json", graph_file)
    report = json.loads(out)["nodes"]
    _, pr, _ = call(capsys, "pagerank", "--format", "json", graph_file)
    pr = {r["external_id"]: r["pagerank"] for r in json.loads(pr)["scores"]}
    _, bt, _ = call(capsys, "betweenness", graph_file)
    bt = {int(l.split(",")[0]): l.split(",")[1] for l in bt.splitlines()[1:]}
    _, core, _ = call(capsys, "kcore", graph_file)
    core = dict(tuple(map(int, l.split(","))) for l in core.splitlines()[1:])
    _, br, _ = call(capsys, "brokerage", graph_file)
    br = {int(l.split(",")[0]): int(l.split(",")[-1]) for l in br.splitlines()[1:]}
    for rec in report:
        e = rec["external_id"]
        assert rec["know_how"]["pagerank"] == pr[e]
        assert f"{rec['know_how']['betweenness']:.6g}" == f"{float(bt[e]):.6g}"
        assert rec["know_how"]["coreness"] == core[e]
        assert rec["know_how"]["brokerage_total"] == br[e]
        _, dom, _ = call(capsys, "domain", "--node", e, graph_file)
        assert json.loads(dom)["domain_size"] == rec["know_how"]["influence_domain"]


@pytest.mark.parametrize("cmd", ["distribution", "neighbors", "communities", "pagerank", "kcore"])
@pytest.mark.parametrize("ext", ["svg", "png"])
def test_figures_written_and_reproducible(capsys, graph_file, tmp_path, cmd, ext):
    node = load_graph(graph_file).external(0)
    fig = tmp_path / f"fig.{ext}"
    code, out, err = call(capsys, *argv_for(cmd, node), "--figure", fig, graph_file)
    assert code == 0, err
    first = fig.read_bytes()
    assert len(first) > 1000
    call(capsys, *argv_for(cmd, node), "--figure", fig, graph_file)
    assert fig.read_bytes() == first
