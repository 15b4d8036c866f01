import json
import subprocess
import sys

import pytest

from geotrans import construct as C
from geotrans.cli import main, resolve_caps
from geotrans.fileio import (
    InputError,
    dumps,
    graph_from_dict,
    group_from_dict,
    read_graph,
    read_group,
    read_labels,
    write_graph,
    write_group,
    write_labels,
)
from geotrans.graph import INF, Graph
from geotrans.permgrp import DEFAULT_CAPS


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def construct(capsys, tmp_path, family, params="", extra=()):
    prefix = str(tmp_path / family)
    code, out, _ = run(capsys, "construct", "--family", family, "--params", params, "-o", prefix, *extra)
    assert code == 0, out
    return prefix


# -- file formats


def test_graph_round_trip(tmp_path):
    g = C.kneser(6, 2)
    write_graph(tmp_path / "g.json", g, family="kneser", params=[6, 2])
    h, meta = read_graph(tmp_path / "g.json")
    assert h == g and meta == {"family": "kneser", "params": [6, 2]}


def test_group_and_label_round_trip(tmp_path):
    G = C.kneser_action(6, 2)
    write_group(tmp_path / "G.json", G.group)
    assert read_group(tmp_path / "G.json").same_as(G.group)
    write_labels(tmp_path / "l.json", G.labels)
    assert [tuple(x) for x in read_labels(tmp_path / "l.json")] == G.labels


def test_dumps_is_canonical():
    assert dumps({"b": INF, "a": (1, 2), "c": {3, 1}}) == dumps({"c": [1, 3], "a": [1, 2], "b": "inf"})
    assert json.loads(dumps({"x": INF}))["x"] == "inf"


@pytest.mark.parametrize(
    "bad",
    [{"n": -1, "edges": []}, {"n": 3}, {"n": 3, "edges": [[0, 0]]}, {"n": 2, "edges": [[0, "a"]]}],
)
def test_bad_graph_data(bad):
    with pytest.raises(InputError):
        graph_from_dict(bad)


@pytest.mark.parametrize(
    "bad", [{"degree": 3, "generators": [[0, 1]]}, {"degree": 0, "generators": []}, {"generators": []}]
)
def test_bad_group_data(bad):
    with pytest.raises(InputError):
        group_from_dict(bad)


def test_unreadable_file(tmp_path):
    (tmp_path / "x.json").write_text("{not json")
    with pytest.raises(InputError):
        read_graph(tmp_path / "x.json")
    with pytest.raises(InputError):
        read_graph(tmp_path / "missing.json")


# -- caps


def test_caps_precedence():
    assert resolve_caps(None, {}) == DEFAULT_CAPS
    env = {"GEOTRANS_CAPS": "enum=10,degree=7"}
    assert resolve_caps(None, env).enum == 10
    caps = resolve_caps("enum=20", env)
    assert (caps.enum, caps.degree) == (20, 7)
    with pytest.raises(InputError):
        resolve_caps("nonsense", {})


# -- construct


def test_construct_kneser(capsys, tmp_path):
    prefix = construct(capsys, tmp_path, "kneser", "6,2")
    g, meta = read_graph(prefix + ".graph.json")
    assert (g.n, g.valencies(), meta["family"]) == (15, [6], "kneser")
    assert read_group(prefix + ".group.json").order == 720
    assert len(read_labels(prefix + ".labels.json")) == 15


def test_construct_hamming_small(capsys, tmp_path):
    prefix = construct(capsys, tmp_path, "hamming", "2,2")
    g, _ = read_graph(prefix + ".graph.json")
    assert (g.n, g.valencies(), g.edge_count()) == (4, [2], 4)


def test_construct_coset_psl2(capsys, tmp_path):
    prefix = construct(capsys, tmp_path, "coset-psl2", "23")
    g, _ = read_graph(prefix + ".graph.json")
    assert (g.n, g.valencies()) == (253, [6])
    assert read_group(prefix + ".group.json").order == 6072


def test_construct_derived_families(capsys, tmp_path):
    base = construct(capsys, tmp_path, "kneser", "6,2")
    for family in ("clique-graph-of", "incidence-graph-of"):
        prefix = str(tmp_path / family)
        code, _, _ = run(capsys, "construct", "--family", family, "--graph", base + ".graph.json",
                         "--group", base + ".group.json", "-o", prefix)
        assert code == 0
        g, _ = read_graph(prefix + ".graph.json")
        assert g.n == (15 if family == "clique-graph-of" else 30)
        assert read_group(prefix + ".group.json").order == 720


@pytest.mark.parametrize(
    "argv",
    [
        ["--family", "kneser", "--params", "6"],
        ["--family", "kneser", "--params", "x,y"],
        ["--family", "kneser", "--params", "3,2"],
        ["--family", "clique-graph-of"],
        ["--family", "coset-psl2", "--params", "7"],
    ],
)
def test_construct_input_errors(capsys, tmp_path, argv):
    code, _, err = run(capsys, "construct", *argv, "-o", str(tmp_path / "x"))
    assert code == 2 and err.startswith("error:")


# -- report


def report(capsys, prefix, *extra, group=True):
    argv = ["report", "--graph", prefix + ".graph.json"]
    if group:
        argv += ["--group", prefix + ".group.json"]
    code, out, err = run(capsys, *argv, *extra)
    return code, (json.loads(out) if out else None), err


def test_report_kneser(capsys, tmp_path):
    prefix = construct(capsys, tmp_path, "kneser", "6,2")
    code, rep, _ = report(capsys, prefix)
    assert code == 0 and rep["schema"] == 1
    assert rep["f_membership"] == [3, 2]
    assert rep["transitivity"]["s_geodesic_transitive"] == 2
    assert rep["transitivity"]["s_arc_transitive"] == 1
    assert (rep["vertex_type"]["type"], rep["clique_type"]["type"]) == ("AS", "AS")
    assert rep["group"]["order"] == 720


def test_report_without_group_uses_aut(capsys, tmp_path):
    prefix = construct(capsys, tmp_path, "kneser", "6,2")
    code, rep, _ = report(capsys, prefix, group=False)
    assert code == 0 and rep["group"]["order"] == 720
    assert rep["provenance"]["group_source"] == "automorphism_group"


def test_report_two_coordinate_witness(capsys, tmp_path):
    prefix = construct(capsys, tmp_path, "two-coordinate", "3,3")
    code, rep, _ = report(capsys, prefix)
    assert code == 0
    assert rep["transitivity"]["s_geodesic_transitive"] == 1
    a, b = rep["transitivity"]["witnesses"]["s_geodesic"]
    assert len(a) == len(b) == 3 and a[0] == b[0]


def test_report_k1(capsys, tmp_path):
    write_graph(tmp_path / "k1.graph.json", Graph(1))
    code, rep, _ = report(capsys, str(tmp_path / "k1"), group=False)
    assert code == 0
    assert rep["graph"]["n"] == 1 and rep["graph"]["girth"] == "inf"
    assert rep["f_membership"] is None


def test_report_is_deterministic(capsys, tmp_path):
    prefix = construct(capsys, tmp_path, "hamming", "2,3")
    first = run(capsys, "report", "--graph", prefix + ".graph.json")[1]
    second = run(capsys, "report", "--graph", prefix + ".graph.json")[1]
    assert first == second


def test_report_cap_gives_partial_output(capsys, tmp_path):
    prefix = construct(capsys, tmp_path, "hamming", "3,5")
    code, out, _ = run(capsys, "--caps", "degree=50", "report", "--graph", prefix + ".graph.json")
    rep = json.loads(out)
    assert code == 3 and rep["error"]["kind"] == "CapExceeded"
    assert rep["graph"]["n"] == 125


def test_report_rejects_foreign_group(capsys, tmp_path):
    prefix = construct(capsys, tmp_path, "kneser", "6,2")
    write_group(tmp_path / "bad.group.json", C.sym(15))
    code, _, err = run(capsys, "report", "--graph", prefix + ".graph.json", "--group", str(tmp_path / "bad.group.json"))
    assert code == 2 and "automorphism" in err


def test_report_input_errors(capsys, tmp_path):
    (tmp_path / "junk.graph.json").write_text("[]")
    code, _, _ = run(capsys, "report", "--graph", str(tmp_path / "junk.graph.json"))
    assert code == 2
    prefix = construct(capsys, tmp_path, "kneser", "6,2")
    code, _, _ = run(capsys, "report", "--graph", prefix + ".graph.json", "--max-s", "0")
    assert code == 2


# -- verify-paper


def test_verify_case_pass(capsys, tmp_path):
    code, out, _ = run(capsys, "verify-paper", "--case", "kneser62", "-o", str(tmp_path / "r.json"))
    assert code == 0 and "PASS" in out
    data = json.loads((tmp_path / "r.json").read_text())
    assert data["cases"][0]["passed"]


def test_verify_two_coordinate_case(capsys):
    assert run(capsys, "verify-paper", "--case", "lemma43")[0] == 0


def test_verify_unknown_case(capsys):
    assert run(capsys, "verify-paper", "--case", "nonexistent")[0] == 2


def test_verify_failing_case_exits_one(capsys):
    code, out, _ = run(capsys, "verify-paper", "--case", "foster")
    assert code == 1 and "FAIL" in out


def test_console_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "geotrans.cli", "construct", "--family", "kneser", "--params", "5,2",
         "-o", str(tmp_path / "p")],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["n"] == 10
