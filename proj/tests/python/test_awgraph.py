import json
import os

import numpy as np
import pytest

import awgraph

DATA = os.environ.get("AWGRAPH_TEST_DATA", os.path.join(os.path.dirname(__file__), "..", "data"))


def test_family_graph():
    g = awgraph.family("cycle", 6)
    assert g.n == 6
    assert g.adjacency.shape == (6, 6)
    assert (g.adjacency == g.adjacency.T).all()
    assert g.adjacency.sum() == 12


def test_graph_from_numpy_matches_family():
    g = awgraph.family("crown", 4)
    h = awgraph.Graph(np.array(g.adjacency), "copy")
    assert h.name == "copy"
    assert awgraph.intersection_array(h) == awgraph.intersection_array(g)


def test_intersection_array_of_heawood():
    ia = awgraph.intersection_array(awgraph.load(os.path.join(DATA, "heawood.edges")))
    assert ia["diameter"] == 3
    assert ia["b"] == [3, 2, 2, 0]
    assert ia["c"] == [0, 1, 1, 3]


def test_spectrum_of_crown5():
    s = awgraph.spectrum(awgraph.family("crown", 5))
    assert s["eigenvalues"] == pytest.approx([4, 1, -1, -4])
    assert s["multiplicities"] == [1, 4, 4, 1]
    assert s["orderings"]


def test_fit_base_q_recovers_hadamard_q():
    s = awgraph.spectrum(awgraph.family("hadamard", 8))
    thetas = [s["eigenvalues"][i] for i in s["orderings"][0]]
    q = awgraph.fit_base_q(thetas)[0]
    assert q * q == pytest.approx(1 + 2 ** 0.5)


def test_analyze_cycle8():
    code, reports = awgraph.analyze(awgraph.family("cycle", 8))
    assert code == 0
    r = reports[0]
    assert r["status"] == "ok"
    assert r["thin"] is True
    assert r["D"] == 4
    assert sum(t["multiplicity"] * (t["d"] + 1) for t in r["types"]) == 8
    assert all(v["relative"] <= 1e-8 for v in r["residuals"].values())


def test_analyze_all_vertices():
    code, reports = awgraph.analyze(awgraph.family("cycle", 6), vertex=None, stage="modules")
    assert code == 0
    assert sorted({r["vertex"] for r in reports}) == list(range(6))


def test_hypercube_is_not_q_racah():
    code, reports = awgraph.analyze(awgraph.family("hypercube", 3))
    assert code == 4
    assert reports[0]["status"] == "not_q_racah"


def test_errors_carry_kind_and_exit_code():
    with pytest.raises(awgraph.AwgraphError) as info:
        awgraph.Graph(np.array([[0, 1], [0, 0]]))
    assert info.value.exit_code == 1
    with pytest.raises(awgraph.AwgraphError) as info:
        awgraph.family("cycle", 5)
    assert info.value.exit_code == 1
    prism = np.zeros((6, 6), dtype=np.int32)
    for u, v in [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]:
        prism[u, v] = prism[v, u] = 1
    with pytest.raises(awgraph.AwgraphError) as info:
        awgraph.intersection_array(awgraph.Graph(prism))
    assert info.value.kind == "NotDistanceRegular"
    assert info.value.exit_code == 2


def test_run_cli_matches_analyze():
    code, out, err = awgraph.run_cli(["analyze", "--family", "cycle", "--size", "8"])
    assert code == 0 and err == ""
    _, reports = awgraph.analyze(awgraph.family("cycle", 8))
    assert json.loads(out.splitlines()[0]) == reports[0]
