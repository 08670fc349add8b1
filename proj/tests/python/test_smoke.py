# Copyright 2026 The gkc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Smoke tests for the Python bindings."""

import itertools
import math
import os
from pathlib import Path

import pytest

import gkc

DATA = Path(os.environ.get("GKC_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))
TRIANGLE = gkc.Graph(3, [(0, 1), (0, 2), (1, 2)])


def colorings(graph, k):
    c = (k - 1).bit_length()
    out = set()
    for colors in itertools.product(range(k), repeat=graph.num_vertices):
        if all(colors[u] != colors[v] for u, v in graph.edges):
            out.add("".join(format(x, f"0{c}b") for x in colors))
    return out


def test_graph_roundtrip():
    g = gkc.Graph.load(str(DATA / "k3.adj"))
    assert g == TRIANGLE
    assert gkc.Graph.from_adjacency(g.to_adjacency()) == g
    assert gkc.Graph.from_edge_list("4\n0 1\n").num_vertices == 4


def test_errors_carry_codes():
    with pytest.raises(gkc.GkcError) as info:
        gkc.Graph.load(str(DATA / "bad.adj"))
    assert info.value.args[1] == "AsymmetricMatrix"


def test_synthesize_triangle():
    report = gkc.synthesize(TRIANGLE, 3, mode="paper")
    assert report["qubits"]["data"] == 6
    assert report["qubits"]["ancilla"] == 4
    assert report["gates"]["unlowered"]["gate_count"] <= 67


def test_marked_states_match_brute_force():
    for graph in (TRIANGLE, gkc.Graph(4, [(0, 1), (1, 2), (2, 3)]), gkc.Graph(2)):
        for k in (2, 3, 4):
            assert gkc.marked_states(graph, k) == colorings(graph, k)
            assert gkc.solutions(graph, k) == colorings(graph, k)
    assert gkc.marked_states(TRIANGLE, 3, lowered=True) == colorings(TRIANGLE, 3)


def test_run_and_closed_form():
    out = gkc.run(TRIANGLE, 3)
    report = out["report"]
    theta = math.asin(math.sqrt(6 / 64))
    assert report["t"] == gkc.optimal_iterations(64, 6) == 2
    assert abs(report["success_probability"] - math.sin(5 * theta) ** 2) < 1e-9
    assert abs(gkc.success_probability(64, 6, 2) - math.sin(5 * theta) ** 2) < 1e-12
    assert out["qasm"].startswith("OPENQASM 2.0;")


def test_routed_run():
    out = gkc.run(gkc.Graph(3, [(0, 1), (1, 2)]), 2, topology="line:6", seed=3)
    assert out["report"]["routing"]["constraints_ok"]
    assert out["report"]["solutions_match"]


def test_uncolorable():
    out = gkc.run(TRIANGLE, 2)
    assert out["report"]["M"] == 0
    assert out["qasm"] is None


def test_cost_table():
    rows = gkc.cost_table(3, 4, [3, 4])
    assert [(r["n"], r["k"], r["data_qubits"], r["baseline_data_qubits"]) for r in rows] == [
        (3, 3, 6, 9), (4, 3, 8, 12), (3, 4, 6, 12), (4, 4, 8, 16)]


def test_oracle_qasm():
    text = gkc.oracle_qasm(TRIANGLE, 3, basis="cx,u3")
    assert "u3(" in text and "measure" in text
