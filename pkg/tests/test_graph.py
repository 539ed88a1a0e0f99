from __future__ import annotations

import json

import pytest

from configforge import (
    NodeStatus,
    Session,
    graph_payload,
    parse_deps,
    to_dot,
    to_graph_json,
)


def _normal(model):
    return {opt: NodeStatus.NORMAL for opt in model.options}


def test_dot_counts_fig1(fig1_model):
    dot = to_dot(fig1_model, _normal(fig1_model))
    assert dot.startswith("digraph deps {\n")
    assert dot.endswith("}\n")
    assert dot.count("subgraph cluster_") == 5
    assert dot.count(" -> ") == 11
    assert dot.count("label=") == 18
    assert dot.count("fillcolor=lightgray") == 18


def test_dot_structure_fig1(fig1_model):
    dot = to_dot(fig1_model, _normal(fig1_model))
    lines = dot.splitlines()
    assert lines[1] == "  node [style=filled];"
    start = lines.index("  subgraph cluster_0 {")
    end = lines.index("  }", start)
    cluster0 = lines[start + 1 : end]
    assert cluster0 == [
        '    "clock" [label="clock", shape=box, fillcolor=lightgray];',
        '    "clock_llsc" [label="clock_llsc", fillcolor=lightgray];',
        '    "clock_spinlock" [label="clock_spinlock", fillcolor=lightgray];',
    ]
    assert '  "sched" [label="sched", fillcolor=lightgray];' in lines
    assert '  "sched" -> "clock";' in lines
    assert '  "sched" -> "ctxlist";' in lines
    assert '  "llsc_arm" -> "arm";' in lines


def test_dot_status_colors(fig1_model):
    session = Session(fig1_model)
    session.click("sched")
    session.click("arm")
    dot = to_dot(fig1_model, session.statuses())
    assert '"sched" [label="sched", fillcolor=darkgreen];' in dot
    assert '"llsc" [label="llsc", shape=box, fillcolor=lightgreen];' in dot
    assert '"powerpc" [label="powerpc", fillcolor=lightcoral];' in dot
    assert '"spinlock" [label="spinlock", shape=box, fillcolor=lightgray];' in dot
    session.click("spinlock")
    session.click("spinlock")
    dot = to_dot(fig1_model, session.statuses())
    assert '"spinlock" [label="spinlock", shape=box, fillcolor=darkred];' in dot


def test_dot_sanitizes_question_mark(ipi_model):
    dot = to_dot(ipi_model, _normal(ipi_model))
    assert '"optimize_send_ipi_q" [label="optimize_send_ipi?", shape=box' in dot
    assert '"sched" -> "optimize_send_ipi_q";' in dot
    for line in dot.splitlines():
        name = line.strip().split(" ")[0]
        assert "?" not in name


def test_dot_sanitization_avoids_collisions():
    model = parse_deps("a -> foo?\na -> foo_q\n")
    dot = to_dot(model, _normal(model))
    assert '"foo_q" [label="foo?"' in dot
    assert '"foo_q_" [label="foo_q"' in dot


def test_dot_interface_inside_parent_cluster_keeps_box():
    model = parse_deps("top : mid | leaf\nmid : a | b\n")
    dot = to_dot(model, _normal(model))
    lines = dot.splitlines()
    start = lines.index("  subgraph cluster_0 {")
    end = lines.index("  }", start)
    cluster0 = lines[start + 1 : end]
    assert '    "mid" [label="mid", shape=box, fillcolor=lightgray];' in cluster0
    start1 = lines.index("  subgraph cluster_1 {", end)
    end1 = lines.index("  }", start1)
    cluster1 = lines[start1 + 1 : end1]
    assert all('"mid"' not in line for line in cluster1)
    assert '    "a" [label="a", fillcolor=lightgray];' in cluster1


def test_dot_empty_model():
    model = parse_deps("")
    assert to_dot(model, {}) == "digraph deps {\n  node [style=filled];\n}\n"


def test_dot_deterministic(fig1_model):
    session = Session(fig1_model)
    session.click("sched")
    assert to_dot(fig1_model, session.statuses()) == to_dot(
        fig1_model, session.statuses()
    )


def test_dot_parses_with_pydot(fig1_model):
    pydot = pytest.importorskip("pydot")
    dot = to_dot(fig1_model, _normal(fig1_model))
    graphs = pydot.graph_from_dot_data(dot)
    assert graphs and len(graphs) == 1


def test_graph_json_uses_raw_ids(ipi_model):
    payload = graph_payload(ipi_model, _normal(ipi_model))
    ids = [node["id"] for node in payload["nodes"]]
    assert ids == [
        "sched",
        "optimize_send_ipi?",
        "optimize_send_ipi_yes",
        "optimize_send_ipi_no",
    ]
    assert payload["clusters"] == [
        {
            "iface": "optimize_send_ipi?",
            "impls": ["optimize_send_ipi_yes", "optimize_send_ipi_no"],
        }
    ]
    assert payload["edges"] == [{"from": "sched", "to": "optimize_send_ipi?"}]


def test_graph_json_statuses_round_trip(fig1_model):
    session = Session(fig1_model)
    session.click("sched")
    session.click("arm")
    payload = json.loads(to_graph_json(fig1_model, session.statuses()))
    by_id = {node["id"]: node["status"] for node in payload["nodes"]}
    assert by_id["sched"] == "enforced_true"
    assert by_id["llsc"] == "implied_true"
    assert by_id["powerpc"] == "implied_false"
    assert by_id["spinlock"] == "normal"
    assert len(payload["nodes"]) == 18
    assert len(payload["clusters"]) == 5
    assert len(payload["edges"]) == 11


def test_graph_json_interface_field(fig1_model):
    payload = graph_payload(fig1_model, _normal(fig1_model))
    by_id = {node["id"]: node["interface"] for node in payload["nodes"]}
    assert by_id["clock_llsc"] == "clock"
    assert by_id["arm"] == "plateform"
    assert by_id["sched"] is None
    assert by_id["clock"] is None


def test_graph_json_text_form(fig1_model):
    text = to_graph_json(fig1_model, _normal(fig1_model))
    assert text.endswith("\n")
    assert json.loads(text) == graph_payload(fig1_model, _normal(fig1_model))
