"""Dependency-graph export in DOT and JSON form.

Every interface becomes a cluster subgraph whose label node is the
interface's own node, so dependency edges pointing at an interface
attach to that node inside the box. An implementation's node is emitted
inside the cluster of the single interface it belongs to; each option is
enclosed by at most one box. Node fill colors encode the session status.

DOT node ids cannot contain `?`, so the ids are sanitized (`foo?`
becomes `foo_q`) while labels keep the raw spelling. The JSON form uses
raw ids throughout.
"""

from __future__ import annotations

import json

from .parser import DepsModel
from .session import NodeStatus

STATUS_COLORS: dict[NodeStatus, str] = {
    NodeStatus.ENFORCED_TRUE: "darkgreen",
    NodeStatus.ENFORCED_FALSE: "darkred",
    NodeStatus.IMPLIED_TRUE: "lightgreen",
    NodeStatus.IMPLIED_FALSE: "lightcoral",
    NodeStatus.NORMAL: "lightgray",
}


def _dot_ids(model: DepsModel) -> dict[str, str]:
    ids: dict[str, str] = {}
    taken: set[str] = set()
    for opt in model.options:
        candidate = opt[:-1] + "_q" if opt.endswith("?") else opt
        while candidate in taken:
            candidate += "_"
        ids[opt] = candidate
        taken.add(candidate)
    return ids


def to_dot(model: DepsModel, statuses: dict[str, NodeStatus]) -> str:
    ids = _dot_ids(model)

    def node_line(opt: str, indent: str, shape: str | None = None) -> str:
        color = STATUS_COLORS[statuses[opt]]
        attrs = [f'label="{opt}"']
        if shape:
            attrs.append(f"shape={shape}")
        attrs.append(f"fillcolor={color}")
        return f'{indent}"{ids[opt]}" [{", ".join(attrs)}];'

    lines = ["digraph deps {", "  node [style=filled];"]
    placed: set[str] = set()
    for number, iface in enumerate(model.ifaces()):
        lines.append(f"  subgraph cluster_{number} {{")
        if model.interface_of.get(iface.iface) is None:
            lines.append(node_line(iface.iface, "    ", shape="box"))
            placed.add(iface.iface)
        for impl in iface.impls:
            shape = "box" if model.is_interface(impl) else None
            lines.append(node_line(impl, "    ", shape=shape))
            placed.add(impl)
        lines.append("  }")
    for opt in model.options:
        if opt in placed:
            continue
        shape = "box" if model.is_interface(opt) else None
        lines.append(node_line(opt, "  ", shape=shape))
    for dep in model.deps():
        for member in dep.body:
            lines.append(f'  "{ids[dep.head]}" -> "{ids[member]}";')
    lines.append("}")
    return "".join(line + "\n" for line in lines)


def graph_payload(model: DepsModel, statuses: dict[str, NodeStatus]) -> dict:
    """Graph structure plus statuses as plain JSON-ready data."""
    return {
        "nodes": [
            {
                "id": opt,
                "status": statuses[opt].value,
                "interface": model.interface_of.get(opt),
            }
            for opt in model.options
        ],
        "clusters": [
            {"iface": s.iface, "impls": list(s.impls)} for s in model.ifaces()
        ],
        "edges": [
            {"from": dep.head, "to": member}
            for dep in model.deps()
            for member in dep.body
        ],
    }


def to_graph_json(model: DepsModel, statuses: dict[str, NodeStatus]) -> str:
    return json.dumps(graph_payload(model, statuses), indent=2) + "\n"
