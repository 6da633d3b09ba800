"""Serializing a ranked corpus graph for external renderers."""

from __future__ import annotations

import json
import xml.etree.ElementTree as ET
from typing import Mapping

from .textgraph import CorpusGraph

FORMATS = ("dot", "graphml", "json")


def keyword_flags(scores: Mapping[str, float], k: int) -> dict[str, bool]:
    """Mark the top ``min(k, |V|)`` vertices by score (ties: label order)."""
    ranked = sorted(scores, key=lambda v: (-scores[v], v))
    top = set(ranked[:k])
    return {v: v in top for v in scores}


def _dot_id(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(
    graph: CorpusGraph,
    scores: Mapping[str, float],
    flags: Mapping[str, bool],
    display: Mapping[str, str] | None = None,
) -> str:
    display = display or {}
    lines = ["digraph corpus {"]
    for v in sorted(graph.vertices):
        attrs = [
            f"label={_dot_id(display.get(v, v))}",
            f'centrality="{scores.get(v, 0.0)!r}"',
            f'is_keyword="{str(flags.get(v, False)).lower()}"',
        ]
        if flags.get(v):
            attrs.append('color="red"')
        lines.append(f"  {_dot_id(v)} [{', '.join(attrs)}];")
    for (s, t), w in sorted(graph.edges.items()):
        lines.append(f"  {_dot_id(s)} -> {_dot_id(t)} [weight={w}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_graphml(
    graph: CorpusGraph,
    scores: Mapping[str, float],
    flags: Mapping[str, bool],
    display: Mapping[str, str] | None = None,
) -> str:
    display = display or {}
    ns = "http://graphml.graphdrawing.org/xmlns"
    root = ET.Element("graphml", xmlns=ns)
    keys = [
        ("label", "node", "string"),
        ("centrality", "node", "double"),
        ("is_keyword", "node", "boolean"),
        ("weight", "edge", "int"),
    ]
    for name, domain, typ in keys:
        ET.SubElement(root, "key", {"id": name, "for": domain, "attr.name": name, "attr.type": typ})
    g = ET.SubElement(root, "graph", id="corpus", edgedefault="directed")
    for v in sorted(graph.vertices):
        node = ET.SubElement(g, "node", id=v)
        ET.SubElement(node, "data", key="label").text = display.get(v, v)
        ET.SubElement(node, "data", key="centrality").text = repr(float(scores.get(v, 0.0)))
        ET.SubElement(node, "data", key="is_keyword").text = str(flags.get(v, False)).lower()
    for (s, t), w in sorted(graph.edges.items()):
        edge = ET.SubElement(g, "edge", source=s, target=t)
        ET.SubElement(edge, "data", key="weight").text = str(w)
    ET.indent(root)
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(root, encoding="unicode") + "\n"


def to_json(
    graph: CorpusGraph,
    scores: Mapping[str, float],
    flags: Mapping[str, bool],
    display: Mapping[str, str] | None = None,
) -> str:
    display = display or {}
    obj = {
        "directed": True,
        "vertices": [
            {
                "label": v,
                "surface": display.get(v, v),
                "centrality": scores.get(v, 0.0),
                "is_keyword": bool(flags.get(v, False)),
            }
            for v in sorted(graph.vertices)
        ],
        "edges": [{"src": s, "dst": t, "weight": w} for (s, t), w in sorted(graph.edges.items())],
    }
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def from_json(text: str) -> CorpusGraph:
    obj = json.loads(text)
    g = CorpusGraph()
    for v in obj["vertices"]:
        g.add_vertex(v["label"])
    for e in obj["edges"]:
        g.add_edge(e["src"], e["dst"], int(e["weight"]))
    return g


WRITERS = {"dot": to_dot, "graphml": to_graphml, "json": to_json}
