"""GraphML, DOT and CSV writers for the graphs and plot data."""

from __future__ import annotations

import csv
import io
import xml.etree.ElementTree as ET
from typing import Iterable, Sequence

from .bigraph import BipartiteGraph, author_degrees, paper_degrees
from .coauthor import CoauthorGraph, coauthor_degrees, component_labels
from .powerfit import FrequencyDistribution, PowerLawFit

GRAPHML_NS = "http://graphml.graphdrawing.org/xmlns"
_XSI = "http://www.w3.org/2001/XMLSchema-instance"
_SCHEMA = "http://graphml.graphdrawing.org/xmlns http://graphml.graphdrawing.org/xmlns/1.0/graphml.xsd"


def _graphml(keys: Sequence[tuple[str, str, str, str]], nodes, edges) -> str:
    """Serialize a GraphML document.

    ``keys`` holds (id, for, attr.name, attr.type); ``nodes`` yields
    (node id, {key id: value}); ``edges`` yields (source, target, {key id: value}).
    """
    root = ET.Element("graphml", {"xmlns": GRAPHML_NS, "xmlns:xsi": _XSI, "xsi:schemaLocation": _SCHEMA})
    for key_id, domain, name, typ in keys:
        ET.SubElement(root, "key", {"id": key_id, "for": domain, "attr.name": name, "attr.type": typ})
    graph = ET.SubElement(root, "graph", {"id": "G", "edgedefault": "undirected"})
    for node_id, data in nodes:
        node = ET.SubElement(graph, "node", {"id": node_id})
        for key_id, value in data.items():
            ET.SubElement(node, "data", {"key": key_id}).text = str(value)
    for n, (source, target, data) in enumerate(edges):
        edge = ET.SubElement(graph, "edge", {"id": f"e{n}", "source": source, "target": target})
        for key_id, value in data.items():
            ET.SubElement(edge, "data", {"key": key_id}).text = str(value)
    ET.indent(root)
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(root, encoding="unicode") + "\n"


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def pag_graphml(g: BipartiteGraph) -> str:
    keys = [
        ("kind", "node", "kind", "string"),
        ("label", "node", "label", "string"),
        ("degree", "node", "degree", "int"),
    ]
    pdeg, adeg = paper_degrees(g), author_degrees(g)
    nodes = [(f"p{i}", {"kind": "paper", "label": pid, "degree": pdeg[i]}) for i, pid in enumerate(g.paper_ids)]
    nodes += [(f"a{j}", {"kind": "author", "label": key.render(), "degree": adeg[j]}) for j, key in enumerate(g.author_keys)]
    edges = [(f"p{i}", f"a{j}", {}) for i, j in g.edges()]
    return _graphml(keys, nodes, edges)


def pag_dot(g: BipartiteGraph) -> str:
    lines = ["graph PAG {"]
    for i, pid in enumerate(g.paper_ids):
        lines.append(f"  p{i} [shape=box, kind=paper, label={_dot_quote(pid)}];")
    for j, key in enumerate(g.author_keys):
        lines.append(f"  a{j} [shape=circle, kind=author, label={_dot_quote(key.render())}];")
    for i, j in g.edges():
        lines.append(f"  p{i} -- a{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cag_node_data(cg: CoauthorGraph):
    cdeg = coauthor_degrees(cg)
    comp = component_labels(cg)
    for j, key in enumerate(cg.author_keys):
        yield f"a{j}", {"label": key.render(), "papers": cg.paper_counts[j], "coauthors": cdeg[j], "component": comp[j]}


def cag_graphml(cg: CoauthorGraph) -> str:
    keys = [
        ("label", "node", "label", "string"),
        ("papers", "node", "papers", "int"),
        ("coauthors", "node", "coauthors", "int"),
        ("component", "node", "component", "int"),
        ("weight", "edge", "weight", "int"),
    ]
    edges = [(f"a{j}", f"a{k}", {"weight": w}) for (j, k), w in sorted(cg.weights.items())]
    return _graphml(keys, list(_cag_node_data(cg)), edges)


def cag_dot(cg: CoauthorGraph) -> str:
    lines = ["graph CAG {"]
    for node_id, data in _cag_node_data(cg):
        lines.append(
            f"  {node_id} [shape=circle, label={_dot_quote(data['label'])}, papers={data['papers']}, "
            f"coauthors={data['coauthors']}, component={data['component']}];"
        )
    for (j, k), w in sorted(cg.weights.items()):
        lines.append(f"  a{j} -- a{k} [weight={w}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO(newline="")
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def fmt_num(x: float) -> str:
    return f"{x:.6g}"


def distribution_csv(fd: FrequencyDistribution, fit: PowerLawFit | None) -> str:
    rows = [(d, f, fmt_num(fit.predict(d)) if fit else "") for d, f in fd]
    return to_csv(("degree", "frequency", "fitted_frequency"), rows)


def mixing_csv(plot_rows: Iterable[tuple[float, float, int]]) -> str:
    return to_csv(("tau_start", "tau_end", "count"), plot_rows)
