"""Graphviz DOT rendering.

Directed kinds become ``digraph`` blocks.  Set-system kinds are drawn
undirected with one box node per hyperedge (2-element edges of a plain set
system are drawn as ordinary lines).  Incidence kinds are drawn as the
bipartite vertex/edge graph.  Output depends only on the value, so the
same structure always renders to the same bytes.
"""
from __future__ import annotations

from .structures import (
    Digraph,
    IncidenceHypergraph,
    IncidenceStructure,
    Quiver,
    SetSystem,
    SetSystemHypergraph,
)


def _q(s) -> str:
    text = str(s).replace("\\", "\\\\").replace('"', '\\"')
    return f'"{text}"'


def _vid(v) -> str:
    return _q(f"v:{v!r}")


def _eid(e) -> str:
    return _q(f"e:{e!r}")


def _vertex_lines(x) -> list[str]:
    return [f"  {_vid(v)} [label={_q(repr(v))}];" for v in x.vertices]


def _box(e) -> str:
    return f"  {_eid(e)} [shape=box, label={_q(repr(e))}];"


def to_dot(x, name: str = "G") -> str:
    lines: list[str]
    if isinstance(x, (Quiver, Digraph)):
        lines = [f"digraph {_q(name)} {{"] + _vertex_lines(x)
        if isinstance(x, Quiver):
            lines += [f"  {_vid(x.src[a])} -> {_vid(x.tgt[a])} [label={_q(repr(a))}];" for a in x.arcs]
        else:
            lines += [f"  {_vid(a.first)} -> {_vid(a.second)};" for a in x.arcs]
    elif isinstance(x, SetSystemHypergraph):
        lines = [f"graph {_q(name)} {{"] + _vertex_lines(x)
        for e in x.edges:
            lines.append(_box(e))
            lines += [f"  {_eid(e)} -- {_vid(v)};" for v in x.eps[e]]
    elif isinstance(x, SetSystem):
        lines = [f"graph {_q(name)} {{"] + _vertex_lines(x)
        for a in x.edges:
            if len(a) == 2:
                v, w = a.items
                lines.append(f"  {_vid(v)} -- {_vid(w)};")
            else:
                lines.append(_box(a))
                lines += [f"  {_eid(a)} -- {_vid(v)};" for v in a]
    elif isinstance(x, IncidenceHypergraph):
        lines = [f"graph {_q(name)} {{"] + _vertex_lines(x) + [_box(e) for e in x.edges]
        lines += [f"  {_vid(x.port[i])} -- {_eid(x.attach[i])} [label={_q(repr(i))}];" for i in x.incidences]
    elif isinstance(x, IncidenceStructure):
        lines = [f"graph {_q(name)} {{"] + _vertex_lines(x) + [_box(e) for e in x.edges]
        lines += [f"  {_vid(p.first)} -- {_eid(p.second)};" for p in x.incidences]
    else:
        raise TypeError(f"cannot render {type(x).__name__}")
    lines.append("}")
    return "\n".join(lines) + "\n"
