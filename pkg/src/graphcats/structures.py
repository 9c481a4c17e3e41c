"""The graph-like structures and their homomorphisms.

Six concrete types carry the nine structure kinds: multigraphs are
set-system hypergraphs passing a predicate, simple graphs are set systems
passing a predicate, and symmetric digraphs are digraphs passing one.

Graph objects never raise on construction; :func:`validate` reports what
is wrong with them. Morphism components are :class:`FinFunction` values and
are therefore always total.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Iterable, Mapping, Optional, Union

from .atoms import Atom, Pair, Subset, atom
from .errors import KindError
from .finset import FinFunction, FinSet, subset_image


def _atom_map(m: Mapping[Any, Any]) -> dict:
    return {atom(k): atom(v) for k, v in m.items()}


@dataclass(frozen=True, eq=True)
class Quiver:
    vertices: FinSet
    arcs: FinSet
    src: Mapping[Atom, Atom]
    tgt: Mapping[Atom, Atom]

    __hash__ = None

    @classmethod
    def build(cls, vertices: Iterable, arcs: Mapping[Any, tuple]) -> Quiver:
        """``arcs`` maps an arc name to ``(source, target)``."""
        table = {atom(e): (atom(s), atom(t)) for e, (s, t) in arcs.items()}
        return cls(
            FinSet(vertices),
            FinSet(table),
            {e: st[0] for e, st in table.items()},
            {e: st[1] for e, st in table.items()},
        )

    def src_map(self) -> FinFunction:
        return FinFunction(self.arcs, self.vertices, self.src)

    def tgt_map(self) -> FinFunction:
        return FinFunction(self.arcs, self.vertices, self.tgt)


@dataclass(frozen=True, eq=True)
class Digraph:
    vertices: FinSet
    arcs: FinSet  # of Pair atoms

    __hash__ = None

    @classmethod
    def build(cls, vertices: Iterable, arcs: Iterable[tuple]) -> Digraph:
        return cls(FinSet(vertices), FinSet(Pair(v, w) for v, w in arcs))


@dataclass(frozen=True, eq=True)
class SetSystemHypergraph:
    vertices: FinSet
    edges: FinSet
    eps: Mapping[Atom, Subset]

    __hash__ = None

    @classmethod
    def build(cls, vertices: Iterable, edges: Mapping[Any, Iterable]) -> SetSystemHypergraph:
        """``edges`` maps an edge name to its endpoint set."""
        eps = {atom(e): Subset(ends) for e, ends in edges.items()}
        return cls(FinSet(vertices), FinSet(eps), eps)

    def eps_map(self, cap: int | None = None) -> FinFunction:
        from .finset import power_set

        return FinFunction(self.edges, power_set(self.vertices, cap), self.eps)


@dataclass(frozen=True, eq=True)
class SetSystem:
    vertices: FinSet
    edges: FinSet  # of Subset atoms

    __hash__ = None

    @classmethod
    def build(cls, vertices: Iterable, edges: Iterable[Iterable]) -> SetSystem:
        return cls(FinSet(vertices), FinSet(Subset(a) for a in edges))


@dataclass(frozen=True, eq=True)
class IncidenceHypergraph:
    vertices: FinSet
    edges: FinSet
    incidences: FinSet
    port: Mapping[Atom, Atom]
    attach: Mapping[Atom, Atom]

    __hash__ = None

    @classmethod
    def build(cls, vertices: Iterable, edges: Iterable, incidences: Mapping[Any, tuple]) -> IncidenceHypergraph:
        """``incidences`` maps an incidence name to ``(vertex, edge)``."""
        table = {atom(i): (atom(v), atom(e)) for i, (v, e) in incidences.items()}
        return cls(
            FinSet(vertices),
            FinSet(edges),
            FinSet(table),
            {i: ve[0] for i, ve in table.items()},
            {i: ve[1] for i, ve in table.items()},
        )

    def port_map(self) -> FinFunction:
        return FinFunction(self.incidences, self.vertices, self.port)

    def attach_map(self) -> FinFunction:
        return FinFunction(self.incidences, self.edges, self.attach)


@dataclass(frozen=True, eq=True)
class IncidenceStructure:
    vertices: FinSet
    edges: FinSet
    incidences: FinSet  # of Pair(vertex, edge) atoms

    __hash__ = None

    @classmethod
    def build(cls, vertices: Iterable, edges: Iterable, incidences: Iterable[tuple]) -> IncidenceStructure:
        return cls(FinSet(vertices), FinSet(edges), FinSet(Pair(v, e) for v, e in incidences))


GraphObject = Union[Quiver, Digraph, SetSystemHypergraph, SetSystem, IncidenceHypergraph, IncidenceStructure]

# morphism kind -> (object type, component names)
MORPHISM_KINDS = {
    "quiver": (Quiver, ("vertex", "edge")),
    "digraph": (Digraph, ("vertex",)),
    "strict-ssh": (SetSystemHypergraph, ("vertex", "edge")),
    "weak-ssh": (SetSystemHypergraph, ("vertex", "edge")),
    "ssys": (SetSystem, ("vertex",)),
    "inc-hyp": (IncidenceHypergraph, ("vertex", "edge", "incidence")),
    "istr": (IncidenceStructure, ("vertex", "edge")),
}

KIND_NAMES = {
    Quiver: "quiver",
    Digraph: "digraph",
    SetSystemHypergraph: "ssh",
    SetSystem: "set-system",
    IncidenceHypergraph: "inc-hyp",
    IncidenceStructure: "istr",
}

# structure kind -> (type, predicate)
STRUCTURE_KINDS = {
    "quiver": (Quiver, None),
    "digraph": (Digraph, None),
    "symmetric-digraph": (Digraph, "symmetric"),
    "set-system": (SetSystem, None),
    "simple-graph": (SetSystem, "simple-graph"),
    "ssh": (SetSystemHypergraph, None),
    "multigraph": (SetSystemHypergraph, "multigraph"),
    "inc-hyp": (IncidenceHypergraph, None),
    "istr": (IncidenceStructure, None),
}


def edge_set(x: GraphObject) -> FinSet:
    """The set an edge component of a morphism acts on."""
    if isinstance(x, Quiver):
        return x.arcs
    if isinstance(x, (SetSystemHypergraph, IncidenceHypergraph, IncidenceStructure)):
        return x.edges
    raise KindError(f"{KIND_NAMES[type(x)]} has no edge component")


def size(x: GraphObject) -> tuple[int, int, int]:
    """(vertices, edges-or-arcs, incidences) counts."""
    if isinstance(x, (Quiver, Digraph)):
        return len(x.vertices), len(x.arcs), 0
    if isinstance(x, (SetSystemHypergraph, SetSystem)):
        return len(x.vertices), len(x.edges), sum(len(a) for a in _endpoint_sets(x))
    return len(x.vertices), len(x.edges), len(x.incidences)


def _endpoint_sets(x):
    if isinstance(x, SetSystemHypergraph):
        return [x.eps[e] for e in x.edges if e in x.eps]
    return list(x.edges)


@dataclass(frozen=True, eq=True)
class Morphism:
    kind: str
    domain: GraphObject
    codomain: GraphObject
    vertex: FinFunction
    edge: Optional[FinFunction] = None
    incidence: Optional[FinFunction] = None

    __hash__ = None

    def __post_init__(self):
        if self.kind not in MORPHISM_KINDS:
            raise KindError(f"unknown morphism kind {self.kind!r}")
        otype, comps = MORPHISM_KINDS[self.kind]
        for end in (self.domain, self.codomain):
            if not isinstance(end, otype):
                raise KindError(f"{self.kind} morphism between {type(end).__name__} objects")
        if self.vertex.domain != self.domain.vertices or self.vertex.codomain != self.codomain.vertices:
            raise KindError("vertex component does not match the endpoints")
        if ("edge" in comps) != (self.edge is not None):
            raise KindError(f"{self.kind} morphisms {'need' if 'edge' in comps else 'have no'} an edge component")
        if self.edge is not None and (
            self.edge.domain != edge_set(self.domain) or self.edge.codomain != edge_set(self.codomain)
        ):
            raise KindError("edge component does not match the endpoints")
        if ("incidence" in comps) != (self.incidence is not None):
            raise KindError(f"{self.kind} morphisms {'need' if 'incidence' in comps else 'have no'} an incidence component")
        if self.incidence is not None and (
            self.incidence.domain != self.domain.incidences or self.incidence.codomain != self.codomain.incidences
        ):
            raise KindError("incidence component does not match the endpoints")

    @classmethod
    def build(cls, kind: str, domain: GraphObject, codomain: GraphObject, vertex: Mapping, edge: Mapping | None = None, incidence: Mapping | None = None) -> Morphism:
        """Assemble a morphism from plain component mappings."""
        v = FinFunction(domain.vertices, codomain.vertices, vertex)
        e = None if edge is None else FinFunction(edge_set(domain), edge_set(codomain), edge)
        i = None if incidence is None else FinFunction(domain.incidences, codomain.incidences, incidence)
        return cls(kind, domain, codomain, v, e, i)

    def components(self) -> dict[str, FinFunction]:
        out = {"vertex": self.vertex}
        if self.edge is not None:
            out["edge"] = self.edge
        if self.incidence is not None:
            out["incidence"] = self.incidence
        return out

    def with_kind(self, kind: str) -> Morphism:
        return Morphism(kind, self.domain, self.codomain, self.vertex, self.edge, self.incidence)


# ---------------------------------------------------------------- validation

def _is_symmetric(d: Digraph) -> bool:
    return all(Pair(a.second, a.first) in d.arcs for a in d.arcs)


def violations(x: GraphObject, predicate: str | None = None) -> list[str]:
    """Every broken invariant of ``x`` (and of ``predicate``, if given)."""
    out: list[str] = []
    if isinstance(x, Quiver):
        for e in x.arcs:
            for name, m in (("source", x.src), ("target", x.tgt)):
                if e not in m:
                    out.append(f"arc {e!r} has no {name}")
                elif m[e] not in x.vertices:
                    out.append(f"{name} of arc {e!r} is not a vertex")
        for m in (x.src, x.tgt):
            out.extend(f"map defined on non-arc {e!r}" for e in m if e not in x.arcs)
    elif isinstance(x, Digraph):
        for a in x.arcs:
            if not isinstance(a, Pair) or a.first not in x.vertices or a.second not in x.vertices:
                out.append(f"arc {a!r} is not a pair of vertices")
    elif isinstance(x, SetSystemHypergraph):
        for e in x.edges:
            if e not in x.eps:
                out.append(f"edge {e!r} has no endpoint set")
            elif not isinstance(x.eps[e], Subset) or not x.eps[e].members <= x.vertices.members:
                out.append(f"endpoints of {e!r} are not a set of vertices")
        out.extend(f"endpoints given for non-edge {e!r}" for e in x.eps if e not in x.edges)
    elif isinstance(x, SetSystem):
        for a in x.edges:
            if not isinstance(a, Subset) or not a.members <= x.vertices.members:
                out.append(f"edge {a!r} is not a set of vertices")
    elif isinstance(x, IncidenceHypergraph):
        for i in x.incidences:
            if i not in x.port or x.port[i] not in x.vertices:
                out.append(f"incidence {i!r} has no valid port")
            if i not in x.attach or x.attach[i] not in x.edges:
                out.append(f"incidence {i!r} has no valid attachment")
        for m in (x.port, x.attach):
            out.extend(f"map defined on non-incidence {i!r}" for i in m if i not in x.incidences)
    elif isinstance(x, IncidenceStructure):
        for p in x.incidences:
            if not isinstance(p, Pair) or p.first not in x.vertices or p.second not in x.edges:
                out.append(f"incidence {p!r} is not a (vertex, edge) pair")
    else:
        raise KindError(f"not a graph object: {type(x).__name__}")

    if predicate is None or out:
        return out
    if predicate == "multigraph":
        if not isinstance(x, SetSystemHypergraph):
            return [f"multigraph predicate needs a set-system hypergraph, got {KIND_NAMES[type(x)]}"]
        for e in x.edges:
            n = len(x.eps[e])
            if not 1 <= n <= 2:
                out.append(f"edge {e!r} has {n} endpoints (multigraph edges have 1 or 2)")
    elif predicate == "simple-graph":
        if not isinstance(x, SetSystem):
            return [f"simple-graph predicate needs a set system, got {KIND_NAMES[type(x)]}"]
        for a in x.edges:
            if not 1 <= len(a) <= 2:
                out.append(f"edge {a!r} has {len(a)} elements (graph edges have 1 or 2)")
    elif predicate == "symmetric":
        if not isinstance(x, Digraph):
            return [f"symmetric predicate needs a digraph, got {KIND_NAMES[type(x)]}"]
        for a in x.arcs:
            if Pair(a.second, a.first) not in x.arcs:
                out.append(f"arc {a!r} has no reverse")
    else:
        raise KindError(f"unknown predicate {predicate!r}")
    return out


def validate(x: GraphObject, predicate: str | None = None) -> list[str]:
    """Alias of :func:`violations`; an empty list means ``x`` is valid."""
    return violations(x, predicate)


def is_valid(x: GraphObject, predicate: str | None = None) -> bool:
    return not violations(x, predicate)


# ---------------------------------------------------------------- morphisms

def morphism_violations(m: Morphism) -> list[str]:
    """Elements at which ``m`` breaks the law of its kind."""
    dom, cod = m.domain, m.codomain
    f = m.vertex.mapping
    bad = []
    if m.kind == "quiver":
        a = m.edge.mapping
        for e in dom.arcs:
            if cod.src[a[e]] != f[dom.src[e]] or cod.tgt[a[e]] != f[dom.tgt[e]]:
                bad.append(f"arc {e!r}")
    elif m.kind == "digraph":
        for p in dom.arcs:
            if Pair(f[p.first], f[p.second]) not in cod.arcs:
                bad.append(f"arc {p!r}")
    elif m.kind in ("strict-ssh", "weak-ssh"):
        g = m.edge.mapping
        for e in dom.edges:
            pushed = subset_image(f, dom.eps[e])
            target = cod.eps[g[e]]
            ok = pushed == target if m.kind == "strict-ssh" else pushed.issubset(target)
            if not ok:
                bad.append(f"edge {e!r}")
    elif m.kind == "ssys":
        for a in dom.edges:
            if subset_image(f, a) not in cod.edges:
                bad.append(f"edge {a!r}")
    elif m.kind == "inc-hyp":
        g, h = m.edge.mapping, m.incidence.mapping
        for i in dom.incidences:
            if cod.port[h[i]] != f[dom.port[i]] or cod.attach[h[i]] != g[dom.attach[i]]:
                bad.append(f"incidence {i!r}")
    elif m.kind == "istr":
        g = m.edge.mapping
        for p in dom.incidences:
            if Pair(f[p.first], g[p.second]) not in cod.incidences:
                bad.append(f"incidence {p!r}")
    return bad


def check_morphism(m: Morphism) -> bool:
    return not morphism_violations(m)


def identity(x: GraphObject, kind: str | None = None) -> Morphism:
    if kind is None:
        kind = {"ssh": "strict-ssh", "set-system": "ssys"}.get(KIND_NAMES[type(x)], KIND_NAMES[type(x)])
    otype, comps = MORPHISM_KINDS.get(kind, (None, ()))
    if otype is None or not isinstance(x, otype):
        raise KindError(f"no {kind} identity on a {KIND_NAMES[type(x)]}")
    v = FinFunction.identity(x.vertices)
    e = FinFunction.identity(edge_set(x)) if "edge" in comps else None
    i = FinFunction.identity(x.incidences) if "incidence" in comps else None
    return Morphism(kind, x, x, v, e, i)


def compose(m2: Morphism, m1: Morphism) -> Morphism:
    """``m2 ∘ m1``, componentwise."""
    if m1.kind != m2.kind:
        raise KindError(f"cannot compose a {m2.kind} morphism after a {m1.kind} morphism")
    if m1.codomain != m2.domain:
        raise KindError("morphisms are not composable: codomain and domain differ")
    e = None if m1.edge is None else m2.edge.after(m1.edge)
    i = None if m1.incidence is None else m2.incidence.after(m1.incidence)
    return Morphism(m1.kind, m1.domain, m2.codomain, m2.vertex.after(m1.vertex), e, i)


def is_isomorphism(m: Morphism) -> bool:
    """Valid, bijective on every component, and the inverse is valid too."""
    if not check_morphism(m):
        return False
    comps = m.components()
    if not all(c.is_bijective() for c in comps.values()):
        return False
    inv = {name: {y: x for x, y in c.mapping.items()} for name, c in comps.items()}
    back = Morphism.build(m.kind, m.codomain, m.domain, inv["vertex"], inv.get("edge"), inv.get("incidence"))
    return check_morphism(back)


# ---------------------------------------------------------------- encoding

def atom_to_json(a: Atom) -> Any:
    from .atoms import Leaf, Tag, Triple

    if isinstance(a, Leaf):
        return a.name
    if isinstance(a, Pair):
        return {"pair": [atom_to_json(a.first), atom_to_json(a.second)]}
    if isinstance(a, Triple):
        return {"triple": [atom_to_json(x) for x in a]}
    if isinstance(a, Subset):
        return {"subset": [atom_to_json(x) for x in a]}
    if isinstance(a, Tag):
        return {"tag": [a.index, atom_to_json(a.value)]}
    raise KindError(f"not an atom: {a!r}")


def atom_from_json(d: Any) -> Atom:
    from .atoms import Leaf, Tag, Triple

    if isinstance(d, str):
        return Leaf(d)
    if isinstance(d, int) and not isinstance(d, bool):
        return Leaf(d)
    if isinstance(d, dict) and len(d) == 1:
        (tag, body), = d.items()
        if tag == "pair" and isinstance(body, list) and len(body) == 2:
            return Pair(*map(atom_from_json, body))
        if tag == "triple" and isinstance(body, list) and len(body) == 3:
            return Triple(*map(atom_from_json, body))
        if tag == "subset" and isinstance(body, list):
            return Subset(map(atom_from_json, body))
        if tag == "tag" and isinstance(body, list) and len(body) == 2 and isinstance(body[0], int):
            return Tag(body[0], atom_from_json(body[1]))
    raise ValueError(f"malformed atom: {d!r}")


def _j(xs: Iterable[Atom]) -> list:
    return [atom_to_json(x) for x in xs]


def object_to_json(x: GraphObject, kind: str | None = None) -> dict:
    """JSON-ready dict; elements are emitted in atom order."""
    kind = kind or KIND_NAMES[type(x)]
    out: dict[str, Any] = {"kind": kind, "vertices": _j(x.vertices)}
    if isinstance(x, Quiver):
        out["arcs"] = [
            {"name": atom_to_json(e), "src": atom_to_json(x.src[e]), "tgt": atom_to_json(x.tgt[e])}
            for e in x.arcs
        ]
    elif isinstance(x, Digraph):
        out["arcs"] = [_j(a) for a in x.arcs]
    elif isinstance(x, SetSystemHypergraph):
        out["edges"] = [{"name": atom_to_json(e), "ends": _j(x.eps[e])} for e in x.edges]
    elif isinstance(x, SetSystem):
        out["edges"] = [_j(a) for a in x.edges]
    elif isinstance(x, IncidenceHypergraph):
        out["edges"] = _j(x.edges)
        out["incidences"] = [
            {"name": atom_to_json(i), "vertex": atom_to_json(x.port[i]), "edge": atom_to_json(x.attach[i])}
            for i in x.incidences
        ]
    elif isinstance(x, IncidenceStructure):
        out["edges"] = _j(x.edges)
        out["incidences"] = [_j(p) for p in x.incidences]
    return out


def object_from_json(d: Mapping) -> tuple[GraphObject, str | None]:
    """Parse a JSON dict; returns the object and its declared predicate.

    Raises ``ValueError`` (or ``KeyError``/``TypeError``) on malformed input.
    """
    kind = d["kind"]
    if kind not in STRUCTURE_KINDS:
        raise ValueError(f"unknown structure kind {kind!r}")
    otype, predicate = STRUCTURE_KINDS[kind]
    vertices = FinSet(atom_from_json(v) for v in d["vertices"])
    if otype is Quiver:
        arcs = {atom_from_json(r["name"]): (atom_from_json(r["src"]), atom_from_json(r["tgt"])) for r in d["arcs"]}
        obj = Quiver.build(vertices, arcs)
    elif otype is Digraph:
        obj = Digraph(vertices, FinSet(Pair(*map(atom_from_json, _pairlist(a))) for a in d["arcs"]))
    elif otype is SetSystemHypergraph:
        edges = {atom_from_json(r["name"]): [atom_from_json(v) for v in r["ends"]] for r in d["edges"]}
        obj = SetSystemHypergraph.build(vertices, edges)
    elif otype is SetSystem:
        obj = SetSystem(vertices, FinSet(Subset(map(atom_from_json, a)) for a in d["edges"]))
    elif otype is IncidenceHypergraph:
        incs = {atom_from_json(r["name"]): (atom_from_json(r["vertex"]), atom_from_json(r["edge"])) for r in d["incidences"]}
        obj = IncidenceHypergraph.build(vertices, map(atom_from_json, d["edges"]), incs)
    else:
        obj = IncidenceStructure(
            vertices,
            FinSet(map(atom_from_json, d["edges"])),
            FinSet(Pair(*map(atom_from_json, _pairlist(p))) for p in d["incidences"]),
        )
    return obj, predicate


def _pairlist(a) -> list:
    if not isinstance(a, list) or len(a) != 2:
        raise ValueError(f"expected a 2-element list, got {a!r}")
    return a


def _map_json(f: FinFunction) -> list:
    return [[atom_to_json(x), atom_to_json(f.mapping[x])] for x in f.domain]


def morphism_to_json(m: Morphism, with_ends: bool = True) -> dict:
    out: dict[str, Any] = {"kind": m.kind}
    if with_ends:
        out["domain"] = object_to_json(m.domain)
        out["codomain"] = object_to_json(m.codomain)
    for name, c in m.components().items():
        out[f"{name}_map"] = _map_json(c)
    return out


def morphism_from_json(d: Mapping) -> Morphism:
    dom, _ = object_from_json(d["domain"])
    cod, _ = object_from_json(d["codomain"])

    def table(key):
        if key not in d:
            return None
        return {atom_from_json(x): atom_from_json(y) for x, y in d[key]}

    return Morphism.build(d["kind"], dom, cod, table("vertex_map"), table("edge_map"), table("incidence_map"))


def canonical_encode(x: GraphObject | Morphism) -> bytes:
    """Deterministic byte encoding; equal bytes iff equal values.

    Subcategory kinds are not recorded: a simple graph and the same set
    system encode identically, as the inclusion is the identity.
    """
    if isinstance(x, Morphism):
        doc = morphism_to_json(x)
    else:
        doc = object_to_json(x)
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False).encode("utf-8")
