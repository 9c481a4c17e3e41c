import json
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from graphcats.atoms import Leaf
from graphcats.errors import KindError
from graphcats.fixtures import FIXTURES, G3, GL, H2, HL, PHI_DUAL, PHI_GAMMA, PHI_LINE, Gd, Hd
from graphcats.laws.generators import InstanceGenerator
from graphcats.structures import (
    Digraph,
    IncidenceHypergraph,
    IncidenceStructure,
    Morphism,
    Quiver,
    SetSystem,
    SetSystemHypergraph,
    canonical_encode,
    check_morphism,
    compose,
    identity,
    is_isomorphism,
    morphism_from_json,
    morphism_to_json,
    object_from_json,
    object_to_json,
    size,
    validate,
)

CORPUS = Path(__file__).parent / "corpus"
CATS = ["Q", "Digra", "SDigra", "H", "H+", "M", "SSys", "Gra", "R", "IStr"]


def load(name):
    return object_from_json(json.loads((CORPUS / name).read_text()))


def parseable_corpus():
    out = []
    for p in sorted(CORPUS.glob("*.json")):
        try:
            object_from_json(json.loads(p.read_text()))
        except (ValueError, KeyError, TypeError):
            continue
        out.append(p.name)
    return out


# ---------------------------------------------------------------- validate

def test_single_vertex_is_a_multigraph():
    assert validate(SetSystemHypergraph.build(["v"], {}), "multigraph") == []


def test_three_endpoints_break_the_multigraph_predicate():
    problems = validate(G3, "multigraph")
    assert len(problems) == 1 and "3 endpoints" in problems[0]
    assert validate(G3) == []


def test_one_way_arc_is_not_symmetric():
    d = Digraph.build(["a", "b"], [("a", "b")])
    assert validate(d) == []
    assert validate(d, "symmetric")
    assert validate(Digraph.build(["a", "b"], [("a", "b"), ("b", "a")]), "symmetric") == []


def test_simple_graph_predicate():
    assert validate(SetSystem.build([0, 1], [[0], [0, 1]]), "simple-graph") == []
    assert validate(SetSystem.build([0, 1], [[]]), "simple-graph")
    assert validate(SetSystem.build([0, 1, 2], [[0, 1, 2]]), "simple-graph")


def test_empty_endpoint_sets_are_legal():
    assert validate(SetSystemHypergraph.build(["x"], {"a": []})) == []
    assert validate(SetSystem.build([], [[]])) == []


def test_dangling_references_are_reported():
    assert validate(SetSystemHypergraph.build([0], {"e": [0, 9]}))
    assert validate(Quiver.build(["a"], {"e": ("a", "b")}))
    assert validate(Digraph.build(["a"], [("a", "b")]))
    assert validate(IncidenceHypergraph.build(["v"], ["e"], {"i": ("v", "f")}))
    assert validate(IncidenceStructure.build(["v"], ["e"], [("w", "e")]))
    assert validate(SetSystem.build([0], [[1]]))


def test_predicate_on_wrong_kind():
    assert validate(Quiver.build([], {}), "multigraph")
    with pytest.raises(KindError):
        validate(G3, "bogus")


@pytest.mark.parametrize("cat", CATS)
def test_generated_objects_are_valid(cat):
    gen = InstanceGenerator(cat, seed=3)
    for x in gen.objects(30):
        pred = {"SDigra": "symmetric", "M": "multigraph", "Gra": "simple-graph"}.get(cat)
        assert validate(x, pred) == []


# ---------------------------------------------------------------- morphisms

def test_mod_two_map_is_strict():
    assert check_morphism(PHI_GAMMA)
    assert check_morphism(PHI_GAMMA.with_kind("weak-ssh"))


def test_shrunk_edge_is_weak_only():
    g = SetSystemHypergraph.build([0, 1, 2], {"e": [0]})
    vmap = {Leaf(n): Leaf(n % 2) for n in range(3)}
    strict = Morphism.build("strict-ssh", g, H2, vmap, {"e": "f"})
    assert not check_morphism(strict)
    assert check_morphism(strict.with_kind("weak-ssh"))


def test_reconstructed_fixture_maps_are_strict():
    assert check_morphism(PHI_LINE)
    assert check_morphism(PHI_DUAL)


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_identities_are_valid(name):
    x = FIXTURES[name]
    assert check_morphism(identity(x))
    assert is_isomorphism(identity(x))


def test_identity_of_empty_objects():
    for x in [Quiver.build([], {}), Digraph.build([], []), SetSystemHypergraph.build([], {}),
              SetSystem.build([], []), IncidenceHypergraph.build([], [], {}), IncidenceStructure.build([], [], [])]:
        assert check_morphism(identity(x))


def test_identity_kind_must_fit():
    assert identity(G3, "weak-ssh").kind == "weak-ssh"
    with pytest.raises(KindError):
        identity(G3, "quiver")


def test_component_shape_mismatch():
    with pytest.raises(KindError):
        Morphism("strict-ssh", G3, H2, PHI_GAMMA.vertex, None)
    with pytest.raises(KindError):
        Morphism("ssys", G3, H2, PHI_GAMMA.vertex)
    with pytest.raises(KindError):
        Morphism("bogus", G3, H2, PHI_GAMMA.vertex, PHI_GAMMA.edge)
    with pytest.raises(KindError):
        Morphism("strict-ssh", H2, G3, PHI_GAMMA.vertex, PHI_GAMMA.edge)


def test_compose_rejects_mismatches():
    with pytest.raises(KindError):
        compose(PHI_GAMMA, PHI_GAMMA)
    with pytest.raises(KindError):
        compose(identity(H2, "weak-ssh"), PHI_GAMMA)


def test_quiver_law():
    q = Quiver.build(["a", "b"], {"e": ("a", "b")})
    loop = Quiver.build(["c"], {"l": ("c", "c")})
    assert check_morphism(Morphism.build("quiver", q, loop, {"a": "c", "b": "c"}, {"e": "l"}))
    bad = Morphism.build("quiver", q, q, {"a": "b", "b": "a"}, {"e": "e"})
    assert not check_morphism(bad)


def test_incidence_hypergraph_law():
    h = IncidenceHypergraph.build(["v", "w"], ["e"], {"i": ("v", "e"), "j": ("w", "e")})
    ok = Morphism.build("inc-hyp", h, h, {"v": "w", "w": "v"}, {"e": "e"}, {"i": "j", "j": "i"})
    assert check_morphism(ok)
    bad = Morphism.build("inc-hyp", h, h, {"v": "w", "w": "v"}, {"e": "e"}, {"i": "i", "j": "j"})
    assert not check_morphism(bad)


def test_istr_and_ssys_laws():
    s = IncidenceStructure.build(["v", "w"], ["e"], [("v", "e")])
    assert check_morphism(Morphism.build("istr", s, s, {"v": "v", "w": "v"}, {"e": "e"}))
    assert not check_morphism(Morphism.build("istr", s, s, {"v": "w", "w": "w"}, {"e": "e"}))
    k2 = SetSystem.build([0, 1], [[0, 1]])
    assert not check_morphism(Morphism.build("ssys", k2, k2, {0: 0, 1: 0}))


def morphisms(cat):
    return st.integers(0, 10_000).map(lambda s: InstanceGenerator(cat, seed=s).morphism())


@pytest.mark.parametrize("cat", CATS)
def test_generated_morphisms_are_valid(cat):
    gen = InstanceGenerator(cat, seed=11)
    for _ in range(30):
        assert check_morphism(gen.morphism())


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10_000))
def test_weak_morphisms_compose(seed):
    m1, m2 = InstanceGenerator("H+", seed=seed).composable_pair()
    assert check_morphism(compose(m2, m1))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(CATS), st.integers(0, 10_000))
def test_composites_stay_valid_and_identities_are_units(cat, seed):
    m1, m2 = InstanceGenerator(cat, seed=seed).composable_pair()
    assert check_morphism(compose(m2, m1))
    assert compose(identity(m1.codomain, m1.kind), m1) == m1
    assert compose(m1, identity(m1.domain, m1.kind)) == m1


@settings(max_examples=100, deadline=None)
@given(morphisms("H"))
def test_strict_implies_weak(m):
    assert check_morphism(m.with_kind("weak-ssh"))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(CATS), st.integers(0, 10_000))
def test_check_is_stable_under_reencoding(cat, seed):
    m = InstanceGenerator(cat, seed=seed).morphism()
    again = morphism_from_json(json.loads(json.dumps(morphism_to_json(m))))
    assert again == m
    assert check_morphism(again) == check_morphism(m)


# ---------------------------------------------------------------- encoding

def test_reordered_presentation_encodes_identically():
    x, _ = load("G3_reordered.json")
    assert x == G3
    assert canonical_encode(x) == canonical_encode(G3)


def test_distinct_fixtures_encode_differently():
    encs = {canonical_encode(x) for x in FIXTURES.values()}
    assert len(encs) == len(FIXTURES)
    assert canonical_encode(G3) != canonical_encode(H2)


@pytest.mark.parametrize("name", parseable_corpus())
def test_corpus_round_trip(name):
    x, pred = load(name)
    doc = object_to_json(x)
    y, _ = object_from_json(json.loads(json.dumps(doc)))
    assert y == x
    assert canonical_encode(y) == canonical_encode(x)


def test_structured_atoms_round_trip():
    x, _ = load("structured.json")
    assert validate(x) == []
    kinds = {type(a).__name__ for a in x.vertices.members | x.edges.members | x.incidences.members}
    assert {"Pair", "Subset", "Triple", "Tag"} <= kinds


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(CATS), st.integers(0, 10_000))
def test_encode_decode_identity_on_generated(cat, seed):
    x = InstanceGenerator(cat, seed=seed).object()
    y, _ = object_from_json(json.loads(canonical_encode(x)))
    assert y == x


def test_malformed_documents():
    with pytest.raises(ValueError):
        object_from_json({"kind": "widget", "vertices": []})
    with pytest.raises(KeyError):
        object_from_json({"kind": "ssh"})
    with pytest.raises(ValueError):
        object_from_json({"kind": "digraph", "vertices": ["a"], "arcs": [["a"]]})
    with pytest.raises(ValueError):
        object_from_json({"kind": "ssh", "vertices": [1.5], "edges": []})


def test_sizes():
    assert size(G3) == (3, 1, 3)
    assert size(Gd) == (3, 2, 4)
    assert size(Hd) == (2, 2, 4)
    assert size(GL) == (3, 2, 4)
    assert size(HL) == (2, 1, 2)
