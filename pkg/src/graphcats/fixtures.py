"""Named small structures used as counterexamples and smoke inputs.

The three counterexample pairs are rebuilt from the equations in the
non-functoriality arguments (the original drawings are unavailable):

* ``G3 -> H2``: a 3-vertex edge onto a 2-vertex edge by ``n mod 2``.
* ``GL -> HL``: two edges sharing vertex 1 collapse onto one edge ``g``.
* ``Gd -> Hd``: ``v, w`` merged to ``w``; both edges keep their names.

Whether each pair really reproduces its counterexample is checked by the
law harness, not assumed here.
"""
from .atoms import Leaf
from .structures import (
    Digraph,
    IncidenceHypergraph,
    IncidenceStructure,
    Morphism,
    Quiver,
    SetSystem,
    SetSystemHypergraph,
)

G3 = SetSystemHypergraph.build([0, 1, 2], {"e": [0, 1, 2]})
H2 = SetSystemHypergraph.build([0, 1], {"f": [0, 1]})

GL = SetSystemHypergraph.build([0, 1, 2], {"e": [0, 1], "f": [1, 2]})
HL = SetSystemHypergraph.build([0, 1], {"g": [0, 1]})

Gd = SetSystemHypergraph.build(["v", "w", "x"], {"e": ["v", "x"], "f": ["w", "x"]})
Hd = SetSystemHypergraph.build(["w", "x"], {"e": ["w", "x"], "f": ["w", "x"]})

# ∅ ⊆ {x} but ∅ ≠ {x}: a weak hom exists, no strict hom can.
WEAK_SRC = SetSystemHypergraph.build(["x"], {"a": []})
WEAK_TGT = SetSystemHypergraph.build(["x"], {"b": ["x"]})

Q1 = Quiver.build(["a", "b"], {"e1": ("a", "b"), "e2": ("a", "b")})
LOOP = Quiver.build(["a"], {"e": ("a", "a")})
D1 = Digraph.build(["a", "b"], [("a", "b"), ("b", "a")])
K3 = SetSystem.build([0, 1, 2], [[0, 1], [1, 2], [0, 2]])
K2 = SetSystem.build([0, 1], [[0, 1]])
ONE_EDGE = SetSystemHypergraph.build(["v"], {"e": ["v"]})
TWO_EDGE = SetSystemHypergraph.build(["v", "w"], {"e": ["v", "w"]})
FLAG = IncidenceStructure.build(["v"], ["e"], [("v", "e")])
FLAG_HYP = IncidenceHypergraph.build(["v"], ["e"], {"i": ("v", "e")})


def _mod2(n):
    return Leaf(int(n.name) % 2)


PHI_GAMMA = Morphism.build(
    "strict-ssh", G3, H2, {v: _mod2(v) for v in G3.vertices}, {"e": "f"}
)
PHI_LINE = Morphism.build(
    "strict-ssh", GL, HL, {v: _mod2(v) for v in GL.vertices}, {"e": "g", "f": "g"}
)
PHI_DUAL = Morphism.build(
    "strict-ssh", Gd, Hd, {"v": "w", "w": "w", "x": "x"}, {"e": "e", "f": "f"}
)

FIXTURES = {
    "G3": G3,
    "H2": H2,
    "GL": GL,
    "HL": HL,
    "Gd": Gd,
    "Hd": Hd,
    "WEAK_SRC": WEAK_SRC,
    "WEAK_TGT": WEAK_TGT,
    "Q1": Q1,
    "LOOP": LOOP,
    "D1": D1,
    "K3": K3,
    "K2": K2,
    "ONE_EDGE": ONE_EDGE,
    "TWO_EDGE": TWO_EDGE,
    "FLAG": FLAG,
    "FLAG_HYP": FLAG_HYP,
}
