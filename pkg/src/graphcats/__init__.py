"""Categories of graph-like structures, the functors between them, and a
harness that checks their laws on finite instances."""
from .atoms import Atom, Leaf, Pair, Subset, Tag, Triple, atom
from .finset import Caps, DEFAULT_CAPS, FinFunction, FinSet, QuasiOrder
from .structures import (
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
    validate,
)
from .functors import CATEGORIES, FUNCTORS, apply

__all__ = [
    "Atom", "Leaf", "Pair", "Subset", "Tag", "Triple", "atom",
    "Caps", "DEFAULT_CAPS", "FinFunction", "FinSet", "QuasiOrder",
    "Digraph", "IncidenceHypergraph", "IncidenceStructure", "Morphism", "Quiver",
    "SetSystem", "SetSystemHypergraph",
    "canonical_encode", "check_morphism", "compose", "identity", "validate",
    "CATEGORIES", "FUNCTORS", "apply",
]

__version__ = "0.1.0"
