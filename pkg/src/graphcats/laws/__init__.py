"""Law harness: generators, direct-formula oracles and executable checks."""
from .adjunctions import ADJUNCTIONS
from .checks import (
    CheckReport,
    check_action_agreement,
    check_adjunction,
    check_equality,
    check_functoriality,
    check_hom_bijection,
    check_involution,
    check_lax_equivalence,
    check_natural_iso,
    check_universal_property,
    run_counterexample,
)
from .generators import Bounds, InstanceGenerator
from .suite import SUITES, law_names, run_suite

__all__ = [
    "ADJUNCTIONS", "CheckReport",
    "check_action_agreement", "check_adjunction", "check_equality", "check_functoriality",
    "check_hom_bijection", "check_involution", "check_lax_equivalence", "check_natural_iso",
    "check_universal_property", "run_counterexample",
    "Bounds", "InstanceGenerator", "SUITES", "law_names", "run_suite",
]
