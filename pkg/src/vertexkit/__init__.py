"""Exact six-vertex lattice models with free-fermionic weights."""

from .algebra import NonExactDivision, Polynomial, RationalFunction, Var, divide_exact, parse_polynomial
from .lattice import (
    BoundarySpec,
    GridDims,
    LatticeState,
    VertexKind,
    base_model,
    count_states,
    dwbc_model,
    enumerate_states,
    signature_model,
)
from .partition import ModelTooLarge, normalized_partition, partition_function, partition_function_dp, partition_value
from .schur import calibrate_schur_specialization, dwbc_factor_report, factorial_schur_alternant
from .switchop import OperatorSymbol, OperatorWord, apply_switch, apply_word, reduce_to_base, word_for_signatures
from .verify import run_suite
from .weights import CrossWeightSet, DegenerateCross, Orientation, WeightScheme, ff_scheme, ones_scheme, solve_cross_weights

__version__ = "0.1.0"

__all__ = [
    "BoundarySpec", "CrossWeightSet", "DegenerateCross", "GridDims", "LatticeState", "ModelTooLarge",
    "NonExactDivision", "OperatorSymbol", "OperatorWord", "Orientation", "Polynomial", "RationalFunction",
    "Var", "VertexKind", "WeightScheme", "apply_switch", "apply_word", "base_model", "calibrate_schur_specialization",
    "count_states", "divide_exact", "dwbc_factor_report", "dwbc_model", "enumerate_states",
    "factorial_schur_alternant", "ff_scheme", "normalized_partition", "ones_scheme", "parse_polynomial",
    "partition_function", "partition_function_dp", "partition_value", "reduce_to_base", "run_suite",
    "signature_model", "solve_cross_weights", "word_for_signatures",
]
