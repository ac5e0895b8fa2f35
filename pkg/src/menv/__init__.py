"""Exact computation in the universal nonassociative enveloping algebra of the
five-dimensional solvable Malcev algebras M_gamma."""

from .alternative import AltElement, alt_mul, reduce_mod_J
from .center import GammaMode, center_generator, center_search, is_central
from .core import DomainError, Element, associator, commutator, gamma_eval, mul, mul_closed
from .document import deserialize, serialize
from .expr import evaluate, parse, to_text
from .operators import apply, left_op_monomial, operator_mul
from .oracle import mul_oracle, oracle_mul, straighten

__version__ = "0.1.0"

__all__ = [
    "AltElement",
    "DomainError",
    "Element",
    "GammaMode",
    "alt_mul",
    "apply",
    "associator",
    "center_generator",
    "center_search",
    "commutator",
    "deserialize",
    "evaluate",
    "gamma_eval",
    "is_central",
    "left_op_monomial",
    "mul",
    "mul_closed",
    "mul_oracle",
    "operator_mul",
    "oracle_mul",
    "parse",
    "reduce_mod_J",
    "serialize",
    "straighten",
    "to_text",
]
