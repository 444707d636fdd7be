"""Weighted multitape rational expressions, expansions and derived-term automata."""

from .automaton import (Automaton, LazyAutomaton, all_derived_terms, derived_term_automaton,
                        derived_terms, from_json, to_dot, to_json)
from .derivative import constant_term, derivative
from .errors import (ArityMismatch, ExpressionError, ExpressionSyntaxError,
                     NonStarrableConstantTerm, NotProper, SchemaError, StarUndefined,
                     TapeMismatch, UnknownLetter)
from .expansion import Expander, Expansion, expansion_of, format_expansion
from .expression import Expr, validate
from .labels import Context
from .oracle import TruncatedSeries, bounded_equiv, series_of_automaton, series_of_expr
from .polynomial import Polynomial, format_polynomial
from .semiring import B, Q, Z, Weight, get_semiring
from .syntax import parse, to_string

__all__ = [
    "ArityMismatch",
    "Automaton",
    "B",
    "Context",
    "Expander",
    "Expansion",
    "Expr",
    "ExpressionError",
    "ExpressionSyntaxError",
    "LazyAutomaton",
    "NonStarrableConstantTerm",
    "NotProper",
    "Polynomial",
    "Q",
    "SchemaError",
    "StarUndefined",
    "TapeMismatch",
    "TruncatedSeries",
    "UnknownLetter",
    "Weight",
    "Z",
    "all_derived_terms",
    "bounded_equiv",
    "constant_term",
    "derivative",
    "derived_term_automaton",
    "derived_terms",
    "expansion_of",
    "format_expansion",
    "format_polynomial",
    "from_json",
    "get_semiring",
    "parse",
    "series_of_automaton",
    "series_of_expr",
    "to_dot",
    "to_json",
    "to_string",
    "validate",
]

__version__ = "0.1.0"
