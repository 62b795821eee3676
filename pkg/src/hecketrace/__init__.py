"""Markov traces on Iwahori-Hecke algebras of type B and the associated
invariants of links in the solid torus."""

from .braid import BraidWord, Letter, parse_braid
from .coxeter import ClassLabel, conjugacy_classes, minimal_rep
from .hecke import HeckeElem, pi_map, t_prime
from .invariant import InvariantResult, invariant_X, substitute_xr
from .symbolic import Poly, RatFun, Var
from .trace import TraceParams, class_value, eval_trace, eval_trace_word

__version__ = "0.1.0"

__all__ = [
    "BraidWord", "Letter", "parse_braid", "ClassLabel", "conjugacy_classes",
    "minimal_rep", "HeckeElem", "pi_map", "t_prime", "InvariantResult",
    "invariant_X", "substitute_xr", "Poly", "RatFun", "Var", "TraceParams",
    "class_value", "eval_trace", "eval_trace_word",
]
