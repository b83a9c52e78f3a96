"""Polynomial kernelizations for first-order definable optimization problems.

Problems in MIN F+Pi1 are reduced through s-Hitting Set; problems in MAX NP
and MAX SNP through a threshold test and sunflower reduction of ground
disjuncts. Brute-force oracles in :mod:`polykernel.oracle` check answers at
desk scale.
"""

__version__ = "0.1.0"

from .errors import BudgetExceeded, DegenerateSpecError, InvariantViolation, KernelError, ParseError, ValidationError
from .kernel import kernelize
from .outcome import KernelOutcome, Verdict
from .spec import Kind, ProblemSpec, builtin_spec, parse_spec, render_spec, solution_occurrence_bound
from .structure import FiniteStructure, Vocabulary, enumerate_tuples, restrict_structure, validate_structure

__all__ = [
    "BudgetExceeded",
    "DegenerateSpecError",
    "FiniteStructure",
    "InvariantViolation",
    "KernelError",
    "KernelOutcome",
    "Kind",
    "ParseError",
    "ProblemSpec",
    "ValidationError",
    "Verdict",
    "Vocabulary",
    "builtin_spec",
    "enumerate_tuples",
    "kernelize",
    "parse_spec",
    "render_spec",
    "restrict_structure",
    "solution_occurrence_bound",
    "validate_structure",
]
