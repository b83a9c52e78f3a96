from __future__ import annotations

from .maxnp import kernelize_max, kernelize_maxsnp
from .minf import kernelize_min
from .outcome import KernelOutcome
from .spec import Kind, ProblemSpec
from .structure import FiniteStructure


def kernelize(spec: ProblemSpec, structure: FiniteStructure, k: int, trace: list | None = None) -> KernelOutcome:
    """Dispatch on the specification kind."""
    if spec.kind is Kind.MINF:
        return kernelize_min(spec, structure, k, trace)
    if spec.kind is Kind.MAXSNP:
        return kernelize_maxsnp(spec, structure, k)
    return kernelize_max(spec, structure, k, trace)
