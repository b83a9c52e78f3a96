"""Kernelization for MIN F+Pi1 problems via s-Hitting Set."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial
from typing import Mapping

from .errors import DegenerateSpecError, ValidationError
from .grounding import specialize_min
from .hypergraph import Edge, Hypergraph, kernelize_hitting_set
from .outcome import KernelOutcome, Verdict
from .spec import Kind, ProblemSpec, solution_occurrence_bound
from .structure import FiniteStructure, Tup, components, conform_structure, enumerate_tuples, restrict_structure


@dataclass(frozen=True)
class PhiResult:
    """Hitting-set hypergraph of a structure.

    Vertices are c_S-tuples of atoms; ``origins[e]`` lists, in canonical
    order, every x whose ground CNF contains the clause ``e``.
    """

    hypergraph: Hypergraph
    origins: Mapping[Edge, tuple[Tup, ...]] = field(default_factory=dict)
    no_instance_witness: Tup | None = None


def _require_minf(spec: ProblemSpec) -> None:
    if spec.kind is not Kind.MINF:
        raise ValidationError(f"{spec.name} is a {spec.kind.value} specification, not minf")


def build_phi(spec: ProblemSpec, structure: FiniteStructure) -> PhiResult:
    _require_minf(spec)
    origins: dict[Edge, list[Tup]] = {}
    witness = None
    for x in enumerate_tuples(structure, spec.c_x):
        cnf = specialize_min(spec, structure, x)
        if cnf.has_empty_clause:
            if witness is None:
                witness = x
            continue
        for clause in cnf.clauses:
            origins.setdefault(frozenset(lit.args for lit in clause), []).append(x)
    vertices = sorted({v for e in origins for v in e}, key=structure.atom_key)
    hypergraph = Hypergraph(tuple(vertices), tuple(origins))
    return PhiResult(hypergraph, {e: tuple(xs) for e, xs in origins.items()}, witness)


def minf_atom_bound(spec: ProblemSpec, k: int) -> int:
    s = solution_occurrence_bound(spec)
    return spec.c_x * (k + 1) ** s * factorial(s) * s


def kernelize_min(spec: ProblemSpec, structure: FiniteStructure, k: int, trace: list | None = None) -> KernelOutcome:
    """Reduce (A, k) to an equivalent (A', k) with |A'| <= c_x (k+1)^s s! s."""
    _require_minf(spec)
    s = solution_occurrence_bound(spec)
    if k < 0:
        raise ValidationError("k must be non-negative")
    structure = conform_structure(structure, spec.vocabulary)
    stats = {"atoms_before": structure.size, "tuples_before": structure.tuple_count}
    phi = build_phi(spec, structure)
    stats["edges_before"] = len(phi.hypergraph.edges)

    if phi.no_instance_witness is not None:
        # Restriction keeps every input literal over the witness, so its
        # empty clause survives and A' is a no-instance for every k.
        reduced = restrict_structure(structure, phi.no_instance_witness)
        stats.update(atoms_after=reduced.size, tuples_after=reduced.tuple_count, edges_after=0)
        return KernelOutcome(reduced, k, Verdict.TRIVIAL_NO, "empty-clause", stats)
    if s == 0:
        # Checked after the witness: an empty clause certifies NO whatever s is.
        raise DegenerateSpecError(f"{spec.name} has no solution-symbol occurrences; the kernel bound degenerates")

    kernel = kernelize_hitting_set(phi.hypergraph, k, s, trace)
    chosen = [phi.origins[e][0] for e in kernel.edges]
    reduced = restrict_structure(structure, components(chosen))
    stats.update(atoms_after=reduced.size, tuples_after=reduced.tuple_count, edges_after=len(kernel.edges))
    return KernelOutcome(reduced, k, Verdict.REDUCED, "hitting-set-kernel", stats)
