"""Kernelization for MAX NP and MAX SNP problems."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial
from typing import Mapping

from .errors import DegenerateSpecError, ValidationError
from .grounding import DisjunctSet, GroundDisjunct, ground_all
from .hypergraph import Hypergraph, sunflower_reduce
from .outcome import KernelOutcome, Verdict
from .spec import Kind, ProblemSpec, solution_occurrence_bound
from .structure import FiniteStructure, Tup, components, conform_structure, restrict_structure


@dataclass(frozen=True)
class ReducedDisjunctSet:
    """D*(x) together with one selected witness y per kept disjunct."""

    disjuncts: tuple[GroundDisjunct, ...] = ()
    witness: Mapping[GroundDisjunct, Tup] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.disjuncts)

    @property
    def witnesses(self) -> tuple[Tup, ...]:
        return tuple(dict.fromkeys(self.witness[d] for d in self.disjuncts))


def disjunct_bound(s: int, k: int) -> int:
    return (s * k + 1) ** s * factorial(s) * s


def compute_D_star(D: DisjunctSet, s: int, k: int, trace: list | None = None) -> ReducedDisjunctSet:
    """Shrink D by sunflower petal deletion, preserving satisfiability under small partial assignments.

    For every partial assignment L with at most s*k literals, the result has
    a disjunct satisfiable under L iff D does.
    """
    if any(len(d) > s for d in D.disjuncts):
        raise ValueError(f"disjuncts must have at most s = {s} literals")
    if () in D.provenance:
        # The empty disjunct is satisfiable under every L and dominates the rest.
        return ReducedDisjunctSet(((),), {(): D.provenance[()][0]})
    kept = list(D.disjuncts)
    bound = disjunct_bound(s, k)
    if len(kept) > bound:
        literals = tuple(dict.fromkeys(lit for d in kept for lit in d))
        by_edge = {frozenset(d): d for d in kept}
        hypergraph = Hypergraph(literals, tuple(by_edge))
        reduced = sunflower_reduce(hypergraph, s * k + 2, bound, trace)
        survivors = set(reduced.edges)
        kept = [d for d in kept if frozenset(d) in survivors]
    return ReducedDisjunctSet(tuple(kept), {d: D.provenance[d][0] for d in kept})


def _require_max(spec: ProblemSpec, k: int) -> int:
    if spec.kind is Kind.MINF:
        raise ValidationError(f"{spec.name} is a minf specification, not maxnp/maxsnp")
    if k < 0:
        raise ValidationError("k must be non-negative")
    s = solution_occurrence_bound(spec)
    if s == 0:
        raise DegenerateSpecError(f"{spec.name} has no solution-symbol occurrences; the kernel bound degenerates")
    return s


def _base_stats(structure: FiniteStructure, grounded: dict[Tup, DisjunctSet]) -> dict[str, int]:
    return {
        "atoms_before": structure.size,
        "tuples_before": structure.tuple_count,
        "x_count": sum(1 for d in grounded.values() if d),
        "disjuncts_before": sum(len(d) for d in grounded.values()),
    }


def _finish(structure, keep, k, verdict, reason, stats) -> KernelOutcome:
    reduced = restrict_structure(structure, keep)
    stats.update(atoms_after=reduced.size, tuples_after=reduced.tuple_count)
    return KernelOutcome(reduced, k, verdict, reason, stats)


def _threshold(spec, structure, k, s, grounded, stats) -> KernelOutcome | None:
    X = [x for x, d in grounded.items() if d]
    need = k * 2**s
    if len(X) < need:
        return None
    chosen = X[:need]
    keep = components(chosen)
    if spec.c_y:
        # One witness per x: the lexicographically smallest y in Y_A(x).
        keep |=components(min((ys[0] for ys in grounded[x].provenance.values()), key=structure.atom_key) for x in chosen)
    stats.update(selected_x=len(chosen))
    return _finish(structure, keep, k, Verdict.TRIVIAL_YES, "threshold", stats)


def threshold_check(spec: ProblemSpec, structure: FiniteStructure, k: int) -> KernelOutcome | None:
    """Certified yes-instance when |X_A| >= k * 2^s, otherwise None."""
    s = _require_max(spec, k)
    structure = conform_structure(structure, spec.vocabulary)
    grounded = ground_all(spec, structure)
    return _threshold(spec, structure, k, s, grounded, _base_stats(structure, grounded))


def _too_large(spec, structure, k, stats) -> KernelOutcome | None:
    # More than |A|^c_x required tuples can never be met.
    if k > structure.size**spec.c_x:
        return _finish(structure, (), k, Verdict.TRIVIAL_NO, "k-exceeds-tuples", stats)
    return None


def kernelize_max(spec: ProblemSpec, structure: FiniteStructure, k: int, trace: list | None = None) -> KernelOutcome:
    s = _require_max(spec, k)
    structure = conform_structure(structure, spec.vocabulary)
    grounded = ground_all(spec, structure)
    stats = _base_stats(structure, grounded)
    trivial = _too_large(spec, structure, k, stats) or _threshold(spec, structure, k, s, grounded, stats)
    if trivial is not None:
        return trivial

    keep: set[str] = set()
    kept_disjuncts = witnesses = 0
    for x, D in grounded.items():
        if not D:
            continue
        reduced = compute_D_star(D, s, k, trace)
        keep |= components([x, *reduced.witnesses])
        kept_disjuncts += len(reduced)
        witnesses += len(reduced.witnesses)
    stats.update(disjuncts_after=kept_disjuncts, witnesses=witnesses)
    return _finish(structure, keep, k, Verdict.REDUCED, "disjunct-kernel", stats)


def kernelize_maxsnp(spec: ProblemSpec, structure: FiniteStructure, k: int) -> KernelOutcome:
    s = _require_max(spec, k)
    if spec.kind is not Kind.MAXSNP or spec.c_y:
        raise ValidationError(f"{spec.name} is not a maxsnp specification")
    structure = conform_structure(structure, spec.vocabulary)
    grounded = ground_all(spec, structure)
    stats = _base_stats(structure, grounded)
    trivial = _too_large(spec, structure, k, stats) or _threshold(spec, structure, k, s, grounded, stats)
    if trivial is not None:
        return trivial
    X = [x for x, d in grounded.items() if d]
    return _finish(structure, components(X), k, Verdict.REDUCED, "snp-restriction", stats)


def maxnp_atom_bound(spec: ProblemSpec, k: int, x_count: int) -> int:
    s = solution_occurrence_bound(spec)
    return spec.c_x * x_count + spec.c_y * x_count * disjunct_bound(s, k)


def maxsnp_atom_bound(spec: ProblemSpec, k: int) -> int:
    return spec.c_x * k * 2 ** solution_occurrence_bound(spec)
