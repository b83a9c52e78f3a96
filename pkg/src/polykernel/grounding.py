"""Grounding: specialize the matrix at concrete tuples.

Input-relation literals are evaluated against the structure; what remains
is a CNF (minf) or DNF (maxnp/maxsnp) over ground solution atoms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

from .spec import Kind, Literal, ProblemSpec
from .structure import FiniteStructure, Tup, TupleSet, enumerate_tuples


@dataclass(frozen=True)
class GroundLiteral:
    positive: bool
    symbol: str
    args: Tup

    def negated(self) -> GroundLiteral:
        return GroundLiteral(not self.positive, self.symbol, self.args)

    def __str__(self) -> str:
        return f"{'' if self.positive else '!'}{self.symbol}({','.join(self.args)})"


# Sorted, duplicate-free tuples; equality is therefore set equality.
GroundClause = tuple[GroundLiteral, ...]
GroundDisjunct = tuple[GroundLiteral, ...]


def canonical_ground(literals: Iterable[GroundLiteral], structure: FiniteStructure | None = None) -> tuple[GroundLiteral, ...]:
    """Sort ground literals by symbol, sign, then argument tuple.

    With a structure the arguments compare in canonical atom order, otherwise
    by atom name.
    """
    if structure is None:
        key = lambda lit: (lit.symbol, not lit.positive, lit.args)  # noqa: E731
    else:
        key = lambda lit: (lit.symbol, not lit.positive, structure.atom_key(lit.args))  # noqa: E731
    return tuple(sorted(set(literals), key=key))


@dataclass(frozen=True)
class GroundCNF:
    clauses: tuple[GroundClause, ...] = ()

    @property
    def has_empty_clause(self) -> bool:
        return any(not c for c in self.clauses)


@dataclass(frozen=True)
class GroundDNF:
    disjuncts: tuple[GroundDisjunct, ...] = ()


@dataclass(frozen=True)
class DisjunctSet:
    """Union of the ground disjuncts over all producing y, with provenance.

    ``provenance[d]`` lists the y tuples whose DNF contains ``d``, in
    enumeration (lexicographic) order.
    """

    disjuncts: tuple[GroundDisjunct, ...] = ()
    provenance: Mapping[GroundDisjunct, tuple[Tup, ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for d in self.disjuncts:
            if not self.provenance.get(d):
                raise ValueError(f"disjunct {d} has no producing tuple")

    def __len__(self) -> int:
        return len(self.disjuncts)

    def __bool__(self) -> bool:
        return bool(self.disjuncts)


class PartialAssignment(frozenset):
    """A set of ground literals that contains no complementary pair."""

    def __new__(cls, literals: Iterable[GroundLiteral] = ()):
        self = super().__new__(cls, literals)
        for lit in self:
            if lit.negated() in self:
                raise ValueError(f"partial assignment contains both {lit} and its negation")
        return self


@lru_cache(maxsize=64)
def _split_rows(spec: ProblemSpec) -> tuple[tuple[tuple[Literal, ...], tuple[Literal, ...]], ...]:
    vocab = spec.vocabulary
    return tuple(
        (
            tuple(lit for lit in row if not vocab.is_solution(lit.symbol)),
            tuple(lit for lit in row if vocab.is_solution(lit.symbol)),
        )
        for row in spec.matrix
    )


def _ground(lit: Literal, binding: dict[str, str]) -> Tup:
    return tuple(binding[v] for v in lit.args)


def specialize_min(spec: ProblemSpec, structure: FiniteStructure, x: Tup) -> GroundCNF:
    if spec.kind is not Kind.MINF:
        raise ValueError("specialize_min needs a minf specification")
    if len(x) != spec.c_x:
        raise ValueError(f"x must have {spec.c_x} components")
    binding = dict(zip(spec.x_vars, x))
    clauses: dict[GroundClause, None] = {}
    for inputs, solutions in _split_rows(spec):
        if any(structure.holds(lit.symbol, _ground(lit, binding)) == lit.positive for lit in inputs):
            continue
        ground = (GroundLiteral(True, lit.symbol, _ground(lit, binding)) for lit in solutions)
        clauses.setdefault(canonical_ground(ground, structure))
    return GroundCNF(tuple(clauses))


def specialize_max(spec: ProblemSpec, structure: FiniteStructure, x: Tup, y: Tup) -> GroundDNF:
    if spec.kind is Kind.MINF:
        raise ValueError("specialize_max needs a maxnp or maxsnp specification")
    if len(x) != spec.c_x or len(y) != spec.c_y:
        raise ValueError(f"x and y must have {spec.c_x} and {spec.c_y} components")
    binding = dict(zip(spec.x_vars, x))
    binding.update(zip(spec.y_vars, y))
    disjuncts: dict[GroundDisjunct, None] = {}
    for inputs, solutions in _split_rows(spec):
        if not all(structure.holds(lit.symbol, _ground(lit, binding)) == lit.positive for lit in inputs):
            continue
        ground = {GroundLiteral(lit.positive, lit.symbol, _ground(lit, binding)) for lit in solutions}
        if any(lit.negated() in ground for lit in ground):
            continue
        disjuncts.setdefault(canonical_ground(ground, structure))
    return GroundDNF(tuple(disjuncts))


def compute_D(spec: ProblemSpec, structure: FiniteStructure, x: Tup) -> DisjunctSet:
    provenance: dict[GroundDisjunct, list[Tup]] = {}
    for y in enumerate_tuples(structure, spec.c_y):
        for d in specialize_max(spec, structure, x, y).disjuncts:
            provenance.setdefault(d, []).append(y)
    return DisjunctSet(tuple(provenance), {d: tuple(ys) for d, ys in provenance.items()})


def compute_Y(spec: ProblemSpec, structure: FiniteStructure, x: Tup) -> TupleSet:
    ys = [y for y in enumerate_tuples(structure, spec.c_y) if specialize_max(spec, structure, x, y).disjuncts]
    return TupleSet(spec.c_y, tuple(ys))


def ground_all(spec: ProblemSpec, structure: FiniteStructure) -> dict[Tup, DisjunctSet]:
    """D_A(x) for every x in canonical order."""
    return {x: compute_D(spec, structure, x) for x in enumerate_tuples(structure, spec.c_x)}


def compute_X(spec: ProblemSpec, structure: FiniteStructure) -> TupleSet:
    # Contradictory disjuncts are gone, so any surviving disjunct is satisfiable.
    xs = [x for x, d in ground_all(spec, structure).items() if d]
    return TupleSet(spec.c_x, tuple(xs))


def satisfiable_under(d: GroundDisjunct, assignment: Iterable[GroundLiteral]) -> bool:
    """True iff no literal of the partial assignment contradicts ``d``."""
    literals = set(d)
    return not any(lit.negated() in literals for lit in assignment)


def render_literals(literals: Iterable[GroundLiteral], joiner: str) -> str:
    text = f" {joiner} ".join(map(str, literals))
    return text or ("false" if joiner == "|" else "true")
