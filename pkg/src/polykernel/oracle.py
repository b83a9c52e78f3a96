"""Exhaustive ground-truth solvers for desk-scale instances.

Nothing here goes through the grounding module or the kernelizers: the
matrix is evaluated directly on the structure and a candidate assignment.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BudgetExceeded
from .hypergraph import Hypergraph
from .outcome import KernelOutcome, Verdict
from .spec import Kind, ProblemSpec
from .structure import FiniteStructure, Tup


@dataclass(frozen=True)
class OracleBudget:
    max_universe: int = 5
    max_ground_atoms: int = 20
    max_candidates: int = 1 << 21


DEFAULT_BUDGET = OracleBudget()
OVERRIDE_BUDGET = OracleBudget(max_universe=64, max_ground_atoms=64, max_candidates=1 << 26)


def _check_universe(structure: FiniteStructure, budget: OracleBudget) -> None:
    if structure.size > budget.max_universe:
        raise BudgetExceeded(f"universe of {structure.size} atoms exceeds the oracle budget of {budget.max_universe}")


def _ground_atoms(spec: ProblemSpec, structure: FiniteStructure, budget: OracleBudget) -> list[tuple[str, Tup]]:
    atoms = [
        (sym.name, t)
        for sym in spec.vocabulary.solution_symbols
        for t in itertools.product(structure.atoms, repeat=sym.arity)
    ]
    if len(atoms) > budget.max_ground_atoms:
        raise BudgetExceeded(f"{len(atoms)} ground solution atoms exceed the oracle budget of {budget.max_ground_atoms}")
    return atoms


def _compile(spec: ProblemSpec, structure: FiniteStructure, binding: dict[str, str]):
    """Rows of (fixed truth value or None, solution key, positive) per literal."""
    vocab = spec.vocabulary
    rows = []
    for row in spec.matrix:
        compiled = []
        for lit in row:
            args = tuple(binding[v] for v in lit.args)
            if vocab.is_solution(lit.symbol):
                compiled.append((None, (lit.symbol, args), lit.positive))
            else:
                compiled.append((structure.holds(lit.symbol, args) == lit.positive, None, None))
        rows.append(compiled)
    return rows


def _literal(entry, chosen: set) -> bool:
    value, key, positive = entry
    if key is None:
        return value
    return (key in chosen) == positive


def _cnf_holds(rows, chosen: set) -> bool:
    return all(any(_literal(e, chosen) for e in row) for row in rows)


def _dnf_holds(rows, chosen: set) -> bool:
    return any(all(_literal(e, chosen) for e in row) for row in rows)


def exact_opt_min(spec: ProblemSpec, structure: FiniteStructure, budget: OracleBudget = DEFAULT_BUDGET) -> int | None:
    """Least |S| satisfying the universal CNF, or None when no S does."""
    if spec.kind is not Kind.MINF:
        raise ValueError("exact_opt_min needs a minf specification")
    _check_universe(structure, budget)
    ground = _ground_atoms(spec, structure, budget)
    formulas = [
        _compile(spec, structure, dict(zip(spec.x_vars, x)))
        for x in itertools.product(structure.atoms, repeat=spec.c_x)
    ]

    def feasible(chosen: set) -> bool:
        return all(_cnf_holds(rows, chosen) for rows in formulas)

    # S occurs only positively, so the full relation is the most permissive choice.
    if not feasible(set(ground)):
        return None
    candidates = 0
    for size in range(len(ground) + 1):
        for combo in itertools.combinations(ground, size):
            candidates += 1
            if candidates > budget.max_candidates:
                raise BudgetExceeded(f"more than {budget.max_candidates} candidate assignments")
            if feasible(set(combo)):
                return size
    raise AssertionError("unreachable: the full relation is feasible")


def exact_opt_max(spec: ProblemSpec, structure: FiniteStructure, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Maximum over all solution assignments of the number of satisfied x tuples."""
    if spec.kind is Kind.MINF:
        raise ValueError("exact_opt_max needs a maxnp or maxsnp specification")
    _check_universe(structure, budget)
    ground = _ground_atoms(spec, structure, budget)
    if 2 ** len(ground) > budget.max_candidates:
        raise BudgetExceeded(f"2^{len(ground)} assignments exceed the budget of {budget.max_candidates}")
    per_x = []
    for x in itertools.product(structure.atoms, repeat=spec.c_x):
        options = []
        for y in itertools.product(structure.atoms, repeat=spec.c_y):
            binding = dict(zip(spec.x_vars, x))
            binding.update(zip(spec.y_vars, y))
            options.append(_compile(spec, structure, binding))
        per_x.append(options)
    best = 0
    for mask in range(2 ** len(ground)):
        chosen = {g for i, g in enumerate(ground) if mask >> i & 1}
        value = sum(1 for options in per_x if any(_dnf_holds(rows, chosen) for rows in options))
        best = max(best, value)
        if best == len(per_x):
            break
    return best


def exact_min_hitting_set(hypergraph: Hypergraph, budget: OracleBudget = DEFAULT_BUDGET) -> int | None:
    """Smallest hitting set size, or None if some edge is empty."""
    edges = [set(e) for e in hypergraph.edges]
    if any(not e for e in edges):
        return None
    vertices = sorted({v for e in edges for v in e}, key=hypergraph.index.__getitem__)
    candidates = 0
    for size in range(len(vertices) + 1):
        for combo in itertools.combinations(vertices, size):
            candidates += 1
            if candidates > budget.max_candidates:
                raise BudgetExceeded(f"more than {budget.max_candidates} candidate hitting sets")
            chosen = set(combo)
            if all(e & chosen for e in edges):
                return size
    return 0


def exact_opt(spec: ProblemSpec, structure: FiniteStructure, budget: OracleBudget = DEFAULT_BUDGET) -> int | None:
    if spec.kind is Kind.MINF:
        return exact_opt_min(spec, structure, budget)
    return exact_opt_max(spec, structure, budget)


def answer(spec: ProblemSpec, opt: int | None, k: int) -> bool:
    """Standard-parameterization answer given a known optimum."""
    if spec.kind is Kind.MINF:
        return opt is not None and opt <= k
    return opt >= k


def decide(spec: ProblemSpec, structure: FiniteStructure, k: int, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """True for YES: opt <= k (minf) or opt >= k (maxnp/maxsnp)."""
    return answer(spec, exact_opt(spec, structure, budget), k)


def check_kernel_equivalence(
    spec: ProblemSpec,
    structure: FiniteStructure,
    outcome: KernelOutcome,
    k: int,
    budget: OracleBudget = DEFAULT_BUDGET,
    original: bool | None = None,
) -> bool:
    """Compare oracle answers on the input and on the kernel output.

    ``original`` may carry a precomputed answer for (structure, k).
    """
    if original is None:
        original = decide(spec, structure, k, budget)
    if outcome.verdict is Verdict.TRIVIAL_NO and original:
        return False
    if outcome.verdict is Verdict.TRIVIAL_YES and not original:
        return False
    return original == decide(spec, outcome.structure, outcome.k, budget)
