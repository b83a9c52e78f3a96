"""Seeded random instances for the catalog problems.

Distributions (every choice drawn from one ``random.Random(seed)``):

* vertex-cover, max-cut: atoms v1..vn; each unordered pair {vi, vj}, i < j,
  becomes an edge with probability p, stored in both directions.
* hitting-set-d: atoms v1..vn; each vertex subset of size 1..d becomes an
  edge with probability p, stored as one d-tuple padded by repeating its
  last vertex.
* max-sat: clause atoms c1..cn then variable atoms v1..vm; each (variable,
  clause) pair occurs with probability p, with a fair coin choosing P or N.
* max-2sat: atoms v1..vn; each ordered pair (u, v), u = v allowed, gets each
  of C0, C1, C2 independently with probability p.
"""

from __future__ import annotations

import itertools
import random

from .errors import ValidationError
from .structure import FiniteStructure

PROBLEMS = ("vertex-cover", "hitting-set-2", "hitting-set-3", "max-sat", "max-cut", "max-2sat")


def _graph(n: int, p: float, rng: random.Random) -> FiniteStructure:
    atoms = tuple(f"v{i}" for i in range(1, n + 1))
    edges = []
    for u, v in itertools.combinations(atoms, 2):
        if rng.random() < p:
            edges += [(u, v), (v, u)]
    return FiniteStructure(atoms, {"E": edges})


def _hitting_set(n: int, p: float, d: int, rng: random.Random) -> FiniteStructure:
    atoms = tuple(f"v{i}" for i in range(1, n + 1))
    edges = []
    for size in range(1, d + 1):
        for subset in itertools.combinations(atoms, size):
            if rng.random() < p:
                edges.append(subset + (subset[-1],) * (d - size))
    return FiniteStructure(atoms, {"E": edges})


def _max_sat(clauses: int, variables: int, p: float, rng: random.Random) -> FiniteStructure:
    cs = [f"c{i}" for i in range(1, clauses + 1)]
    vs = [f"v{i}" for i in range(1, variables + 1)]
    pos, neg = [], []
    for c in cs:
        for v in vs:
            if rng.random() < p:
                (pos if rng.random() < 0.5 else neg).append((v, c))
    return FiniteStructure(tuple(cs + vs), {"P": pos, "N": neg})


def _max_2sat(n: int, p: float, rng: random.Random) -> FiniteStructure:
    atoms = tuple(f"v{i}" for i in range(1, n + 1))
    extents: dict[str, list] = {"C0": [], "C1": [], "C2": []}
    for pair in itertools.product(atoms, repeat=2):
        for name in ("C0", "C1", "C2"):
            if rng.random() < p:
                extents[name].append(pair)
    return FiniteStructure(atoms, extents)


def generate(problem: str, size: int, density: float, rng: random.Random, variables: int | None = None) -> FiniteStructure:
    if size < 0:
        raise ValidationError("size must be non-negative")
    if not 0.0 <= density <= 1.0:
        raise ValidationError("density must lie in [0, 1]")
    if problem in ("vertex-cover", "max-cut"):
        return _graph(size, density, rng)
    if problem == "hitting-set-2":
        return _hitting_set(size, density, 2, rng)
    if problem == "hitting-set-3":
        return _hitting_set(size, density, 3, rng)
    if problem == "max-sat":
        return _max_sat(size, size if variables is None else variables, density, rng)
    if problem == "max-2sat":
        return _max_2sat(size, density, rng)
    raise ValidationError(f"no generator for {problem!r}; known: {', '.join(PROBLEMS)}")
