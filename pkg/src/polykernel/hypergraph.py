"""Hypergraphs, constructive sunflowers, and the edge-deletion hitting-set kernel."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from math import factorial
from typing import Hashable, Iterable, Sequence

from .errors import InvariantViolation, ValidationError

Edge = frozenset


@dataclass(frozen=True)
class Hypergraph:
    """Vertices in a fixed canonical order plus a duplicate-free edge family."""

    vertices: tuple
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        vertices = tuple(self.vertices)
        if len(set(vertices)) != len(vertices):
            raise ValueError("duplicate vertex labels")
        edges = tuple(dict.fromkeys(frozenset(e) for e in self.edges))
        known = set(vertices)
        for e in edges:
            if not e <= known:
                raise ValueError(f"edge {set(e)} uses vertices outside the vertex set")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable[Hashable]], vertex_order: Sequence[Hashable] | None = None) -> Hypergraph:
        """Vertices are the union of the edges, ordered by ``vertex_order`` or first appearance."""
        edges = [tuple(e) for e in edges]
        seen = dict.fromkeys(v for e in edges for v in e)
        if vertex_order is not None:
            rank = {v: i for i, v in enumerate(vertex_order)}
            vertices = tuple(sorted(seen, key=rank.__getitem__))
        else:
            vertices = tuple(seen)
        return cls(vertices, tuple(frozenset(e) for e in edges))

    @cached_property
    def index(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    @property
    def dimension(self) -> int:
        return max((len(e) for e in self.edges), default=0)

    def edge_key(self, edge: Edge) -> tuple[int, ...]:
        """Canonical comparison key: sorted vertex positions."""
        return tuple(sorted(self.index[v] for v in edge))

    def canonical_edges(self) -> list[Edge]:
        return sorted(self.edges, key=self.edge_key)

    def without_isolated(self) -> Hypergraph:
        used = {v for e in self.edges for v in e}
        return Hypergraph(tuple(v for v in self.vertices if v in used), self.edges)


@dataclass(frozen=True)
class Sunflower:
    petals: tuple[Edge, ...]
    core: frozenset

    def __len__(self) -> int:
        return len(self.petals)


def verify_sunflower(flower: Sunflower, cardinality: int | None = None) -> bool:
    petals = flower.petals
    if cardinality is not None and len(petals) != cardinality:
        return False
    if not petals or len(set(petals)) != len(petals):
        return False
    if any(not flower.core <= p for p in petals):
        return False
    for i in range(len(petals)):
        for j in range(i + 1, len(petals)):
            if petals[i] & petals[j] != flower.core:
                return False
    return True


def _search(edges: list[Edge], r: int, index: dict) -> list[Edge] | None:
    # Erdos-Rado: a maximal disjoint family either has r members, or some
    # vertex lies in many edges and we recurse on its link.
    if len(edges) < r:
        return None
    chosen: list[Edge] = []
    used: set = set()
    for e in edges:
        if used.isdisjoint(e):
            chosen.append(e)
            used.update(e)
            if len(chosen) == r:
                return chosen
    degree = Counter(v for e in edges for v in e)
    if not degree:
        return None
    pivot = min(degree, key=lambda v: (-degree[v], index[v]))
    link = sorted((e - {pivot} for e in edges if pivot in e), key=lambda e: sorted(index[v] for v in e))
    found = _search(link, r, index)
    if found is None:
        return None
    return [p | {pivot} for p in found]


def _make_sunflower(petals: list[Edge], key) -> Sunflower:
    return Sunflower(tuple(sorted(petals, key=key)), frozenset.intersection(*petals))


def uniform_sunflower_bound(r: int, d: int) -> int:
    """Edge count above which a d-uniform hypergraph must contain an r-sunflower."""
    return (r - 1) ** d * factorial(d)


def find_sunflower_uniform(hypergraph: Hypergraph, r: int) -> Sunflower | None:
    if r < 1:
        raise ValueError("sunflower cardinality must be at least 1")
    sizes = {len(e) for e in hypergraph.edges}
    if len(sizes) > 1:
        raise ValidationError(f"hypergraph is not uniform (edge sizes {sorted(sizes)})")
    found = _search(hypergraph.canonical_edges(), r, hypergraph.index)
    return None if found is None else _make_sunflower(found, hypergraph.edge_key)


def find_sunflower(hypergraph: Hypergraph, r: int) -> Sunflower | None:
    """Find an r-sunflower in a hypergraph of mixed edge sizes.

    Cardinality classes are scanned in ascending order. The first class
    large enough for the uniform guarantee is searched; if none is, every
    class is tried opportunistically.
    """
    if r < 1:
        raise ValueError("sunflower cardinality must be at least 1")
    classes: dict[int, list[Edge]] = {}
    for e in hypergraph.canonical_edges():
        if not e:
            raise ValidationError("empty edges are not allowed in sunflower search")
        classes.setdefault(len(e), []).append(e)
    order = sorted(classes)
    guaranteed = [d for d in order if len(classes[d]) > uniform_sunflower_bound(r, d)]
    for d in guaranteed[:1] or order:
        found = _search(classes[d], r, hypergraph.index)
        if found is not None:
            return _make_sunflower(found, hypergraph.edge_key)
    return None


def sunflower_reduce(hypergraph: Hypergraph, r: int, max_edges: int, trace: list | None = None) -> Hypergraph:
    """Delete one petal of an r-sunflower while more than ``max_edges`` edges remain.

    The caller must pick ``max_edges`` at or above the mixed-dimension
    guarantee for r; a failed search above it raises InvariantViolation.
    Deleted petals are the lexicographically largest of their sunflower.
    """
    edges = hypergraph.canonical_edges()
    key = hypergraph.edge_key
    while len(edges) > max_edges:
        current = Hypergraph(hypergraph.vertices, tuple(edges))
        flower = find_sunflower(current, r)
        if flower is None or not verify_sunflower(flower, r):
            raise InvariantViolation(f"no valid sunflower of cardinality {r} among {len(edges)} edges (bound {max_edges})")
        victim = max(flower.petals, key=key)
        edges.remove(victim)
        if trace is not None:
            trace.append((flower, victim))
    return Hypergraph(hypergraph.vertices, tuple(edges))


def hitting_set_edge_bound(k: int, s: int) -> int:
    return (k + 1) ** s * factorial(s) * s


def kernelize_hitting_set(hypergraph: Hypergraph, k: int, s: int, trace: list | None = None) -> Hypergraph:
    """Edge-deletion-only kernel for s-Hitting Set.

    Returns H* with E(H*) a subset of E(H), at most (k+1)^s * s! * s edges,
    and no isolated vertices; (H, k) and (H*, k) have the same answer.
    """
    if k < 0:
        raise ValidationError("k must be non-negative")
    if any(not e for e in hypergraph.edges):
        raise ValidationError("empty edges must be resolved before kernelization")
    if hypergraph.dimension > s:
        raise ValidationError(f"hypergraph dimension {hypergraph.dimension} exceeds s = {s}")
    reduced = sunflower_reduce(hypergraph, k + 2, hitting_set_edge_bound(k, s), trace)
    return reduced.without_isolated()
