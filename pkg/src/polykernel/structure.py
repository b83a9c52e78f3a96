"""Vocabularies, finite relational structures and tuple enumeration."""

from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping

from .errors import ValidationError

Tup = tuple[str, ...]

ATOM_RE = re.compile(r"[^\s(),:#]+")


@dataclass(frozen=True)
class Symbol:
    name: str
    arity: int

    def __str__(self) -> str:
        return f"{self.name}/{self.arity}"


@dataclass(frozen=True)
class Vocabulary:
    input_symbols: tuple[Symbol, ...]
    solution_symbols: tuple[Symbol, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "input_symbols", tuple(self.input_symbols))
        object.__setattr__(self, "solution_symbols", tuple(self.solution_symbols))
        names = Counter(s.name for s in self.symbols)
        dupes = sorted(n for n, c in names.items() if c > 1)
        if dupes:
            raise ValidationError(f"duplicate relation symbols: {', '.join(dupes)}")
        for sym in self.symbols:
            if sym.arity < 1:
                raise ValidationError(f"relation {sym.name} must have arity >= 1")

    @property
    def symbols(self) -> tuple[Symbol, ...]:
        return self.input_symbols + self.solution_symbols

    @cached_property
    def _arity(self) -> dict[str, int]:
        return {s.name: s.arity for s in self.symbols}

    @cached_property
    def _solution_names(self) -> frozenset[str]:
        return frozenset(s.name for s in self.solution_symbols)

    def arity(self, name: str) -> int:
        return self._arity[name]

    def declares(self, name: str) -> bool:
        return name in self._arity

    def is_solution(self, name: str) -> bool:
        return name in self._solution_names

    def is_input(self, name: str) -> bool:
        return name in self._arity and name not in self._solution_names

    @property
    def max_input_arity(self) -> int:
        """Largest arity among the input relations (0 if there are none)."""
        return max((s.arity for s in self.input_symbols), default=0)


@dataclass(frozen=True)
class FiniteStructure:
    """A universe of atoms together with the extents of the input relations.

    ``atoms`` keeps declaration order, which is the canonical order used for
    every enumeration and tie-break. Extents are deduplicated on construction
    and keep first-insertion order.
    """

    atoms: tuple[str, ...]
    extents: Mapping[str, tuple[Tup, ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "atoms", tuple(self.atoms))
        object.__setattr__(
            self,
            "extents",
            {name: tuple(dict.fromkeys(tuple(t) for t in tuples)) for name, tuples in self.extents.items()},
        )

    @cached_property
    def index(self) -> dict[str, int]:
        """Position of each atom in canonical order."""
        return {a: i for i, a in reversed(list(enumerate(self.atoms)))}

    @cached_property
    def _members(self) -> dict[str, frozenset[Tup]]:
        return {name: frozenset(tuples) for name, tuples in self.extents.items()}

    def holds(self, name: str, tup: Tup) -> bool:
        members = self._members.get(name)
        return members is not None and tup in members

    @property
    def size(self) -> int:
        return len(self.atoms)

    @property
    def tuple_count(self) -> int:
        return sum(len(t) for t in self.extents.values())

    def atom_key(self, tup: Iterable[str]) -> tuple[int, ...]:
        """Sort key placing tuples in lexicographic canonical-atom order."""
        return tuple(self.index[a] for a in tup)


@dataclass(frozen=True)
class TupleSet:
    arity: int
    tuples: tuple[Tup, ...] = ()

    def __post_init__(self) -> None:
        tuples = tuple(dict.fromkeys(tuple(t) for t in self.tuples))
        for t in tuples:
            if len(t) != self.arity:
                raise ValueError(f"tuple {t} does not have arity {self.arity}")
        object.__setattr__(self, "tuples", tuples)

    def __len__(self) -> int:
        return len(self.tuples)

    def __iter__(self) -> Iterator[Tup]:
        return iter(self.tuples)

    @cached_property
    def _members(self) -> frozenset[Tup]:
        return frozenset(self.tuples)

    def __contains__(self, tup: object) -> bool:
        return tup in self._members


@dataclass(frozen=True)
class SolutionAssignment:
    """Extents of the solution relations; absent symbols are empty."""

    extents: Mapping[str, frozenset[Tup]] = field(default_factory=dict)

    def holds(self, name: str, tup: Tup) -> bool:
        members = self.extents.get(name)
        return members is not None and tup in members

    @property
    def weight(self) -> int:
        return sum(len(t) for t in self.extents.values())


def enumerate_tuples(structure: FiniteStructure, arity: int) -> Iterator[Tup]:
    """All ``arity``-tuples over the atoms, lexicographic in canonical order."""
    if arity < 0:
        raise ValueError("arity must be non-negative")
    return itertools.product(structure.atoms, repeat=arity)


def restrict_structure(structure: FiniteStructure, keep: Iterable[str]) -> FiniteStructure:
    keep = set(keep)
    unknown = keep - set(structure.atoms)
    if unknown:
        raise ValidationError(f"cannot restrict to unknown atoms: {', '.join(sorted(unknown))}")
    extents = {
        name: tuple(t for t in tuples if all(a in keep for a in t))
        for name, tuples in structure.extents.items()
    }
    return FiniteStructure(tuple(a for a in structure.atoms if a in keep), extents)


def components(tuples: Iterable[Tup]) -> set[str]:
    return {a for t in tuples for a in t}


def validate_structure(structure: FiniteStructure, vocab: Vocabulary) -> list[str]:
    """Return a list of problems with ``structure`` under ``vocab``; empty means valid."""
    errors = []
    counts = Counter(structure.atoms)
    for atom in structure.atoms:
        if counts[atom] > 1:
            errors.append(f"duplicate atom {atom!r}")
            counts[atom] = 1
        if not ATOM_RE.fullmatch(atom):
            errors.append(f"malformed atom name {atom!r}")
    declared = set(structure.atoms)
    for name, tuples in structure.extents.items():
        if not vocab.is_input(name):
            errors.append(f"relation {name!r} is not an input symbol of the vocabulary")
            continue
        arity = vocab.arity(name)
        for t in tuples:
            if len(t) != arity:
                errors.append(f"arity mismatch in {name}: tuple ({','.join(t)}) has {len(t)} components, expected {arity}")
            missing = [a for a in t if a not in declared]
            if missing:
                errors.append(f"undeclared atom(s) {', '.join(map(repr, missing))} in {name}({','.join(t)})")
    return errors


def conform_structure(structure: FiniteStructure, vocab: Vocabulary) -> FiniteStructure:
    """Validate and normalize: extents in vocabulary order, missing relations empty.

    Raises ValidationError listing every problem found.
    """
    errors = validate_structure(structure, vocab)
    if errors:
        raise ValidationError("; ".join(errors))
    extents = {s.name: structure.extents.get(s.name, ()) for s in vocab.input_symbols}
    return FiniteStructure(structure.atoms, extents)
