"""Instance files and run manifests.

Instance format, one item per line, ``\\n`` line endings::

    structure
    atoms a b c
    rel E: (a,b) (b,a)
    k 2
    end

The ``k`` line is optional on input and written whenever a parameter is known.
"""

from __future__ import annotations

import re
from typing import Mapping

from .errors import ParseError
from .structure import ATOM_RE, FiniteStructure

_TUPLE_RE = re.compile(r"\(([^()\s,]+(?:,[^()\s,]+)*)\)")
_REL_RE = re.compile(r"rel\s+([A-Za-z_][A-Za-z0-9_]*):")


def write_instance(structure: FiniteStructure, k: int | None = None) -> str:
    lines = ["structure", " ".join(["atoms", *structure.atoms])]
    for name, tuples in structure.extents.items():
        lines.append(" ".join([f"rel {name}:", *(f"({','.join(t)})" for t in tuples)]))
    if k is not None:
        lines.append(f"k {k}")
    lines.append("end")
    return "\n".join(lines) + "\n"


def read_instance(text: str) -> tuple[FiniteStructure, int | None]:
    rows = [(n, line.rstrip()) for n, line in enumerate(text.splitlines(), start=1)]
    rows = [(n, line) for n, line in rows if line.strip() and not line.lstrip().startswith("#")]
    for n, line in rows:
        if "\t" in line:
            raise ParseError("tabs are not allowed in instance files", n, line.index("\t") + 1)
    if not rows or rows[0][1].strip() != "structure":
        n = rows[0][0] if rows else 1
        raise ParseError("instance must start with 'structure'", n, 1)
    if len(rows) < 2 or rows[1][1].split()[0] != "atoms":
        n = rows[1][0] if len(rows) > 1 else rows[0][0] + 1
        raise ParseError("expected 'atoms' line", n, 1)
    n, line = rows[1]
    atoms = line.split()[1:]
    for atom in atoms:
        if not ATOM_RE.fullmatch(atom):
            raise ParseError(f"malformed atom name '{atom}'", n, line.index(atom) + 1)

    extents: dict[str, list[tuple[str, ...]]] = {}
    k = None
    ended = False
    for n, line in rows[2:]:
        if ended:
            raise ParseError("content after 'end'", n, 1)
        stripped = line.strip()
        if stripped == "end":
            ended = True
            continue
        if stripped.startswith("rel"):
            m = _REL_RE.match(stripped)
            if not m:
                raise ParseError("malformed relation line, expected 'rel Name: (a,b) ...'", n, 1)
            name = m.group(1)
            if name in extents:
                raise ParseError(f"relation {name} listed twice", n, 1)
            tuples = []
            for m_tok in re.finditer(r"\S+", stripped[m.end():]):
                token = m_tok.group()
                t = _TUPLE_RE.fullmatch(token)
                if not t:
                    raise ParseError(f"malformed tuple '{token}'", n, line.index(token) + 1)
                tuples.append(tuple(t.group(1).split(",")))
            extents[name] = tuples
        elif stripped.startswith("k ") or stripped == "k":
            if k is not None:
                raise ParseError("parameter k given twice", n, 1)
            parts = stripped.split()
            if len(parts) != 2 or not parts[1].isdigit():
                raise ParseError("expected 'k <non-negative int>'", n, 1)
            k = int(parts[1])
        else:
            raise ParseError(f"unexpected line '{stripped}'", n, 1)
    if not ended:
        raise ParseError("missing 'end'", rows[-1][0] + 1, 1)
    return FiniteStructure(tuple(atoms), extents), k


def write_manifest(fields: Mapping[str, object]) -> str:
    return "".join(f"{key}={fields[key]}\n" for key in sorted(fields))


def read_manifest(text: str) -> dict[str, str]:
    return dict(line.split("=", 1) for line in text.splitlines() if line)
