"""Problem-specification language.

A specification names a problem class (``minf``, ``maxnp`` or ``maxsnp``),
the input and solution vocabularies, the universally (and, for MAX NP,
existentially) quantified variables, and a quantifier-free matrix in CNF
(minf) or DNF (maxnp/maxsnp). The text format is line oriented::

    # Minimum Vertex Cover
    problem vertex-cover
    kind minf
    input E/2
    solution S/1
    forall u v
    cnf
    !E(u,v) | S(u) | S(v)
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .errors import ParseError, ValidationError
from .structure import Symbol, Vocabulary

NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
PROBLEM_RE = re.compile(r"[A-Za-z0-9_.\-]+")
SYMBOL_DECL_RE = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)/([0-9]+)")
LITERAL_RE = re.compile(r"(!?)\s*([A-Za-z_][A-Za-z0-9_]*)\s*\(\s*([^()]*?)\s*\)")


class Kind(str, enum.Enum):
    MINF = "minf"
    MAXNP = "maxnp"
    MAXSNP = "maxsnp"

    @property
    def is_min(self) -> bool:
        return self is Kind.MINF


@dataclass(frozen=True)
class Literal:
    positive: bool
    symbol: str
    args: tuple[str, ...]

    def sort_key(self) -> tuple:
        return (self.symbol, not self.positive, self.args)

    def __str__(self) -> str:
        return f"{'' if self.positive else '!'}{self.symbol}({','.join(self.args)})"


Clause = tuple[Literal, ...]
Disjunct = tuple[Literal, ...]


def canonical_literals(literals) -> tuple[Literal, ...]:
    return tuple(sorted(set(literals), key=Literal.sort_key))


@dataclass(frozen=True)
class ProblemSpec:
    """A parsed first-order problem specification.

    ``matrix`` holds clauses for minf and disjuncts otherwise. Literals in
    each row are sorted and duplicate rows are dropped on construction.
    """

    name: str
    kind: Kind
    vocabulary: Vocabulary
    x_vars: tuple[str, ...]
    y_vars: tuple[str, ...]
    matrix: tuple[tuple[Literal, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", Kind(self.kind))
        object.__setattr__(self, "x_vars", tuple(self.x_vars))
        object.__setattr__(self, "y_vars", tuple(self.y_vars))
        rows = dict.fromkeys(canonical_literals(row) for row in self.matrix)
        object.__setattr__(self, "matrix", tuple(rows))
        problems = _spec_problems(self)
        if problems:
            raise ValidationError("; ".join(problems))

    @property
    def c_x(self) -> int:
        return len(self.x_vars)

    @property
    def c_y(self) -> int:
        return len(self.y_vars)

    @property
    def solution_symbol(self) -> Symbol:
        """The single solution relation S of a minf specification."""
        return self.vocabulary.solution_symbols[0]

    @property
    def connective(self) -> str:
        return "|" if self.kind.is_min else "&"


def _spec_problems(spec: ProblemSpec) -> list[str]:
    vocab = spec.vocabulary
    problems = []
    if not vocab.solution_symbols:
        problems.append("at least one solution symbol is required")
    if spec.kind.is_min and len(vocab.solution_symbols) > 1:
        problems.append("minf specifications take exactly one solution symbol")
    if spec.kind is not Kind.MAXNP and spec.y_vars:
        problems.append(f"kind {spec.kind.value} does not allow existential variables")
    variables = spec.x_vars + spec.y_vars
    if len(set(variables)) != len(variables):
        problems.append("variable names must be distinct")
    if not spec.matrix:
        problems.append("the matrix must contain at least one row")
    for row in spec.matrix:
        if not row:
            problems.append("empty clause or disjunct")
        for lit in row:
            if not vocab.declares(lit.symbol):
                problems.append(f"undeclared symbol {lit.symbol}")
                continue
            if vocab.arity(lit.symbol) != len(lit.args):
                problems.append(f"{lit.symbol} expects {vocab.arity(lit.symbol)} arguments, got {len(lit.args)}")
            for v in lit.args:
                if v not in variables:
                    problems.append(f"undeclared variable {v}")
            if spec.kind.is_min and not lit.positive and vocab.is_solution(lit.symbol):
                problems.append(f"solution symbol {lit.symbol} occurs negated in a minf specification")
    return problems


def solution_occurrence_bound(spec: ProblemSpec) -> int:
    """Maximum number of solution-symbol literals in any clause/disjunct (s)."""
    vocab = spec.vocabulary
    return max((sum(vocab.is_solution(lit.symbol) for lit in row) for row in spec.matrix), default=0)


def render_spec(spec: ProblemSpec) -> str:
    vocab = spec.vocabulary
    lines = [f"problem {spec.name}", f"kind {spec.kind.value}"]
    lines.append(" ".join(["input", *map(str, vocab.input_symbols)]))
    lines.append(" ".join(["solution", *map(str, vocab.solution_symbols)]))
    lines.append(" ".join(["forall", *spec.x_vars]))
    if spec.y_vars:
        lines.append(" ".join(["exists", *spec.y_vars]))
    lines.append("cnf" if spec.kind.is_min else "dnf")
    joiner = f" {spec.connective} "
    for row in spec.matrix:
        lines.append(joiner.join(map(str, row)))
    return "\n".join(lines) + "\n"


class _Line:
    __slots__ = ("number", "text")

    def __init__(self, number: int, text: str):
        self.number = number
        self.text = text

    def error(self, message: str, column: int = 1) -> ParseError:
        return ParseError(message, self.number, column)

    def words(self) -> list[tuple[int, str]]:
        return [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", self.text)]


def _significant_lines(text: str) -> list[_Line]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].rstrip()
        if body.strip():
            lines.append(_Line(number, body))
    return lines


def _keyword_line(lines: list[_Line], pos: int, keyword: str) -> list[tuple[int, str]]:
    if pos >= len(lines):
        last = lines[-1].number if lines else 1
        raise ParseError(f"expected '{keyword}' section, found end of input", last + (1 if lines else 0), 1)
    words = lines[pos].words()
    if words[0][1] != keyword:
        raise lines[pos].error(f"expected '{keyword}', found '{words[0][1]}'", words[0][0])
    return words[1:]


def _parse_symbols(line: _Line, words) -> list[Symbol]:
    symbols = []
    for col, word in words:
        m = SYMBOL_DECL_RE.fullmatch(word)
        if not m:
            raise line.error(f"malformed symbol declaration '{word}', expected Name/arity", col)
        arity = int(m.group(2))
        if arity < 1:
            raise line.error(f"relation {m.group(1)} must have arity >= 1", col)
        symbols.append(Symbol(m.group(1), arity))
    return symbols


def _parse_vars(line: _Line, words) -> list[str]:
    names = []
    for col, word in words:
        if not NAME_RE.fullmatch(word):
            raise line.error(f"malformed variable name '{word}'", col)
        names.append(word)
    return names


def _parse_row(line: _Line, connective: str, other: str, vocab: Vocabulary, variables: set[str], kind: Kind):
    text = line.text
    if other in text:
        col = text.index(other) + 1
        raise line.error(f"unexpected '{other}' in {'cnf' if kind.is_min else 'dnf'} section; literals are joined by '{connective}'", col)
    literals = []
    offset = 0
    for part in text.split(connective):
        stripped = part.strip()
        col = offset + (len(part) - len(part.lstrip())) + 1
        offset += len(part) + 1
        if not stripped:
            raise line.error(f"empty literal around '{connective}'", col)
        m = LITERAL_RE.fullmatch(stripped)
        if not m:
            raise line.error(f"malformed literal '{stripped}', expected [!]Name(v1,...)", col)
        negated, symbol, argtext = m.groups()
        args = tuple(a.strip() for a in argtext.split(",")) if argtext else ()
        if not vocab.declares(symbol):
            raise line.error(f"undeclared symbol '{symbol}'", col)
        if len(args) != vocab.arity(symbol):
            raise line.error(f"{symbol} expects {vocab.arity(symbol)} arguments, got {len(args)}", col)
        for a in args:
            if not NAME_RE.fullmatch(a):
                raise line.error(f"malformed variable name '{a}'", col)
            if a not in variables:
                raise line.error(f"undeclared variable '{a}'", col)
        if negated and kind.is_min and vocab.is_solution(symbol):
            raise line.error(f"solution symbol {symbol} may not occur negated in a minf specification", col)
        literals.append(Literal(not negated, symbol, args))
    return literals


def parse_spec(text: str) -> ProblemSpec:
    """Parse specification text; every failure is a ParseError carrying line/column."""
    lines = _significant_lines(text)
    pos = 0
    words = _keyword_line(lines, pos, "problem")
    if len(words) != 1 or not PROBLEM_RE.fullmatch(words[0][1]):
        raise lines[pos].error("expected exactly one problem name", words[0][0] if words else 1)
    name = words[0][1]
    pos += 1

    words = _keyword_line(lines, pos, "kind")
    try:
        kind = Kind(words[0][1]) if len(words) == 1 else None
    except ValueError:
        kind = None
    if kind is None:
        raise lines[pos].error("kind must be one of minf, maxnp, maxsnp", words[0][0] if words else 1)
    pos += 1

    words = _keyword_line(lines, pos, "input")
    input_syms = _parse_symbols(lines[pos], words)
    pos += 1
    words = _keyword_line(lines, pos, "solution")
    solution_line = lines[pos]
    solution_syms = _parse_symbols(solution_line, words)
    if not solution_syms:
        raise solution_line.error("at least one solution symbol is required")
    if kind.is_min and len(solution_syms) != 1:
        raise solution_line.error("minf specifications take exactly one solution symbol")
    pos += 1
    try:
        vocab = Vocabulary(tuple(input_syms), tuple(solution_syms))
    except ValidationError as exc:
        raise solution_line.error(str(exc)) from None

    words = _keyword_line(lines, pos, "forall")
    forall_line = lines[pos]
    x_vars = _parse_vars(forall_line, words)
    pos += 1
    y_vars: list[str] = []
    if pos < len(lines) and lines[pos].words()[0][1] == "exists":
        if kind is not Kind.MAXNP:
            raise lines[pos].error(f"kind {kind.value} does not allow an 'exists' section")
        y_vars = _parse_vars(lines[pos], lines[pos].words()[1:])
        pos += 1
    seen: set[str] = set()
    for v in x_vars + y_vars:
        if v in seen:
            raise forall_line.error(f"variable '{v}' declared twice")
        seen.add(v)

    section = "cnf" if kind.is_min else "dnf"
    words = _keyword_line(lines, pos, section)
    if words:
        raise lines[pos].error(f"unexpected text after '{section}'", words[0][0])
    pos += 1
    connective, other = ("|", "&") if kind.is_min else ("&", "|")
    rows = [_parse_row(line, connective, other, vocab, seen, kind) for line in lines[pos:]]
    if not rows:
        last = lines[-1]
        raise ParseError(f"the {section} section must contain at least one row", last.number + 1, 1)
    return ProblemSpec(name, kind, vocab, tuple(x_vars), tuple(y_vars), tuple(map(tuple, rows)))


# x ranges over clauses and y over variables; P(y,x) means y occurs
# positively in clause x, N(y,x) negatively.
# max-2sat: C0(u,v) encodes (u | v), C1(u,v) encodes (!u | v), C2(u,v)
# encodes (!u | !v); unit clauses repeat the variable.
CATALOG = {
    "vertex-cover": """\
problem vertex-cover
kind minf
input E/2
solution S/1
forall u v
cnf
!E(u,v) | S(u) | S(v)
""",
    "hitting-set-2": """\
problem hitting-set-2
kind minf
input E/2
solution S/1
forall u v
cnf
!E(u,v) | S(u) | S(v)
""",
    "hitting-set-3": """\
problem hitting-set-3
kind minf
input E/3
solution S/1
forall u v w
cnf
!E(u,v,w) | S(u) | S(v) | S(w)
""",
    "max-sat": """\
problem max-sat
kind maxnp
input P/2 N/2
solution T/1
forall x
exists y
dnf
P(y,x) & T(y)
N(y,x) & !T(y)
""",
    "max-cut": """\
problem max-cut
kind maxsnp
input E/2
solution S/1
forall u v
dnf
E(u,v) & S(u) & !S(v)
E(u,v) & !S(u) & S(v)
""",
    "max-2sat": """\
problem max-2sat
kind maxsnp
input C0/2 C1/2 C2/2
solution T/1
forall u v
dnf
C0(u,v) & T(u)
C0(u,v) & T(v)
C1(u,v) & !T(u)
C1(u,v) & T(v)
C2(u,v) & !T(u)
C2(u,v) & !T(v)
""",
}


def builtin_spec(name: str) -> ProblemSpec:
    try:
        text = CATALOG[name]
    except KeyError:
        raise ValidationError(f"unknown builtin specification {name!r}; known: {', '.join(CATALOG)}") from None
    return parse_spec(text)
