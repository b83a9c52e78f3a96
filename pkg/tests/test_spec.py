import pytest

from polykernel import Kind, ParseError, builtin_spec, parse_spec, render_spec, solution_occurrence_bound
from polykernel.spec import CATALOG, Literal


def rows(spec):
    return {frozenset(row) for row in spec.matrix}


def test_vertex_cover_catalog():
    spec = builtin_spec("vertex-cover")
    assert spec.kind is Kind.MINF
    assert spec.c_x == 2 and spec.solution_symbol.arity == 1
    assert spec.matrix == ((Literal(False, "E", ("u", "v")), Literal(True, "S", ("u",)), Literal(True, "S", ("v",))),)
    assert solution_occurrence_bound(spec) == 2


def test_max_sat_catalog():
    spec = builtin_spec("max-sat")
    assert spec.kind is Kind.MAXNP
    assert (spec.c_x, spec.c_y) == (1, 1)
    assert rows(spec) == {
        frozenset({Literal(True, "P", ("y", "x")), Literal(True, "T", ("y",))}),
        frozenset({Literal(True, "N", ("y", "x")), Literal(False, "T", ("y",))}),
    }
    assert solution_occurrence_bound(spec) == 1


def test_max_cut_catalog():
    spec = builtin_spec("max-cut")
    assert spec.kind is Kind.MAXSNP and (spec.c_x, spec.c_y) == (2, 0)
    assert rows(spec) == {
        frozenset({Literal(True, "E", ("u", "v")), Literal(True, "S", ("u",)), Literal(False, "S", ("v",))}),
        frozenset({Literal(True, "E", ("u", "v")), Literal(False, "S", ("u",)), Literal(True, "S", ("v",))}),
    }
    assert solution_occurrence_bound(spec) == 2


@pytest.mark.parametrize("name", list(CATALOG))
def test_catalog_round_trip(name):
    spec = builtin_spec(name)
    assert parse_spec(render_spec(spec)) == spec
    assert spec.name == name


@pytest.mark.parametrize("name", list(CATALOG))
def test_catalog_invariants(name):
    spec = builtin_spec(name)
    vocab = spec.vocabulary
    recount = max(len([lit for lit in row if vocab.is_solution(lit.symbol)]) for row in spec.matrix)
    assert solution_occurrence_bound(spec) == recount
    if spec.kind is Kind.MINF:
        assert not any(not lit.positive and vocab.is_solution(lit.symbol) for row in spec.matrix for lit in row)


MINF_HEAD = "problem t\nkind minf\ninput E/2\nsolution S/1\nforall u v\ncnf\n"


def test_negative_solution_literal_rejected_under_minf():
    with pytest.raises(ParseError) as info:
        parse_spec(MINF_HEAD + "E(u,v) | !S(u)\n")
    assert info.value.line == 7 and info.value.column == 10


def test_degenerate_spec_parses_with_zero_bound():
    spec = parse_spec("problem loops\nkind minf\ninput E/2\nsolution S/1\nforall u\ncnf\nE(u,u)\n")
    assert solution_occurrence_bound(spec) == 0


@pytest.mark.parametrize(
    "text, line",
    [
        ("kind minf\n", 1),
        ("problem t\nkind weird\n", 2),
        ("problem t\nkind minf\ninput E2\n", 3),
        (MINF_HEAD + "Q(u,v)\n", 7),
        (MINF_HEAD + "E(u,w) | S(u)\n", 7),
        (MINF_HEAD + "E(u) | S(u)\n", 7),
        (MINF_HEAD + "E(u,v) & S(u)\n", 7),
        (MINF_HEAD + "E(u,v) | \n", 7),
        (MINF_HEAD, 7),
        ("problem t\nkind minf\ninput E/2\nsolution S/1\nforall u v\nexists w\ncnf\nS(u)\n", 6),
        ("problem t\nkind maxsnp\ninput E/2\nsolution S/1\nforall u\nexists v\ndnf\nS(u)\n", 6),
        ("problem t\nkind minf\ninput E/2\nsolution S/1 R/1\nforall u\ncnf\nS(u)\n", 4),
        ("problem t\nkind minf\ninput E/2\nsolution S/1\nforall u u\ncnf\nS(u)\n", 5),
    ],
)
def test_parse_errors_carry_positions(text, line):
    with pytest.raises(ParseError) as info:
        parse_spec(text)
    assert info.value.line == line
    assert info.value.column >= 1


def test_comments_repeated_vars_and_dedup():
    spec = parse_spec(
        "# loops\nproblem t  # name\nkind minf\ninput E/2\nsolution S/1\nforall u v\ncnf\n"
        "S(u) | !E(u,u)\n!E(u,u) | S(u) | S(u)\n"
    )
    assert spec.matrix == ((Literal(False, "E", ("u", "u")), Literal(True, "S", ("u",))),)


def test_unknown_builtin():
    from polykernel import ValidationError

    with pytest.raises(ValidationError):
        builtin_spec("tsp")
