import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polykernel import FiniteStructure, builtin_spec, parse_spec, solution_occurrence_bound
from polykernel.grounding import (
    GroundLiteral,
    PartialAssignment,
    compute_D,
    compute_X,
    compute_Y,
    satisfiable_under,
    specialize_max,
    specialize_min,
)
from polykernel.oracle import _cnf_holds, _compile, _dnf_holds
from polykernel.structure import enumerate_tuples

VC = builtin_spec("vertex-cover")
MAXSAT = builtin_spec("max-sat")
MAXCUT = builtin_spec("max-cut")
LOOPS = parse_spec("problem loops\nkind minf\ninput E/2\nsolution S/1\nforall u\ncnf\nE(u,u)\n")


def S(*args, positive=True):
    return GroundLiteral(positive, "S", args)


def T(*args, positive=True):
    return GroundLiteral(positive, "T", args)


def test_specialize_min_examples(triangle):
    assert specialize_min(VC, triangle, ("a", "b")).clauses == ((S("a"), S("b")),)
    assert specialize_min(VC, triangle, ("a", "a")).clauses == ()
    assert specialize_min(LOOPS, triangle, ("a",)).has_empty_clause


def test_specialize_max_examples(maxsat_instance):
    assert specialize_max(MAXSAT, maxsat_instance, ("c1",), ("v1",)).disjuncts == ((T("v1"),),)
    assert specialize_max(MAXSAT, maxsat_instance, ("c1",), ("c2",)).disjuncts == ()


def test_contradictory_disjunct_removed():
    spec = parse_spec("problem c\nkind maxsnp\ninput E/2\nsolution T/1\nforall u\ndnf\nT(u) & !T(u)\n")
    s = FiniteStructure(("a",), {"E": []})
    assert specialize_max(spec, s, ("a",), ()).disjuncts == ()


def test_empty_disjunct_retained():
    spec = parse_spec("problem e\nkind maxsnp\ninput E/2\nsolution T/1\nforall u\ndnf\nE(u,u)\nE(u,u) & T(u)\n")
    s = FiniteStructure(("a", "b"), {"E": [("a", "a")]})
    assert () in compute_D(spec, s, ("a",)).disjuncts
    assert compute_D(spec, s, ("b",)).disjuncts == ()


def test_compute_X_examples(maxsat_instance, triangle):
    assert compute_X(MAXSAT, maxsat_instance).tuples == (("c1",), ("c2",))
    assert compute_X(MAXSAT, FiniteStructure(("c1", "v1"), {"P": [], "N": []})).tuples == ()
    X = compute_X(MAXCUT, triangle)
    assert set(X.tuples) == {(u, v) for u in "abc" for v in "abc" if u != v}


def test_brute_force_X_for_max_sat(maxsat_instance):
    # x is in X_A iff some T makes its clause true; checked independently of grounding.
    atoms = maxsat_instance.atoms
    sat = set()
    for size in range(len(atoms) + 1):
        for chosen in itertools.combinations(atoms, size):
            for c in atoms:
                if any(
                    (maxsat_instance.holds("P", (v, c)) and v in chosen) or (maxsat_instance.holds("N", (v, c)) and v not in chosen)
                    for v in atoms
                ):
                    sat.add(c)
    assert sat == {"c1", "c2"}


def test_compute_Y_and_D(maxsat_instance):
    assert compute_Y(MAXSAT, maxsat_instance, ("c1",)).tuples == (("v1",),)
    D = compute_D(MAXSAT, maxsat_instance, ("c1",))
    assert D.disjuncts == ((T("v1"),),) and D.provenance[(T("v1"),)] == (("v1",),)
    assert compute_Y(MAXSAT, maxsat_instance, ("v1",)).tuples == ()
    assert not compute_D(MAXSAT, maxsat_instance, ("v1",))


def test_satisfiable_under_examples():
    assert satisfiable_under((T("v1"),), PartialAssignment({T("v1")}))
    assert not satisfiable_under((T("v1"),), PartialAssignment({T("v1", positive=False)}))
    assert satisfiable_under((), PartialAssignment({T("v1"), T("v2", positive=False)}))


def test_partial_assignment_rejects_complements():
    with pytest.raises(ValueError):
        PartialAssignment({T("a"), T("a", positive=False)})


@st.composite
def small_graphs(draw, symbols=("E",), arity=2, max_atoms=3):
    n = draw(st.integers(1, max_atoms))
    atoms = tuple(f"a{i}" for i in range(n))
    extents = {}
    for name in symbols:
        pool = list(itertools.product(atoms, repeat=arity))
        extents[name] = draw(st.lists(st.sampled_from(pool), max_size=len(pool)))
    return FiniteStructure(atoms, extents)


def _all_assignments(spec, structure):
    ground = [(sym.name, t) for sym in spec.vocabulary.solution_symbols for t in enumerate_tuples(structure, sym.arity)]
    for mask in range(2 ** len(ground)):
        yield {g for i, g in enumerate(ground) if mask >> i & 1}


def _ground_value(literals, chosen, conj):
    values = [((lit.symbol, lit.args) in chosen) == lit.positive for lit in literals]
    return all(values) if conj else any(values)


@settings(max_examples=40, deadline=None)
@given(small_graphs())
def test_specialize_min_equivalent_to_matrix(structure):
    for spec in (VC, LOOPS):
        for x in enumerate_tuples(structure, spec.c_x):
            rows = _compile(spec, structure, dict(zip(spec.x_vars, x)))
            cnf = specialize_min(spec, structure, x)
            for chosen in _all_assignments(spec, structure):
                grounded = all(_ground_value(c, chosen, conj=False) for c in cnf.clauses)
                assert grounded == _cnf_holds(rows, chosen)


@settings(max_examples=40, deadline=None)
@given(small_graphs())
def test_specialize_max_equivalent_to_matrix(structure):
    spec = MAXCUT
    for x in enumerate_tuples(structure, spec.c_x):
        rows = _compile(spec, structure, dict(zip(spec.x_vars, x)))
        dnf = specialize_max(spec, structure, x, ())
        for chosen in _all_assignments(spec, structure):
            assert any(_ground_value(d, chosen, conj=True) for d in dnf.disjuncts) == _dnf_holds(rows, chosen)


@settings(max_examples=40, deadline=None)
@given(small_graphs(symbols=("P", "N"), max_atoms=3))
def test_specialize_max_with_witnesses(structure):
    spec = MAXSAT
    s = solution_occurrence_bound(spec)
    for x in enumerate_tuples(structure, 1):
        D = compute_D(spec, structure, x)
        assert all(len(d) <= s for d in D.disjuncts)
        for y in enumerate_tuples(structure, 1):
            binding = {"x": x[0], "y": y[0]}
            rows = _compile(spec, structure, binding)
            dnf = specialize_max(spec, structure, x, y)
            for chosen in _all_assignments(spec, structure):
                assert any(_ground_value(d, chosen, conj=True) for d in dnf.disjuncts) == _dnf_holds(rows, chosen)


@settings(max_examples=40, deadline=None)
@given(small_graphs(symbols=("P", "N"), max_atoms=3))
def test_Y_matches_satisfiability_for_some_assignment(structure):
    # Y_A(x) is read off as "nonempty ground DNF"; check it against "some T satisfies psi(x, y)".
    spec = MAXSAT
    for x in enumerate_tuples(structure, 1):
        expected = []
        for y in enumerate_tuples(structure, 1):
            rows = _compile(spec, structure, {"x": x[0], "y": y[0]})
            if any(_dnf_holds(rows, chosen) for chosen in _all_assignments(spec, structure)):
                expected.append(y)
        assert compute_Y(spec, structure, x).tuples == tuple(expected)
