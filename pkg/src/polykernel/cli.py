"""Command-line interface.

Exit codes: 0 success, 1 kernel/oracle mismatch (check only), 2 parse
error, 3 validation error, 4 budget or internal invariant error.
"""

from __future__ import annotations

import argparse
import hashlib
import random
import sys
import time
from pathlib import Path

from . import __version__
from .errors import BudgetExceeded, InvariantViolation, ParseError, ValidationError
from .formats import read_instance, write_instance, write_manifest
from .generate import PROBLEMS, generate
from .grounding import compute_D, render_literals, specialize_max, specialize_min
from .hypergraph import hitting_set_edge_bound, kernelize_hitting_set
from .kernel import kernelize
from .maxnp import compute_D_star, disjunct_bound
from .minf import build_phi
from .oracle import DEFAULT_BUDGET, OVERRIDE_BUDGET, answer, check_kernel_equivalence, exact_opt
from .spec import CATALOG, Kind, builtin_spec, parse_spec, render_spec, solution_occurrence_bound
from .structure import conform_structure, enumerate_tuples

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_VALIDATION, EXIT_INTERNAL = 0, 1, 2, 3, 4


def _sha256(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None


def load_spec(arg: str):
    """A spec file path, or the name of a builtin specification."""
    if not Path(arg).exists() and arg in CATALOG:
        text = render_spec(builtin_spec(arg))
    else:
        text = _read_text(arg)
    return parse_spec(text), text


def _load(args):
    spec, spec_text = load_spec(args.spec)
    instance_text = _read_text(args.instance)
    structure, file_k = read_instance(instance_text)
    structure = conform_structure(structure, spec.vocabulary)
    k = args.k if getattr(args, "k", None) is not None else file_k
    manifest = {
        "command": args.command,
        "tool_version": __version__,
        "spec_sha256": _sha256(spec_text),
        "instance_sha256": _sha256(instance_text),
        "seed": "none",
    }
    return spec, structure, k, manifest


def _require_k(k):
    if k is None:
        raise ValidationError("no parameter: pass -k or add a 'k' line to the instance")
    if k < 0:
        raise ValidationError("k must be non-negative")
    return k


def _budget(args):
    return OVERRIDE_BUDGET if args.budget_override else DEFAULT_BUDGET


def _emit(args, manifest: dict, summary: str, out=None) -> None:
    out = out or sys.stdout
    manifest["elapsed_ms"] = int((time.perf_counter() - args.started) * 1000)
    text = write_manifest(manifest)
    if getattr(args, "manifest", None):
        Path(args.manifest).write_text(text, encoding="utf-8")
    if args.format == "machine":
        out.write(text)
    else:
        out.write(summary + "\n")


def cmd_kernelize(args) -> int:
    spec, structure, k, manifest = _load(args)
    k = _require_k(k)
    outcome = kernelize(spec, structure, k)
    manifest.update(k=k, verdict=outcome.verdict.value, reason=outcome.reason, **outcome.stats)
    text = write_instance(outcome.structure, outcome.k)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        if not args.manifest:
            args.manifest = args.output + ".manifest"
        out = sys.stdout
    else:
        sys.stdout.write(text)
        out = sys.stderr
    summary = (
        f"{outcome.verdict.value} ({outcome.reason}): atoms {structure.size} -> {outcome.structure.size}, "
        f"tuples {structure.tuple_count} -> {outcome.structure.tuple_count}, k={k}"
    )
    _emit(args, manifest, summary, out)
    return EXIT_OK


def cmd_solve(args) -> int:
    spec, structure, k, manifest = _load(args)
    k = _require_k(k)
    budget = _budget(args)
    target = structure
    if not args.exact:
        outcome = kernelize(spec, structure, k)
        target = outcome.structure
        manifest.update(verdict=outcome.verdict.value)
    opt = exact_opt(spec, target, budget)
    yes = answer(spec, opt, k)
    shown = "infeasible" if opt is None else str(opt)
    manifest.update(k=k, answer="YES" if yes else "NO", opt=shown, solved="original" if args.exact else "kernel")
    label = "opt" if args.exact else "kernel_opt"
    _emit(args, manifest, f"{'YES' if yes else 'NO'} {label}={shown}")
    return EXIT_OK


def cmd_check(args) -> int:
    spec, structure, k, manifest = _load(args)
    k = _require_k(k)
    outcome = kernelize(spec, structure, k)
    ok = check_kernel_equivalence(spec, structure, outcome, k, _budget(args))
    manifest.update(k=k, verdict=outcome.verdict.value, equivalent=str(ok).lower(), **outcome.stats)
    summary = f"{'PASS' if ok else 'FAIL'} {outcome.verdict.value}: atoms {structure.size} -> {outcome.structure.size}, k={k}"
    _emit(args, manifest, summary)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_gen(args) -> int:
    rng = random.Random(args.seed)
    structure = generate(args.problem, args.size, args.density, rng, variables=args.vars)
    structure = conform_structure(structure, builtin_spec(args.problem).vocabulary)
    text = write_instance(structure, args.k)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_ground(args) -> int:
    spec, structure, _, _ = _load(args)
    lines = []
    if spec.kind is Kind.MINF:
        for x in enumerate_tuples(structure, spec.c_x):
            cnf = specialize_min(spec, structure, x)
            body = " & ".join(f"({render_literals(c, '|')})" for c in cnf.clauses) or "true"
            lines.append(f"psi[{','.join(x)}] = {body}")
    else:
        xs = []
        for x in enumerate_tuples(structure, spec.c_x):
            for y in enumerate_tuples(structure, spec.c_y):
                dnf = specialize_max(spec, structure, x, y)
                body = " | ".join(f"({render_literals(d, '&')})" for d in dnf.disjuncts) or "false"
                lines.append(f"psi[{','.join(x)};{','.join(y)}] = {body}")
            D = compute_D(spec, structure, x)
            if D:
                xs.append(x)
                for d in D.disjuncts:
                    ys = " ".join(f"({','.join(y)})" for y in D.provenance[d])
                    lines.append(f"D[{','.join(x)}] ({render_literals(d, '&')}) <- {ys}")
        lines.append("X = " + " ".join(f"({','.join(x)})" for x in xs))
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def _flower_text(flower, victim, render) -> str:
    petals = " ".join(render(p) for p in flower.petals)
    return f"sunflower core={render(flower.core)} petals={petals} deleted={render(victim)}"


def cmd_sunflower(args) -> int:
    spec, structure, k, _ = _load(args)
    k = _require_k(k)
    s = solution_occurrence_bound(spec)
    lines = []
    if spec.kind is Kind.MINF:
        phi = build_phi(spec, structure)
        if phi.no_instance_witness is not None:
            lines.append(f"empty clause at x=({','.join(phi.no_instance_witness)})")
        render = lambda e: "{" + ",".join("(" + ",".join(v) + ")" for v in sorted(e, key=structure.atom_key)) + "}"  # noqa: E731
        lines.append(f"phi: {len(phi.hypergraph.edges)} edges, bound {hitting_set_edge_bound(k, s)}")
        trace: list = []
        kernel = kernelize_hitting_set(phi.hypergraph, k, s, trace)
        lines += [_flower_text(f, v, render) for f, v in trace]
        lines.append(f"kernel: {len(kernel.edges)} edges")
    else:
        render = lambda e: "{" + ",".join(sorted(map(str, e))) + "}"  # noqa: E731
        for x in enumerate_tuples(structure, spec.c_x):
            D = compute_D(spec, structure, x)
            if not D:
                continue
            trace = []
            reduced = compute_D_star(D, s, k, trace)
            lines.append(f"D[{','.join(x)}]: {len(D)} disjuncts, bound {disjunct_bound(s, k)}, kept {len(reduced)}")
            lines += [_flower_text(f, v, render) for f, v in trace]
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polykernel", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def instance_command(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("spec", help="spec file, or a builtin name such as vertex-cover")
        p.add_argument("instance", help="instance file")
        p.add_argument("-k", type=int, help="parameter (overrides the instance's k line)")
        p.add_argument("--budget-override", action="store_true", help="lift the oracle's desk-scale limits")
        p.add_argument("--format", choices=("text", "machine"), default="text")
        p.add_argument("--manifest", help="also write the run manifest here")
        p.set_defaults(func=func)
        return p

    p = instance_command("kernelize", cmd_kernelize, "reduce an instance to a polynomial kernel")
    p.add_argument("-o", "--output", help="write the reduced instance here (manifest goes to OUTPUT.manifest)")
    p = instance_command("solve", cmd_solve, "decide the instance with the exhaustive oracle")
    p.add_argument("--exact", action="store_true", help="solve the original instance instead of its kernel")
    instance_command("check", cmd_check, "kernelize and verify equivalence with the oracle")
    instance_command("ground", cmd_ground, "dump ground formulas, X_A and D_A(x)")
    instance_command("sunflower", cmd_sunflower, "dump the sunflowers removed during reduction")

    p = sub.add_parser("gen", help="generate a seeded random instance")
    p.add_argument("--problem", required=True, choices=PROBLEMS)
    p.add_argument("--size", type=int, required=True, help="atoms (clauses for max-sat)")
    p.add_argument("--density", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--vars", type=int, help="variables for max-sat (default: --size)")
    p.add_argument("-k", type=int, help="parameter line to include")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen, format="text")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    args.started = time.perf_counter()
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (BudgetExceeded, InvariantViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
