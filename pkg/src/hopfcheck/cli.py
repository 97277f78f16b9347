"""Command-line interface.

Subcommands:
    verify-axioms  print the axiom validation report and the regularity check
    modular        print the integrals, modular element, automorphisms, tau
    dual           write the dual algebra to a file
    radford        run the hard-coded identity suites up to the S^4 formula
    check          evaluate an identity corpus against the algebra
    example        write a builtin algebra file
    full-report    everything above in one deterministic report

Exit codes: 0 when every reported check passes, 1 when any check fails,
2 on input, parse, or usage errors.  All scalars print exactly (never as
decimals), so reports are stable regression fixtures.
"""

from __future__ import annotations

import argparse
import io
import sys
from importlib import resources

from .catalog import (AlgebraFileSemanticError, AlgebraFileSyntaxError, GroupTableError,
                      build_function_algebra, build_group_algebra, build_sweedler,
                      build_taft, cyclic_group, read_algebra, read_group_table,
                      symmetric_group, write_algebra)
from .duality import build_dual, pair_system
from .hopf import HopfAlgebra, InvalidHopfAlgebraError, NotRegularError, galois_maps
from .identities import (DslLegError, DslSortError, DslSyntaxError, evaluate_corpus,
                         load_corpus, parse_corpus)
from .linalg import Matrix
from .modular import modular_data
from .verify import run_all_checks


def matrix_order(m: Matrix, cap: int = 1000):
    """Smallest k >= 1 with m^k = 1, or None if not found within cap."""
    acc = m
    for k in range(1, cap + 1):
        if acc.is_identity():
            return k
        acc = acc * m
    return None


def _print_matrix(out, label: str, m: Matrix):
    out.write(f"{label}:\n")
    for row in m.data:
        out.write("  [" + ", ".join(str(x) for x in row) + "]\n")


def _functional_str(coords) -> str:
    return "[" + ", ".join(str(c) for c in coords) + "]"


def axioms_text(h: HopfAlgebra) -> tuple[str, bool]:
    out = io.StringIO()
    report = h.validate()
    for line in report.lines():
        out.write(line + "\n")
    regular = False
    if report.ok:
        try:
            galois_maps(h)
            regular = True
            out.write(f"galois-regularity {h.name} PASS\n")
        except NotRegularError as exc:
            out.write(f"galois-regularity {h.name} FAIL {exc}\n")
    else:
        out.write(f"galois-regularity {h.name} SKIPPED (axioms failed)\n")
    return out.getvalue(), report.ok and regular


def modular_text(h: HopfAlgebra, md=None) -> str:
    out = io.StringIO()
    if md is None:
        md = modular_data(h)
    out.write(f"algebra {h.name} dim {h.dim} field {h.field}\n")
    out.write(f"basis = [{', '.join(h.basis_names)}]\n")
    out.write(f"phi = {_functional_str(md.phi.coords)}\n")
    out.write(f"psi = {_functional_str(md.psi.coords)}\n")
    out.write(f"delta = {h.format_element(list(md.delta))}\n")
    out.write(f"delta_inv = {h.format_element(list(md.delta_inv))}\n")
    _print_matrix(out, "sigma", md.sigma)
    _print_matrix(out, "sigma_prime", md.sigma_prime)
    out.write(f"tau = {md.tau}\n")
    out.write(f"antipode order = {matrix_order(h.antipode)}\n")
    out.write(f"sigma order = {matrix_order(md.sigma)}\n")
    out.write(f"sigma_prime order = {matrix_order(md.sigma_prime)}\n")
    return out.getvalue()


def _default_corpus():
    text = resources.files("hopfcheck").joinpath("corpus/standard.ids").read_text("utf-8")
    return parse_corpus(text)


def _load_corpus_arg(corpus_path):
    if corpus_path is None:
        return _default_corpus()
    import os
    if os.path.isdir(corpus_path):
        programs = []
        for name in sorted(os.listdir(corpus_path)):
            if name.endswith(".ids"):
                programs.extend(load_corpus(os.path.join(corpus_path, name)))
        if not programs:
            raise AlgebraFileSyntaxError(f"{corpus_path}: no .ids files found")
        return programs
    return load_corpus(corpus_path)


def check_text(h: HopfAlgebra, programs, system=None) -> tuple[str, bool]:
    out = io.StringIO()
    if system is None:
        system = pair_system(h)
    outcomes = evaluate_corpus(programs, system)
    for o in outcomes:
        out.write(o.line() + "\n")
    return out.getvalue(), all(o.passed for o in outcomes)


def radford_text(h: HopfAlgebra, system=None) -> tuple[str, bool]:
    out = io.StringIO()
    if system is None:
        system = pair_system(h)
    report = run_all_checks(system)
    for line in report.lines():
        out.write(line + "\n")
    return out.getvalue(), report.ok


def full_report_text(h: HopfAlgebra, programs=None) -> tuple[str, bool]:
    out = io.StringIO()
    ok = True
    axioms, ax_ok = axioms_text(h)
    ok = ok and ax_ok
    out.write(f"== axioms {h.name} ==\n")
    out.write(axioms)
    if not ax_ok:
        return out.getvalue(), False
    system = pair_system(h)
    out.write(f"== modular data {h.name} ==\n")
    out.write(modular_text(h, system.primal_modular))
    out.write(f"== modular data {system.dual.name} ==\n")
    out.write(modular_text(system.dual, system.dual_modular))
    out.write(f"== identities {h.name} ==\n")
    rad, rad_ok = radford_text(h, system)
    ok = ok and rad_ok
    out.write(rad)
    out.write(f"== corpus {h.name} ==\n")
    chk, chk_ok = check_text(h, programs if programs is not None else _default_corpus(), system)
    ok = ok and chk_ok
    out.write(chk)
    out.write(f"== summary {h.name} {'PASS' if ok else 'FAIL'} ==\n")
    return out.getvalue(), ok


def _example_algebra(args) -> HopfAlgebra:
    kind = args.kind
    if kind == "sweedler":
        return build_sweedler()
    if kind == "taft":
        if args.n is None:
            raise GroupTableError("taft needs --n")
        return build_taft(args.n)
    if kind in ("group-algebra", "function-algebra"):
        given = [x for x in (args.table, args.cyclic, args.symmetric) if x is not None]
        if len(given) != 1:
            raise GroupTableError(f"{kind} needs exactly one of --table/--cyclic/--symmetric")
        if args.table is not None:
            group = read_group_table(args.table)
            label = "table"
        elif args.cyclic is not None:
            group = cyclic_group(args.cyclic)
            label = f"z{args.cyclic}"
        else:
            group = symmetric_group(args.symmetric)
            label = f"s{args.symmetric}"
        builder = build_group_algebra if kind == "group-algebra" else build_function_algebra
        prefix = "group" if kind == "group-algebra" else "functions"
        return builder(group, f"{prefix}-{label}")
    raise GroupTableError(f"unknown example kind {kind!r}")


def _build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopfcheck",
        description="exact verification of Hopf-algebra integral and duality identities")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p):
        p.add_argument("input", help="algebra file (.alg JSON)")
        return p

    with_input(sub.add_parser("verify-axioms", help="validate all axioms and regularity"))
    with_input(sub.add_parser("modular", help="print integrals and modular data"))
    p = with_input(sub.add_parser("dual", help="write the dual algebra"))
    p.add_argument("-o", "--output", required=True, help="output algebra file")
    with_input(sub.add_parser("radford", help="run the hard-coded identity suites"))
    p = with_input(sub.add_parser("check", help="evaluate an identity corpus"))
    p.add_argument("--corpus", help="identity file or directory of .ids files")
    p = sub.add_parser("example", help="write a builtin algebra file")
    p.add_argument("kind", choices=["sweedler", "taft", "group-algebra", "function-algebra"])
    p.add_argument("--n", type=int, help="taft parameter (root of unity order)")
    p.add_argument("--table", help="group multiplication table JSON file")
    p.add_argument("--cyclic", type=int, help="use the cyclic group of this order")
    p.add_argument("--symmetric", type=int, help="use the symmetric group on this many symbols")
    p.add_argument("-o", "--output", help="output file (default: stdout)")
    p = with_input(sub.add_parser("full-report", help="run everything"))
    p.add_argument("--corpus", help="identity file or directory of .ids files")
    return parser


def run(argv) -> tuple[int, str]:
    """Execute one invocation; returns (exit_code, report_text)."""
    parser = _build_arg_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (2 if exc.code not in (0, None) else 0), ""
    try:
        if args.command == "example":
            h = _example_algebra(args)
            if args.output:
                write_algebra(h, args.output)
                return 0, f"wrote {h.name} to {args.output}\n"
            out = io.StringIO()
            import json as _json
            from .catalog import algebra_to_json
            _json.dump(algebra_to_json(h), out, indent=1)
            out.write("\n")
            return 0, out.getvalue()

        h = read_algebra(args.input)
        if args.command == "verify-axioms":
            text, ok = axioms_text(h)
            return (0 if ok else 1), text
        if args.command == "modular":
            report = h.validate()
            if not report.ok:
                return 1, "\n".join(report.lines()) + "\n"
            return 0, modular_text(h)
        if args.command == "dual":
            h.require_valid()
            dual = build_dual(h)
            write_algebra(dual, args.output)
            return 0, f"wrote {dual.name} to {args.output}\n"
        if args.command == "radford":
            report = h.validate()
            if not report.ok:
                return 1, "\n".join(report.lines()) + "\n"
            text, ok = radford_text(h)
            return (0 if ok else 1), text
        if args.command == "check":
            report = h.validate()
            if not report.ok:
                return 1, "\n".join(report.lines()) + "\n"
            programs = _load_corpus_arg(args.corpus)
            text, ok = check_text(h, programs)
            return (0 if ok else 1), text
        if args.command == "full-report":
            programs = _load_corpus_arg(args.corpus) if args.corpus else None
            text, ok = full_report_text(h, programs)
            return (0 if ok else 1), text
        return 2, f"unknown command {args.command!r}\n"
    except InvalidHopfAlgebraError as exc:
        return 1, f"FAIL {exc}\n"
    except (AlgebraFileSyntaxError, AlgebraFileSemanticError, GroupTableError,
            DslSyntaxError, DslSortError, DslLegError, OSError, ValueError) as exc:
        return 2, f"error: {exc}\n"


def main(argv=None) -> int:
    code, text = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
