"""Command-line front end.

Exit codes: 0 success, 1 domain error (a violated mathematical
precondition), 2 structural or I/O error and usage errors.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import chains, closed_forms, diagram, gauss_sum, quandle, state_sum
from .errors import ComputationError, DomainError, StructuralError

BASIS_ENV = "QUANDLE_LAB_BASIS_LIMIT"


def _basis_limit() -> int:
    raw = os.environ.get(BASIS_ENV)
    if raw is None:
        return chains.DEFAULT_BASIS_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise StructuralError(f"{BASIS_ENV} must be an integer, got {raw!r}") from None


def _read(path: str) -> str:
    return Path(path).read_text()


def _load_quandle(args) -> quandle.FiniteQuandle:
    if getattr(args, "file", None):
        return quandle.parse_quandle(_read(args.file))
    return quandle.quandle_by_name(args.quandle)


def _emit_poly(v, fmt, out, key="phi"):
    if fmt == "machine":
        out.append(f"{key}.modulus={v.modulus}")
        out.append(f"{key}.vector={v.vector()}")
        out.append(f"{key}.constant_term={v.constant_term()}")
        out.append(f"{key}.mass={v.mass()}")
    elif fmt == "vector":
        out.append(v.vector())
    else:
        out.append(f"{key} = {v.pretty()}")
        out.append(f"vector = {v.vector()}")


def _parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise StructuralError(f"expected a comma-separated integer list, got {text!r}") from None


# ---------------------------------------------------------------------------


def cmd_check_quandle(args, out):
    if args.file:
        name, rows = quandle.parse_quandle_table(_read(args.file))
    else:
        X = quandle.quandle_by_name(args.quandle)
        name, rows = X.label, X.table
    report = quandle.check_axioms(rows)
    out.append(f"quandle={name}")
    out.append(f"size={len(rows)}")
    out.append(f"axioms={'pass' if report.ok else 'fail'}")
    if not report.ok:
        out.append(f"violated={report.axiom}")
        out.append("witness=" + ",".join(map(str, report.witness)))
        return 1
    return 0


def cmd_colorings(args, out):
    X = _load_quandle(args)
    if args.presentation:
        P = quandle.parse_presentation(_read(args.presentation))
    else:
        P = diagram.presentation_of(_load_diagram(args))
    cols = quandle.enumerate_colorings(P, X)
    out.append(f"quandle={X.label}")
    out.append(f"colorings={len(cols)}")
    if args.list:
        for c in cols:
            out.append(" ".join(f"{g}={v}" for g, v in zip(c.generators, c.values)))
    return 0


def cmd_homology(args, out):
    X = _load_quandle(args)
    H = chains.homology(X, args.n, args.theory, _basis_limit())
    if args.format == "machine":
        out += [f"quandle={X.label}", f"theory={args.theory}", f"n={args.n}",
                f"rank={H.rank}", "torsion=" + ",".join(map(str, H.torsion))]
    else:
        out.append(f"H^{args.theory}_{args.n} = {H}")
    return 0


def cmd_boundary_matrix(args, out):
    X = _load_quandle(args)
    M = chains.boundary_matrix(X, args.n, args.theory, _basis_limit())
    out.append(chains.format_matrix_triplets(M).rstrip("\n"))
    return 0


def cmd_cocycles(args, out):
    X = _load_quandle(args)
    limit = _basis_limit()
    spaces = chains.solve_cocycles(X, args.q, args.n, limit)
    out.append(f"quandle={X.label}")
    out.append(f"q={args.q}")
    out.append(f"n={args.n}")
    out.append(f"dim_cocycles={spaces.cocycles.shape[0]}")
    out.append(f"dim_coboundaries={spaces.coboundaries.shape[0]}")
    out.append(f"dim_cohomology={spaces.cohomology_dim}")
    if args.distinguished:
        if not (X.label == f"R{X.size}" and args.q == X.size and args.n == 3):
            raise DomainError("--distinguished needs --quandle R<p> with --q p and --n 3")
        theta = chains.select_distinguished_cocycle(args.q, limit)
        out.append(chains.format_cochain(theta, X.label).rstrip("\n"))
    return 0


def _load_diagram(args) -> diagram.DiagramDatum:
    if args.diagram:
        return diagram.parse_diagram(_read(args.diagram), Path(args.diagram).stem)
    if args.fixture:
        return diagram.load_fixture(args.fixture)
    raise StructuralError("give --diagram PATH or --fixture NAME")


def cmd_invariant(args, out):
    D = _load_diagram(args)
    X = _load_quandle(args)
    limit = _basis_limit()
    if args.cocycle:
        _, theta = chains.parse_cochain(_read(args.cocycle))
    else:
        if X.label != f"R{X.size}":
            raise DomainError("without --cocycle the quandle must be a dihedral quandle R<p>")
        theta = chains.select_distinguished_cocycle(X.size, limit)
    if not diagram.verify_cycle(D, X):
        raise DomainError(f"diagram {D.name} fails the fundamental-cycle check over {X.label}")
    v = state_sum.phi(D, X, theta)
    if args.format != "vector":
        out.append(f"diagram={D.name}")
        out.append(f"quandle={X.label}")
    _emit_poly(v, args.format, out)
    if args.mirror:
        _emit_poly(state_sum.phi_mirror(v), args.format, out, key="phi_mirror")
    return 0


def cmd_closed_form(args, out):
    v = closed_forms.phi_closed_form(args.p, args.variant)
    if args.format != "vector":
        out.append(f"p={args.p}")
        out.append(f"variant={args.variant}")
    _emit_poly(v, args.format, out)
    return 0


def cmd_prop31(args, out):
    report = closed_forms.verify_prop31(args.p)
    out += report.lines()
    if args.format != "machine":
        for variant in (1, 2):
            v = closed_forms.phi_closed_form(args.p, variant)
            out.append(f"phi_F{variant} = {v.pretty()}")
    return 0 if report.ok else 1


def cmd_distinguish(args, out):
    primes = _parse_ints(args.primes)
    v = closed_forms.distinguish_pair(_parse_ints(args.I), _parse_ints(args.Iprime), primes)
    out.append(f"index={v.index}")
    out.append(f"prime={v.prime}")
    out.append(f"constant_terms={v.constant_terms[0]},{v.constant_terms[1]}")
    out.append(f"differs={'yes' if v.differs else 'no'}")
    out.append(f"differs_from_mirror={'yes' if v.differs_from_mirror else 'no'}")
    out.append(f"verdict={v.text}")
    return 0


def cmd_gauss_sum(args, out):
    if args.genus_pair is not None:
        v = gauss_sum.distinguish_genus_g_pair(args.genus_pair)
        out.append(f"g={v.genus}")
        out.append(f"sigma_spun={v.spun_value}")
        out.append(f"sigma_turned={v.turned_value}")
        out.append(f"verdict={v.text}")
        return 0
    if args.expr is None:
        raise StructuralError("give --expr or --genus-pair")
    value = gauss_sum.sigma_value(gauss_sum.parse_expression(args.expr))
    out.append(f"sigma={value}" if args.format == "machine" else str(value))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quandle-lab", description="Quandle invariants of knots and surface-knots.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("pretty", "vector", "machine"), default="pretty")

    qsel = argparse.ArgumentParser(add_help=False)
    qsel.add_argument("--quandle", default="R3", help="R<p>, T<n> or A<n>,<t>")
    qsel.add_argument("--file", help="quandle table file (overrides --quandle)")

    dsel = argparse.ArgumentParser(add_help=False)
    dsel.add_argument("--diagram", help="diagram datum file")
    dsel.add_argument("--fixture", choices=sorted(diagram.FIXTURES), help="bundled diagram datum")

    p = sub.add_parser("check-quandle", parents=[common, qsel])
    p.set_defaults(func=cmd_check_quandle)

    p = sub.add_parser("colorings", parents=[common, qsel, dsel])
    p.add_argument("--presentation", help="presentation file")
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_colorings)

    p = sub.add_parser("homology", parents=[common, qsel])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--theory", choices=chains.THEORIES, default="Q")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("boundary-matrix", parents=[common, qsel])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--theory", choices=chains.THEORIES, default="Q")
    p.set_defaults(func=cmd_boundary_matrix)

    p = sub.add_parser("cocycles", parents=[common, qsel])
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--distinguished", action="store_true", help="also print the normalized 3-cocycle")
    p.set_defaults(func=cmd_cocycles)

    p = sub.add_parser("invariant", parents=[common, qsel, dsel])
    p.add_argument("--cocycle", help="cochain file; defaults to the normalized cocycle of R<p>")
    p.add_argument("--mirror", action="store_true", help="also print the reversed-mirror value")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("closed-form", parents=[common])
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--variant", type=int, choices=(1, 2), required=True)
    p.set_defaults(func=cmd_closed_form)

    p = sub.add_parser("prop31", parents=[common])
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(func=cmd_prop31)

    p = sub.add_parser("distinguish", parents=[common])
    p.add_argument("--primes", required=True)
    p.add_argument("--I", required=True)
    p.add_argument("--Iprime", required=True)
    p.set_defaults(func=cmd_distinguish)

    p = sub.add_parser("gauss-sum", parents=[common])
    p.add_argument("--expr")
    p.add_argument("--genus-pair", type=int, dest="genus_pair")
    p.set_defaults(func=cmd_gauss_sum)
    return parser


def run(argv=None) -> tuple[int, str]:
    """Run one command; returns ``(exit_code, stdout_text)``.  Errors go to stderr."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), ""
    out: list[str] = []
    try:
        code = args.func(args, out)
    except (DomainError, ComputationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1, "\n".join(out) + ("\n" if out else "")
    except (StructuralError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2, "\n".join(out) + ("\n" if out else "")
    return code, "\n".join(out) + "\n"


def main(argv=None) -> int:
    code, text = run(argv)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
