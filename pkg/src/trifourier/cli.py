"""Command-line surface: table emission, matrix export, verification suites."""

from __future__ import annotations

import argparse
import json
import sys

from .report import Report


def even_dim(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if value < 0 or value % 2:
        raise argparse.ArgumentTypeError(f"dimension must be even and >= 0, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trifourier",
        description="Exact isotropic-subspace bases, triangular Fourier matrices, "
        "and non-abelian Fourier checks for small symmetric groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_family = sub.add_parser("family", help="emit the family grouped into fibers")
    p_family.add_argument("--dim", type=even_dim, required=True)
    p_family.add_argument("--format", choices=("text", "json"), default="text")

    p_matrix = sub.add_parser("matrix", help="emit the exact change-of-basis matrix")
    p_matrix.add_argument("--dim", type=even_dim, required=True)
    p_matrix.add_argument("--format", choices=("json", "csv"), default="json")

    p_verify = sub.add_parser("verify", help="run verification suites; exit 0 iff all pass")
    p_verify.add_argument("--dim", type=even_dim, required=True)
    p_verify.add_argument(
        "--suite", choices=("all", "family", "fourier", "dihedral", "counts"), default="all"
    )
    p_verify.add_argument("--format", choices=("text", "json"), default="text")

    p_na = sub.add_parser("nonabelian", help="checks on the group Fourier matrices")
    p_na.add_argument("--group", choices=("s3", "s4", "s5"), required=True)
    p_na.add_argument("--variant", choices=("g2", "e"), default="g2")
    p_na.add_argument(
        "--check",
        choices=("matrix", "involution", "trace", "hyperplane", "newbasis"),
        required=True,
    )
    p_na.add_argument("--basis", help="JSON basis file (required for s4/s5 newbasis)")
    p_na.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _emit_family(args) -> int:
    from .family import build_family, family_to_json, fiber_lines

    fam = build_family(args.dim)
    if args.format == "json":
        print(json.dumps(family_to_json(fam), indent=2, sort_keys=True))
    else:
        for line in fiber_lines(fam):
            print(line)
    return 0


def _emit_matrix(args) -> int:
    from .family import build_family
    from .fourier import change_of_basis

    cob = change_of_basis(build_family(args.dim))
    if args.format == "csv":
        sys.stdout.write(cob.to_csv())
    else:
        print(json.dumps(cob.to_json(), indent=2, sort_keys=True))
    return 0


def run_suite(dim: int, suite: str) -> Report:
    """Aggregate the selected per-module verification suites."""
    from . import dihedral, family, fourier

    combined = Report(f"{suite} D={dim}")
    fam = family.build_family(dim)
    if suite in ("all", "counts"):
        combined.extend(family.verify_counts(fam))
    if suite in ("all", "family"):
        combined.extend(family.verify_structure(fam))
        same_p = family.family_subspaces(dim) == family.family_subspaces_prime(dim)
        combined.add("family:prime-recursion-equal", same_p)
        same_u = family.family_subspaces(dim) == family.family_subspaces_ucb(dim)
        combined.add("family:ucb-recursion-equal", same_u)
        if dim >= 4:
            from .taumaps import verify_composition_identity

            combined.extend(verify_composition_identity(dim))
    if suite in ("all", "dihedral"):
        combined.extend(dihedral.verify_relations(fam.space))
        combined.extend(dihedral.verify_family_stability(fam))
        if dim >= 2:
            combined.extend(dihedral.verify_embedding_equivariance(dim))
    if suite in ("all", "fourier"):
        combined.add("fourier:involution", fourier.verify_involution(fam.space))
        combined.extend(fourier.verify_change_of_basis(fourier.change_of_basis(fam)))
        if dim >= 2:
            combined.extend(fourier.verify_z_commutation(dim))
    return combined


def _run_verify(args) -> int:
    rep = run_suite(args.dim, args.suite)
    if args.format == "json":
        print(json.dumps(rep.to_json(), indent=2, sort_keys=True))
    else:
        print(rep.summary())
    return 0 if rep.ok else 1


def _run_nonabelian(args) -> int:
    from .cyclotomic import Cyc
    from .nonabelian import (
        PIECE_SIGNS,
        hyperplane_check,
        load_basis_file,
        nonabelian_ft,
        piece_partition,
        s3_new_basis,
        verify_triangular,
    )

    ft = nonabelian_ft(args.group)
    if args.check == "matrix":
        print(json.dumps(ft.to_json(), indent=2, sort_keys=True))
        return 0
    if args.check == "involution":
        ok = ft.is_involution() and ft.is_symmetric()
        print(f"involution: {'pass' if ok else 'fail'}")
        return 0 if ok else 1
    if args.check == "trace":
        tr = ft.trace()
        print(tr.to_rational() if tr.is_rational() else repr(tr))
        return 0
    if args.check == "hyperplane":
        if args.group != "s5":
            print("hyperplane check applies to s5 only", file=sys.stderr)
            return 1
        rep = hyperplane_check(ft)
        print(rep.summary())
        return 0 if rep.ok else 1
    # newbasis: embedded variants for s3 unless a file is supplied explicitly
    if args.basis:
        try:
            basis = load_basis_file(args.basis)
        except (ValueError, KeyError, json.JSONDecodeError) as exc:
            print(f"bad basis file: {exc}", file=sys.stderr)
            return 1
        if basis.group != args.group:
            print(f"basis file is for {basis.group}, not {args.group}", file=sys.stderr)
            return 1
    elif args.group == "s3":
        basis = s3_new_basis(args.variant)
    else:
        print(f"--basis FILE is required for {args.group} newbasis", file=sys.stderr)
        return 2
    rep = verify_triangular(ft, basis, piece_partition(args.group), PIECE_SIGNS[args.group])
    if args.format == "json":
        print(json.dumps(rep.to_json(), indent=2, sort_keys=True))
    else:
        print(rep.summary())
    return 0 if rep.ok else 1


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "family":
        return _emit_family(args)
    if args.command == "matrix":
        return _emit_matrix(args)
    if args.command == "verify":
        return _run_verify(args)
    if args.command == "nonabelian":
        return _run_nonabelian(args)
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
