"""Command-line front end.  Exit status: 0 pass, 1 verification failure, 2 bad input."""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import List

from . import __version__
from .acceptance import CRITERIA, pbw_report
from .algebras import BUILTIN_NAMES, GroupGeneratorError, UnknownNameError, builtin
from .expr import ParseError, print_expr
from .homs import (
    BUILTIN_HOMS,
    DIAGRAM_ORIENTATIONS,
    builtin_hom,
    homs_from_file,
    triangle_paths,
    verify_diagram,
    verify_hom,
    verify_mutually_inverse,
    verify_racah_hom,
)
from .presentation import PresentationError, load_presentation_file
from .repmat import induced_rep, verify_rep
from .reports import Report, render
from .rewrite import FuelExhausted, check_confluence

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
INPUT_ERRORS = (UnknownNameError, PresentationError, ParseError, GroupGeneratorError, OSError, ValueError)


class InputError(Exception):
    pass


def _presentation(args):
    if getattr(args, "file", None):
        pf = load_presentation_file(args.file)
        if pf.presentation is None:
            return builtin(pf.source)
        return pf.presentation
    if not args.algebra:
        raise InputError("give --algebra or --file")
    return builtin(args.algebra)


def cmd_normalize(args) -> List[Report]:
    p = _presentation(args)
    nf = p.normalize(p.parse(args.expr))
    rep = Report("normalize", f"{p.name}: {args.expr}")
    rep.add("normal form", True, None, result=print_expr(nf))
    if args.format == "text":
        # plain output: just the normal form
        args.plain = print_expr(nf)
    return [rep]


def cmd_confluence(args) -> List[Report]:
    return [check_confluence(_presentation(args).require_system())]


def cmd_verify_hom(args) -> List[Report]:
    if args.file:
        homs = homs_from_file(load_presentation_file(args.file))
        if not homs:
            raise InputError(f"{args.file} defines no homomorphisms")
    else:
        homs = [builtin_hom(args.name)]
    return [verify_hom(h) for h in homs]


def cmd_verify_racah(args) -> List[Report]:
    if args.file:
        homs = homs_from_file(load_presentation_file(args.file))
        if not homs:
            raise InputError(f"{args.file} defines no homomorphisms")
    else:
        homs = [builtin_hom(args.name)]
    return [verify_racah_hom(h) for h in homs]


def cmd_verify_inverse(args) -> List[Report]:
    names = [n.strip() for n in args.pair.split(",")]
    if len(names) != 2 or not all(names):
        raise InputError("--pair expects two comma-separated homomorphism names")
    return [verify_mutually_inverse(builtin_hom(names[0]), builtin_hom(names[1]))]


def cmd_verify_diagram(args) -> List[Report]:
    targets = [args.target] if args.target else list(DIAGRAM_ORIENTATIONS)
    out = []
    for t in targets:
        top, bottom = triangle_paths(t)
        out.append(verify_diagram(top, bottom, f"common target {t}"))
    return out


def cmd_rep_check(args) -> List[Report]:
    if args.dim < 1:
        raise InputError("--dim must be at least 1")
    n = args.dim - 1
    if args.algebra == "racah":
        return [verify_rep(builtin("racah"), induced_rep("racah_images", n), "racah_images")]
    p = builtin(args.algebra)
    return [verify_rep(p, induced_rep(p.name, n), p.name)]


def _tri(d: int) -> int:
    return (d + 1) * (d + 2) // 2


def cmd_pbw_count(args) -> List[Report]:
    if args.max_degree < 0:
        raise InputError("--max-degree must be nonnegative")
    p = builtin(args.algebra)
    system = p.require_system()
    if p.group_generator:
        return [pbw_report(system, lambda d: 2 * _tri(d), args.max_degree, p.group_generator,
                           f"{p.name} by base degree")]
    return [pbw_report(system, _tri, args.max_degree)]


def _run_criterion(k: int) -> Report:
    return CRITERIA[k]()


def cmd_verify_all(args) -> List[Report]:
    if args.jobs < 1:
        raise InputError("--jobs must be at least 1")
    if args.jobs == 1:
        return [c() for c in CRITERIA]
    with ProcessPoolExecutor(max_workers=args.jobs) as pool:
        # map keeps declaration order regardless of completion order
        return list(pool.map(_run_criterion, range(len(CRITERIA))))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ncrewrite", description=__doc__)
    parser.add_argument("--version", action="version", version=f"ncrewrite {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("normalize", parents=[common], help="normal form of an expression")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--algebra", choices=BUILTIN_NAMES)
    g.add_argument("--file", help="presentation file")
    s.add_argument("--expr", required=True)
    s.set_defaults(func=cmd_normalize)

    s = sub.add_parser("confluence", parents=[common], help="resolve every critical pair")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--algebra", choices=BUILTIN_NAMES)
    g.add_argument("--file", help="presentation file")
    s.set_defaults(func=cmd_confluence)

    for name, func, helptext in (("verify-hom", cmd_verify_hom, "relations map to zero"),
                                 ("verify-racah", cmd_verify_racah, "Racah commutator and central checks")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        g = s.add_mutually_exclusive_group(required=True)
        g.add_argument("--name", choices=BUILTIN_HOMS)
        g.add_argument("--file", help="file with homomorphism blocks")
        s.set_defaults(func=func)

    s = sub.add_parser("verify-inverse", parents=[common], help="two homomorphisms compose to identities")
    s.add_argument("--pair", required=True, metavar="N1,N2")
    s.set_defaults(func=cmd_verify_inverse)

    s = sub.add_parser("verify-diagram", parents=[common], help="Racah / spin / skew-ring triangle")
    s.add_argument("--target", choices=DIAGRAM_ORIENTATIONS, help="one orientation (default: all)")
    s.set_defaults(func=cmd_verify_diagram)

    s = sub.add_parser("rep-check", parents=[common], help="relations on exact matrices")
    s.add_argument("--algebra", required=True, choices=BUILTIN_NAMES)
    s.add_argument("--dim", required=True, type=int, help="matrix dimension n+1 of the sl2 irrep used")
    s.set_defaults(func=cmd_rep_check)

    s = sub.add_parser("pbw-count", parents=[common], help="count irreducible words by degree")
    s.add_argument("--algebra", required=True, choices=BUILTIN_NAMES)
    s.add_argument("--max-degree", required=True, type=int)
    s.set_defaults(func=cmd_pbw_count)

    s = sub.add_parser("verify-all", parents=[common], help="run the whole acceptance suite")
    s.add_argument("--jobs", type=int, default=1, help="worker processes (output order is fixed)")
    s.set_defaults(func=cmd_verify_all)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.plain = None
    try:
        reports = args.func(args)
    except FuelExhausted as exc:
        print(f"ncrewrite: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except InputError as exc:
        print(f"ncrewrite: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except INPUT_ERRORS as exc:
        print(f"ncrewrite: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.plain is not None:
        print(args.plain)
    else:
        print(render(reports, args.format))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
