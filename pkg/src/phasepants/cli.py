"""Command-line front end: ``phasepants <command> ...``.

Exit codes: 0 success, 1 a verification check failed, 2 usage error,
3 a size guard was hit.
"""
from __future__ import annotations

import argparse
import json
import sys

from .chords import AnglePoint, classify_point, enumerate_nets
from .complex import FacePoset, INTEGERS, Z2, collapses_to, is_circle, is_point, poset_homology
from .config import FORMATS, load_config
from .errors import ResourceLimitError
from .pants import L_complex, PantsCellLabel, assemble_phase_tropical, enumerate_pants_cells, pieces_of_cell
from .partitions import enumerate_cyclic_partitions
from .verify import CHECKS, FAIL, reports_to_json, reports_to_text, run_all, write_junit

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3

TARGET_HELP = ("pants (the (sigma,J) lattice), phase (all pieces), "
               "cell SIGMA J, boundary SIGMA J, or L SIGMA J; SIGMA like '<0|1|2>', J like 012")


class UsageError(Exception):
    pass


def _dump(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _cell_arg(tokens: list[str]) -> PantsCellLabel:
    if len(tokens) != 3:
        raise UsageError(f"target {tokens[0]} needs SIGMA and J")
    try:
        return PantsCellLabel.parse(tokens[1], tokens[2])
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def resolve_target(tokens: list[str], n: int | None, max_n: int) -> tuple[str, FacePoset]:
    kind = tokens[0]
    if kind in ("pants", "phase"):
        if n is None:
            raise UsageError(f"target {kind} needs --n")
        if kind == "pants":
            return f"pants lattice n={n}", enumerate_pants_cells(n)
        return f"phase-tropical pieces n={n}", assemble_phase_tropical(n, max_n=max_n).poset
    if kind in ("cell", "boundary", "L"):
        cell = _cell_arg(tokens)
        if kind == "L":
            return f"L {cell.render(ascii=True)}", L_complex(cell.sigma, cell.J)
        if cell.sigma.n > max_n:
            raise ResourceLimitError(f"n={cell.sigma.n} exceeds max_n={max_n}")
        closed = pieces_of_cell(cell.sigma, cell.J)
        if kind == "cell":
            return f"cell {cell.render(ascii=True)}", closed
        return f"boundary {cell.render(ascii=True)}", closed.subposet(p for p in closed if p.stratum != cell)
    raise UsageError(f"unknown target {kind!r}; use {TARGET_HELP}")


# ---------------------------------------------------------------------------
# commands


def cmd_enumerate(args, cfg) -> tuple[int, str]:
    what, n = args.what, args.n
    if what == "partitions":
        items = enumerate_cyclic_partitions(n)
        if args.format == "text":
            return EXIT_OK, "".join(s.render(ascii=args.ascii) + "\n" for s in items)
        return EXIT_OK, _dump({"n": n, "count": len(items), "partitions": [s.to_json() for s in items]})
    if what == "nets":
        items = enumerate_nets(n)
        if args.format == "text":
            return EXIT_OK, "".join(nu.render(ascii=args.ascii) + "\n" for nu in items)
        return EXIT_OK, _dump({"n": n, "count": len(items),
                               "nets": [dict(nu.to_json(), dim=len(nu.chords) - 1) for nu in items]})
    if what == "cells":
        poset = enumerate_pants_cells(n)
    else:
        poset = assemble_phase_tropical(n, max_n=cfg.max_n).poset
    if args.format == "dot":
        return EXIT_OK, poset.to_dot()
    if args.format == "text":
        return EXIT_OK, "".join(f"{poset.dim(x)} {x.render(ascii=args.ascii)}\n" for x in poset)
    return EXIT_OK, _dump({"n": n, "f_vector": list(poset.f_vector()), **poset.to_json()})


def cmd_homology(args, cfg) -> tuple[int, str]:
    name, poset = resolve_target(args.target, args.n, cfg.max_n)
    coeff = Z2 if args.coeff == "z2" else INTEGERS
    source = poset
    if args.collapse_first:
        from .complex import collapse

        source = collapse(poset)
    h = poset_homology(source, coeff, nonzero_guard=cfg.snf_nonzero_guard)
    ranks = h.ranks + [0] * (poset.max_dim + 1 - len(h.ranks))
    if args.format == "text":
        tors = "" if h.torsion_free else f" torsion {h.torsion}"
        return EXIT_OK, f"{name}: betti {ranks} over {args.coeff}{tors}\n"
    return EXIT_OK, _dump({"target": name, "coefficients": args.coeff, "betti": ranks, "torsion": h.torsion,
                           "f_vector": list(poset.f_vector()), "collapsed_first": args.collapse_first})


def cmd_collapse(args, cfg) -> tuple[int, str]:
    name, poset = resolve_target(args.target, args.n, cfg.max_n)
    goal = {"point": is_point, "circle": is_circle, "any": None}[args.goal]
    if goal is None:
        from .complex import collapse

        core, reached = collapse(poset), None
    else:
        reached, core = collapses_to(poset, goal, retries=cfg.collapse_retries, seed=cfg.seed)
    if args.format == "dot":
        return EXIT_OK, core.to_dot()
    if args.format == "text":
        tail = "" if reached is None else f" goal {args.goal}: {'reached' if reached else 'not reached'}"
        return EXIT_OK, f"{name}: {list(poset.f_vector())} -> {list(core.f_vector())}{tail}\n"
    return EXIT_OK, _dump({"target": name, "f_vector": list(poset.f_vector()), "core_f_vector": list(core.f_vector()),
                           "is_point": is_point(core), "is_circle": is_circle(core), "goal": args.goal,
                           "reached": reached, "core": core.to_json()})


def cmd_classify_point(args, cfg) -> tuple[int, str]:
    try:
        theta = AnglePoint.parse(args.theta)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad --theta: {exc}") from exc
    nu = classify_point(theta)
    if args.format == "text":
        return EXIT_OK, nu.render(ascii=args.ascii) + "\n"
    return EXIT_OK, _dump({"theta": theta.render(), "net": nu.to_json(), "dim": len(nu.chords) - 1,
                           "rendered": nu.render()})


def cmd_verify(args, cfg) -> tuple[int, str]:
    selection = None
    if args.checks:
        selection = [c.strip() for c in args.checks.split(",") if c.strip()]
        unknown = [c for c in selection if c not in CHECKS]
        if unknown:
            raise UsageError(f"unknown checks {unknown}; known: {', '.join(CHECKS)}")
    seed = cfg.seed if args.seed is None else args.seed
    reports = run_all(args.n, selection, seed, cfg.updated(seed=seed))
    if args.junit:
        write_junit(reports, args.junit)
    text = reports_to_text(reports) if args.format == "text" else reports_to_json(reports, timing=args.timing)
    return (EXIT_FAIL if any(r.status == FAIL for r in reports) else EXIT_OK), text


def cmd_export(args, cfg) -> tuple[int, str]:
    _, poset = resolve_target(args.target, args.n, cfg.max_n)
    if args.dot or args.format == "dot":
        return EXIT_OK, poset.to_dot()
    return EXIT_OK, _dump(poset.to_json())


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--format", choices=FORMATS, help="output format (default from config: json)")
    common.add_argument("--config", help="key=value config file (else $PHASEPANTS_CONFIG)")
    common.add_argument("--max-n", type=int, help="override the piece-enumeration guard")
    common.add_argument("--ascii", action="store_true", help="ASCII renderings of partitions and nets")

    parser = argparse.ArgumentParser(prog="phasepants", description=(
        "Cell structures of the complex and phase-tropical pair-of-pants: cyclic partitions, "
        "nets of chords, pieces H_IK x A_nu, homology and collapses."))
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list partitions, nets, pants cells or pieces",
                       description="Enumerate cyclic partitions sigma, nets of chords (alcoves of the torus), "
                                   "the (sigma,J) cells of the complex pants, or phase-tropical pieces.")
    p.add_argument("what", choices=("partitions", "nets", "cells", "pieces"))
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("homology", parents=[common], help="Betti numbers of an order complex",
                       description="Simplicial homology of the order complex of a face poset. Targets: " + TARGET_HELP)
    p.add_argument("--target", nargs="+", required=True, metavar="TOKEN")
    p.add_argument("--n", type=int)
    p.add_argument("--coeff", choices=("z2", "z"), default="z")
    p.add_argument("--collapse-first", action="store_true",
                   help="collapse free faces before building the order complex (same homology, smaller matrices)")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("collapse", parents=[common], help="collapse free faces of a face poset",
                       description="Greedy elementary collapses, with seeded retries toward a goal. Targets: "
                                   + TARGET_HELP)
    p.add_argument("--target", nargs="+", required=True, metavar="TOKEN")
    p.add_argument("--n", type=int)
    p.add_argument("--goal", choices=("any", "point", "circle"), default="any")
    p.set_defaults(func=cmd_collapse)

    p = sub.add_parser("classify-point", parents=[common], help="net of the alcove containing an angle vector",
                       description="Find the net of chords whose open alcove contains theta. "
                                   "Angles are rationals in units of pi.")
    p.add_argument("--theta", required=True, help='comma-separated angles in units of pi, e.g. "0,1/2,1"')
    p.set_defaults(func=cmd_classify_point)

    p = sub.add_parser("verify", parents=[common], help="run the verification battery",
                       description="Run named checks (partition and net censuses, lattice isomorphism, "
                                   "boundary spheres, complement lemma, facet types, global homology, "
                                   "membership, the 2x2 ober cell). Exit 1 if any check fails.")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--checks", help="comma-separated subset of: " + ", ".join(CHECKS))
    p.add_argument("--seed", type=int)
    p.add_argument("--junit", help="also write a junit-style XML summary here")
    p.add_argument("--timing", action="store_true", help="include elapsed seconds in JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", parents=[common], help="Hasse diagram of a face poset",
                       description="Export a face poset as DOT (Hasse diagram) or JSON. Targets: " + TARGET_HELP)
    p.add_argument("--target", nargs="+", required=True, metavar="TOKEN")
    p.add_argument("--n", type=int)
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args.config)
        if args.max_n is not None:
            cfg = cfg.updated(max_n=args.max_n)
    except (OSError, ValueError) as exc:
        print(f"phasepants: config error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format is None:
        args.format = cfg.output_format
    try:
        code, text = args.func(args, cfg)
    except UsageError as exc:
        print(f"phasepants: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"phasepants: guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except ValueError as exc:
        print(f"phasepants: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
