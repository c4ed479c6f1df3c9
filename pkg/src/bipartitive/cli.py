"""Command-line entry point.

Exit codes: 0 success, 1 usage error, 2 invalid input or a violated
precondition, 3 internal inconsistency. Results go to stdout as JSON,
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from collections.abc import Sequence

from . import corpus
from .documents import (
    DocumentError,
    dumps,
    family_from_doc,
    family_to_doc,
    graph_from_doc,
    graph_to_doc,
    matrix_from_doc,
    matrix_to_doc,
    report_to_doc,
    set_family_from_doc,
    tournament_from_doc,
    tournament_to_doc,
)
from .errors import AxiomError, InternalInconsistency, NotIrreducibleError
from .families import check_bipartitive, check_partitive, check_weakly_bipartitive
from .field import RATIONALS, parse_field
from .graphs import bijoins_graph, bijoins_tournament, splits
from .hl import NormalizationError, hl_family, normalize, verify_forward
from .realization import realize

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: invalid JSON ({exc})") from None


def _field(args):
    try:
        return parse_field(args.field)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_splits(args) -> dict:
    G = graph_from_doc(_read_json(args.graph))
    if G.n < 2:
        raise DocumentError("splits need a graph with at least 2 vertices")
    return family_to_doc(splits(G))


def cmd_bijoins(args) -> dict:
    if args.graph:
        G = graph_from_doc(_read_json(args.graph))
        if G.n < 2:
            raise DocumentError("bi-joins need at least 2 vertices")
        return family_to_doc(bijoins_graph(G))
    T = tournament_from_doc(_read_json(args.tournament))
    if T.n < 2:
        raise DocumentError("bi-joins need at least 2 vertices")
    return family_to_doc(bijoins_tournament(T))


def cmd_hl(args) -> dict:
    A = matrix_from_doc(_read_json(args.matrix), _field(args))
    if A.nrows < 2:
        raise DocumentError("HL-bipartitions need n >= 2")
    return family_to_doc(hl_family(A))


def cmd_check_family(args) -> dict:
    F = family_from_doc(_read_json(args.family))
    report = check_weakly_bipartitive(F) if args.weak else check_bipartitive(F)
    return report_to_doc(report)


def cmd_check_set_family(args) -> dict:
    P = set_family_from_doc(_read_json(args.set_family))
    return report_to_doc(check_partitive(P, weak_only=args.weak))


def cmd_normalize(args) -> dict:
    A = matrix_from_doc(_read_json(args.matrix))
    if not 1 <= args.vertex <= A.nrows:
        raise DocumentError(f"--vertex {args.vertex} outside 1..{A.nrows}")
    result = normalize(A, args.vertex, args.seed)
    return {
        "vertex": result.vertex,
        "seed": args.seed,
        "retries_used": result.retries_used,
        "shift": [RATIONALS.format(d) for d in result.shift],
        "matrix": matrix_to_doc(result.matrix),
    }


def cmd_realize(args) -> dict:
    F = family_from_doc(_read_json(args.family))
    return matrix_to_doc(realize(F))


def cmd_verify(args) -> dict:
    A = matrix_from_doc(_read_json(args.matrix), _field(args))
    if A.nrows < 2:
        raise DocumentError("verify needs n >= 2")
    report = verify_forward(A)
    symmetric = A.is_symmetric()
    return {
        "symmetric": symmetric,
        "axioms": ["Q1", "Q2", "Q3"] if symmetric else ["Q1", "Q2"],
        **report_to_doc(report),
        "family": family_to_doc(hl_family(A)),
    }


def _generate(kind: str, n: int, rng: random.Random, symmetric: bool) -> dict:
    if kind == "matrix":
        return matrix_to_doc(corpus.random_irreducible_sign_matrix(n, rng, symmetric))
    if kind == "graph":
        return graph_to_doc(corpus.random_graph(n, rng))
    return tournament_to_doc(corpus.random_tournament(n, rng))


def cmd_gen(args) -> str:
    if args.n < 1 or (args.kind == "matrix" and args.n < 2):
        raise UsageError("--n is too small for this kind")
    if args.count < 1:
        raise UsageError("--count must be positive")
    rng = random.Random(args.seed)
    lines = [
        json.dumps(_generate(args.kind, args.n, rng, args.symmetric), separators=(",", ":"))
        for _ in range(args.count)
    ]
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bipartitive", description="HL-bipartitions, splits and bi-joins.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("splits", help="splits of a graph")
    p.add_argument("--graph", required=True, help="graph document ('-' for stdin)")
    p.set_defaults(func=cmd_splits)

    p = sub.add_parser("bijoins", help="bi-joins of a graph or tournament")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--graph", help="graph document")
    g.add_argument("--tournament", help="tournament document")
    p.set_defaults(func=cmd_bijoins)

    p = sub.add_parser("hl", help="HL-bipartition family of a matrix")
    p.add_argument("--matrix", required=True)
    p.add_argument("--field", default="q", help="'q' (default) or 'gf:p'")
    p.set_defaults(func=cmd_hl)

    p = sub.add_parser("check-family", help="Q1-Q3 report for a bipartition family")
    p.add_argument("--family", required=True)
    p.add_argument("--weak", action="store_true", help="check Q1 and Q2 only")
    p.set_defaults(func=cmd_check_family)

    p = sub.add_parser("check-set-family", help="P1-P3 report for a set family")
    p.add_argument("--set-family", required=True, dest="set_family")
    p.add_argument("--weak", action="store_true", help="check P1 and P2 only")
    p.set_defaults(func=cmd_check_set_family)

    p = sub.add_parser("normalize", help="v-normalized matrix with the same HL family")
    p.add_argument("--matrix", required=True)
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("realize", help="{-1,0,1} matrix realizing a weakly bipartitive family")
    p.add_argument("--family", required=True)
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("verify", help="check the HL family of an irreducible matrix")
    p.add_argument("--matrix", required=True)
    p.add_argument("--field", default="q", help="'q' (default) or 'gf:p'")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="seeded random instances, one JSON document per line")
    p.add_argument("--kind", choices=("matrix", "graph", "tournament"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--symmetric", action="store_true", help="symmetric matrices only")
    p.set_defaults(func=cmd_gen)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        out = args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except AxiomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (DocumentError, NotIrreducibleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InternalInconsistency, NormalizationError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    sys.stdout.write(out if isinstance(out, str) else dumps(out))
    return EXIT_OK


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
