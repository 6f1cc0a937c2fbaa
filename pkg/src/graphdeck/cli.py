"""Command-line front end.

Subcommands are thin adapters over the library: deck, subdeck, compare,
recognize, reconstruct, verify, pairs.  Output is byte-deterministic for
fixed inputs and flags.  Exit codes: 0 success, 1 only for `recognize
--status-verdict` with a Cyclic verdict, 2 for input errors and exceeded caps.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .decks import compute_deck, deck_equal, deck_from_text, deck_to_text, subdeck
from .errors import CapExceededError, GraphDeckError
from .generate import enumerate_graphs
from .graphs import parse_graph6, write_graph6
from .recognize import (
    Verdict,
    default_jobs,
    exception_pair,
    full_source,
    nydl_pair,
    reconstruct_all,
    recognize,
    restricted_source,
    sharpness_pair,
    two_cycle_pair,
    two_path_pair,
    verify_recognizability,
)

_VERIFY_FULL_MAX_N = 9
_VERIFY_RESTRICTED_MAX_N = 12

_PAIR_FAMILIES = {
    "path-cycle": (sharpness_pair, 2),
    "two-paths": (two_path_pair, 2),
    "two-cycles": (two_cycle_pair, 4),
    "added-leaf": (nydl_pair, 2),
    "subdivided-star": (None, None),
}


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _emit(text: str, output: str | None) -> None:
    if output is None or output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="ascii") as fh:
            fh.write(text)


def _single_graph(args: argparse.Namespace) -> "Graph":  # noqa: F821
    if args.graph6 is not None:
        return parse_graph6(args.graph6)
    text = _read_text(args.input)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise GraphDeckError("expected exactly one graph6 record")
    return parse_graph6(lines[0])


def _cmd_deck(args: argparse.Namespace) -> int:
    g = _single_graph(args)
    _emit(deck_to_text(compute_deck(g, args.k)), args.output)
    return 0


def _cmd_subdeck(args: argparse.Namespace) -> int:
    d = deck_from_text(_read_text(args.deck))
    _emit(deck_to_text(subdeck(d, args.j)), args.output)
    return 0


def _cmd_compare(args: argparse.Namespace) -> int:
    d1 = deck_from_text(_read_text(args.deck1))
    d2 = deck_from_text(_read_text(args.deck2))
    if deck_equal(d1, d2):
        _emit("equal\n", args.output)
        return 0
    lines = ["unequal"]
    if d1.card_order != d2.card_order:
        lines.append(f"card_order\t{d1.card_order}\t{d2.card_order}")
    else:
        for code in sorted(set(d1.cards) | set(d2.cards)):
            m1, m2 = d1.cards.get(code, 0), d2.cards.get(code, 0)
            if m1 != m2:
                lines.append(f"{code.g6}\t{m1}\t{m2}")
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_recognize(args: argparse.Namespace) -> int:
    d = deck_from_text(_read_text(args.deck))
    report = recognize(d, cap=args.cap)
    _emit(report.to_text(), args.output)
    if args.status_verdict and report.verdict is Verdict.CYCLIC:
        return 1
    return 0


def _cmd_reconstruct(args: argparse.Namespace) -> int:
    d = deck_from_text(_read_text(args.deck))
    res = reconstruct_all(d, cap=args.cap, forest=args.forest)
    lines = [
        f"matches={len(res.matches)} acyclic_found={str(res.acyclic_found).lower()}"
        f" cyclic_found={str(res.cyclic_found).lower()}"
        f" exhausted={str(res.exhausted).lower()}"
    ]
    lines.extend(code.g6 for code in res.matches)
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    n, l = args.n, args.l
    if args.source == "full":
        if n > _VERIFY_FULL_MAX_N and not args.force:
            raise CapExceededError(
                f"full verification is capped at n={_VERIFY_FULL_MAX_N}; pass --force to exceed"
            )
        source = full_source(n)
    else:
        if n > _VERIFY_RESTRICTED_MAX_N and not args.force:
            raise CapExceededError(
                f"restricted verification is capped at n={_VERIFY_RESTRICTED_MAX_N}; "
                "pass --force to exceed"
            )
        source = restricted_source(n, l)
    summary = verify_recognizability(n, l, source, jobs=args.jobs)
    _emit(summary.to_text(), args.output)
    return 0


def _cmd_pairs(args: argparse.Namespace) -> int:
    if args.family == "subdivided-star":
        a, b = exception_pair()
    else:
        builder, min_l = _PAIR_FAMILIES[args.family]
        if args.l is None:
            raise GraphDeckError(f"family {args.family!r} requires --l")
        if args.l < min_l:
            raise GraphDeckError(f"family {args.family!r} requires --l >= {min_l}")
        a, b = builder(args.l)
    _emit(write_graph6(a) + "\n" + write_graph6(b) + "\n", args.output)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphdeck",
        description="Decks of small graphs: compute, compare, recognize acyclicity, verify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("deck", help="compute the k-deck of one graph")
    p.add_argument("graph6", nargs="?", help="inline graph6 record")
    p.add_argument("--input", "-i", default="-", help="file with one graph6 record")
    p.add_argument("--k", type=int, required=True, help="card order")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=_cmd_deck)

    p = sub.add_parser("subdeck", help="derive a smaller deck from a deck file")
    p.add_argument("deck", help="deck file (or - for stdin)")
    p.add_argument("--j", type=int, required=True, help="target card order")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=_cmd_subdeck)

    p = sub.add_parser("compare", help="compare two deck files")
    p.add_argument("deck1")
    p.add_argument("deck2")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("recognize", help="decide acyclicity from a deck file")
    p.add_argument("deck", help="deck file (or - for stdin)")
    p.add_argument("--cap", type=int, default=None, help="search cap for the fallback")
    p.add_argument(
        "--status-verdict",
        action="store_true",
        help="exit with status 1 when the verdict is Cyclic",
    )
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("reconstruct", help="list all graphs matching a deck file")
    p.add_argument("deck", help="deck file (or - for stdin)")
    p.add_argument("--forest", action="store_true", help="search forests only")
    p.add_argument("--cap", type=int, default=None, help="bound on examined extensions")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=_cmd_reconstruct)

    p = sub.add_parser("verify", help="group n-vertex graphs by deck, count mixed classes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument(
        "--source",
        choices=["restricted", "full"],
        default="restricted",
        help="restricted = forests plus girth > n-l graphs (sufficient); full = everything",
    )
    p.add_argument("--jobs", type=int, default=None, help="worker processes (env GRAPHDECK_JOBS)")
    p.add_argument("--force", action="store_true", help="exceed the default size caps")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("pairs", help="emit a known equal-deck pair as two graph6 lines")
    p.add_argument("--family", choices=sorted(_PAIR_FAMILIES), required=True)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=_cmd_pairs)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", None) is None and args.command == "verify":
        args.jobs = default_jobs()
    try:
        return args.func(args)
    except GraphDeckError as exc:
        print(f"graphdeck: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"graphdeck: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
