"""``graphlink`` command-line tool.

Exit codes: 0 success, 2 domain error, 3 parse error, 4 size or search limit.
"""

from __future__ import annotations

import argparse
import sys

from . import textio
from .canon import graph_from_form
from .chi import chi, chi_inverse
from .chords import ChordDiagram, Realizability, graphlink_realizability, intersection_graph, realize
from .errors import GraphLinkError, OrbitLimit, ParseError, SizeLimit
from .graph import LabeledGraph, LoopedGraph
from .invariants import (
    atom_genus,
    component_count,
    is_alternating,
    is_nonsplit,
    kauffman_bracket,
    minimality_certificate,
    writhe,
)
from .laurent import span
from .moves import MoveDescriptor, apply_move, detect_moves, equivalence_search
from .parity import bracket_knot, bracket_link2, parity_knot, parity_knot_labeled, parity_link2, reduce_sum

EXIT_OK, EXIT_DOMAIN, EXIT_PARSE, EXIT_LIMIT = 0, 2, 3, 4


def _load(path: str):
    if path == "-":
        return textio.parse(sys.stdin.read())
    return textio.read_file(path)


def _load_graph(path: str):
    obj = _load(path)
    if isinstance(obj, ChordDiagram):
        return intersection_graph(obj)
    return obj


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report(pairs) -> str:
    return "".join(f"{k}: {v}\n" for k, v in pairs)


def _fmt_bool(b: bool) -> str:
    return "true" if b else "false"


def _fmt_table(table: dict, order) -> str:
    return " ".join(f"{v}={table[v]}" for v in order) if order else "(none)"


# -- invariants ---------------------------------------------------------------------


def invariants_report(g, workers: int = 1) -> str:
    """Key-value report of the invariants of a labeled graph (looped graphs go through ``chi_inverse``)."""
    looped = g if isinstance(g, LoopedGraph) else None
    lab = chi_inverse(g) if looped is not None else g
    pairs = [("kind", "looped" if looped is not None else "labeled"), ("vertices", len(lab))]
    comps = component_count(lab)
    pairs.append(("components", comps))
    if comps == 1:
        pairs.append(("writhe", writhe(lab)[1]))
    else:
        pairs.append(("writhe", "undefined"))
    bracket = kauffman_bracket(lab, workers=workers)
    pairs.append(("bracket", bracket))
    pairs.append(("span", span(bracket) if not bracket.is_zero() else "undefined"))
    pairs.append(("atom-genus", atom_genus(lab)))
    pairs.append(("alternating", _fmt_bool(is_alternating(lab))))
    pairs.append(("non-split", _fmt_bool(is_nonsplit(lab))))
    if looped is not None:
        table = parity_knot(looped)
    elif comps == 1:
        table = parity_knot_labeled(lab)
    elif comps == 2:
        table = parity_link2(lab)
    else:
        table = None
    pairs.append(("parity", _fmt_table(table, lab.vertices) if table is not None else "undefined"))
    cert = minimality_certificate(looped if looped is not None else lab)
    pairs.append(("minimal", cert.verdict.value))
    return _report(pairs)


def cmd_invariants(args) -> int:
    g = _load_graph(args.file)
    sys.stdout.write(invariants_report(g, args.threads))
    return EXIT_OK


# -- moves ----------------------------------------------------------------------------

_MOVE_HELP = """move specs:
  og1 add <sign> | og1 remove <v>
  og2 add <framing> <sign> [<nbr> ...] | og2 remove <p> <q>
  og3 <u> <v> <w> | og3inv <u> <v> <w>
  og4 <u> <v> | og4p <v>
  r1 add <loop 0|1> | r1 remove <v>
  r2 add <adjacent 0|1> [<nbr> ...] | r2 remove <p> <q>
  r3 <u> <v> <w> | r3inv <u> <v> <w>"""


def parse_move_spec(tokens: list[str]) -> MoveDescriptor:
    """Turn e.g. ``["og1", "remove", "v3"]`` into a :class:`MoveDescriptor`."""
    if not tokens:
        raise ParseError("empty move spec")
    name, rest = tokens[0].lower(), tokens[1:]
    ids = [textio.parse_id(t) for t in rest]

    def want(k):
        if len(rest) != k:
            raise ParseError(f"{name} expects {k} argument(s), got {len(rest)}")

    def bit(tok):
        if tok not in ("0", "1"):
            raise ParseError(f"expected 0 or 1, got {tok!r}")
        return int(tok)

    fixed = {"og3": ("Og3", 3), "og3inv": ("Og3^-1", 3), "og4": ("Og4", 2), "og4p": ("Og4'", 1),
             "r3": ("R3", 3), "r3inv": ("R3^-1", 3)}
    if name in fixed:
        kind, k = fixed[name]
        want(k)
        return MoveDescriptor(kind, tuple(ids))
    if name in ("og1", "og2", "r1", "r2") and rest and rest[0] in ("add", "remove"):
        op, args, arg_ids = rest[0], rest[1:], ids[1:]
        if op == "remove":
            k = 1 if name in ("og1", "r1") else 2
            if len(args) != k:
                raise ParseError(f"{name} remove expects {k} vertex id(s)")
            return MoveDescriptor({"og1": "Og1-", "og2": "Og2-", "r1": "R1-", "r2": "R2-"}[name], tuple(arg_ids))
        if name == "og1":
            if len(args) != 1:
                raise ParseError("og1 add expects a sign")
            return MoveDescriptor("Og1+", (), {"sign": _cli_sign(args[0])})
        if name == "og2":
            if len(args) < 2:
                raise ParseError("og2 add expects framing and sign")
            return MoveDescriptor(
                "Og2+", (), {"framing": bit(args[0]), "sign": _cli_sign(args[1]), "neighbors": tuple(arg_ids[2:])}
            )
        if name == "r1":
            if len(args) != 1:
                raise ParseError("r1 add expects a loop flag")
            return MoveDescriptor("R1+", (), {"looped": bool(bit(args[0]))})
        if not args:
            raise ParseError("r2 add expects an adjacency flag")
        return MoveDescriptor("R2+", (), {"adjacent": bool(bit(args[0])), "neighbors": tuple(arg_ids[1:])})
    raise ParseError(f"unknown move spec {' '.join(tokens)!r}")


def _cli_sign(tok: str) -> int:
    if tok not in ("+", "-"):
        raise ParseError(f"sign must be + or -, got {tok!r}")
    return 1 if tok == "+" else -1


def cmd_move(args) -> int:
    g = _load_graph(args.file)
    m = parse_move_spec(args.spec)
    _emit(textio.dump(apply_move(g, m)), args.output)
    return EXIT_OK


def cmd_moves(args) -> int:
    g = _load_graph(args.file)
    for m in detect_moves(g):
        print(m)
    return EXIT_OK


# -- realizability -----------------------------------------------------------------------


def cmd_realize(args) -> int:
    g = _load_graph(args.file)
    if len(g) > args.max_chords:
        raise SizeLimit(f"graph has {len(g)} vertices, --max-chords is {args.max_chords}")
    if args.level == "representative":
        d = realize(g, args.max_chords)
        _emit(textio.dump(d) if d is not None else "non-realizable\n", args.output)
        return EXIT_OK
    bound = len(g) if args.max_vertices is None else args.max_vertices
    verdict = graphlink_realizability(g, bound, args.max_steps, args.max_chords)
    if verdict.verdict is Realizability.REALIZABLE_WITNESS:
        text = textio.dump(verdict.diagram)
        if verdict.path:
            text = "".join(f"# via {m}\n" for m in verdict.path) + text
        _emit(text, args.output)
    else:
        _emit(verdict.verdict.value + "\n", args.output)
    return EXIT_OK


# -- equivalence ----------------------------------------------------------------------------


def cmd_equiv(args) -> int:
    g1, g2 = _load_graph(args.file_a), _load_graph(args.file_b)
    path = equivalence_search(g1, g2, args.max_vertices, args.max_steps)
    if path is None:
        print("not-found-within-bounds")
        return EXIT_OK
    print(f"equivalent: {len(path)} move(s)")
    for m in path:
        print(m)
    return EXIT_OK


# -- chi -------------------------------------------------------------------------------------


def cmd_chi(args) -> int:
    g = _load_graph(args.file)
    direction = args.direction or ("to-labeled" if isinstance(g, LoopedGraph) else "to-looped")
    if direction == "to-looped":
        if not isinstance(g, LabeledGraph):
            raise GraphLinkError("to-looped needs a labeled graph file")
        out = chi(g)
    else:
        if not isinstance(g, LoopedGraph):
            raise GraphLinkError("to-labeled needs a looped graph file")
        out = chi_inverse(g)
    _emit(textio.dump(out), args.output)
    return EXIT_OK


# -- parity brackets -------------------------------------------------------------------------


def parity_bracket_records(g, kind: str) -> list[str]:
    """Reduced parity bracket as one-line graph records in canonical-form order."""
    looped = isinstance(g, LoopedGraph)
    lab = chi_inverse(g) if looped else g
    total = bracket_knot(lab) if kind == "knot" else bracket_link2(lab)
    reduced = reduce_sum(total)
    records = []
    for key in reduced.keys():
        rep = graph_from_form(key)
        if looped:
            rep = chi(rep).forget_loops()
        records.append(textio.dump_record(rep))
    return records


def cmd_bracket_parity(args) -> int:
    g = _load_graph(args.file)
    kind = args.kind
    if isinstance(g, LoopedGraph) and kind != "knot":
        raise GraphLinkError("looped graphs describe knots; use --kind knot")
    records = parity_bracket_records(g, kind)
    _emit("".join(f"{r}\n" for r in [f"summands: {len(records)}", *records]), args.output)
    return EXIT_OK


# -- entry point --------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=1, help="worker processes for state sums")
    p = argparse.ArgumentParser(prog="graphlink", description="Graph-links: invariants, moves, realizability.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("invariants", parents=[common], help="report invariants and certificates")
    s.add_argument("file")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("move", parents=[common], help="apply one move", epilog=_MOVE_HELP,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    s.add_argument("file")
    s.add_argument("spec", nargs="+")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_move)

    s = sub.add_parser("moves", parents=[common], help="list applicable moves")
    s.add_argument("file")
    s.set_defaults(func=cmd_moves)

    s = sub.add_parser("realize", parents=[common], help="find a chord diagram or a verdict")
    s.add_argument("file")
    s.add_argument("--max-chords", type=int, default=8)
    s.add_argument("--level", choices=("representative", "graph-link"), default="graph-link")
    s.add_argument("--max-vertices", type=int, default=None, help="search bound (default: input size)")
    s.add_argument("--max-steps", type=int, default=2_000)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_realize)

    s = sub.add_parser("equiv", parents=[common], help="search for a move sequence between two graphs")
    s.add_argument("file_a")
    s.add_argument("file_b")
    s.add_argument("--max-vertices", type=int, default=12)
    s.add_argument("--max-steps", type=int, default=100_000)
    s.set_defaults(func=cmd_equiv)

    s = sub.add_parser("chi", parents=[common], help="convert between labeled and looped graphs")
    s.add_argument("file")
    s.add_argument("--direction", choices=("to-looped", "to-labeled"))
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_chi)

    s = sub.add_parser("bracket-parity", parents=[common], help="reduced parity bracket")
    s.add_argument("file")
    s.add_argument("--kind", choices=("knot", "link2"), default="knot")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_bracket_parity)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (SizeLimit, OrbitLimit) as exc:
        print(f"limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (GraphLinkError, TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
