"""Command line front end: ``flipcat <subcommand> ...``.

Exit status is 0 on success, 1 on validation errors or failed claims and
2 on usage errors.  Errors are written to stderr as one JSON object with a
stable ``code`` field.
"""
from __future__ import annotations

import argparse
import json
import sys
from collections import deque

from . import core, flipgraph, flips, tl
from .errors import FlipcatError
from .verify import run_all

SEQ_FORMATS = ("matching", "triangulation", "bits", "degrees")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _read_input(value: str | None) -> str:
    if value is None or value == "-":
        return sys.stdin.read()
    if value.startswith("@"):
        with open(value[1:]) as fh:
            return fh.read()
    return value


def _parse_json(text: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON input: {exc}") from None
    if not isinstance(obj, dict):
        raise UsageError("expected a JSON object")
    return obj


def _parse_structure(text: str, n: int | None):
    """A triangulation, matching, tl output object, or generator word."""
    text = text.strip()
    if text.startswith("{"):
        obj = _parse_json(text)
        if "triangulation" in obj:
            obj = obj["triangulation"]
        if "diagonals" in obj:
            return core.triangulation_from_json(obj)
        if "arcs" in obj:
            return core.matching_from_json(obj)
        raise UsageError("JSON object has neither 'diagonals' nor 'arcs'")
    if n is None:
        raise UsageError("a generator word needs --n")
    return tl.parse_word(text)


def _as_triangulation(obj, n: int | None) -> core.Triangulation:
    if isinstance(obj, core.Triangulation):
        return obj
    if isinstance(obj, core.Matching):
        return core.matching_to_triangulation(obj)
    return tl.word_to_triangulation(obj, n)[0]


# -- word lookup ----------------------------------------------------------------

_WORD_TABLES: dict[int, dict[core.Matching, tl.Word]] = {}
WORD_LOOKUP_MAX_N = 9


def shortest_words(n: int) -> dict[core.Matching, tl.Word]:
    """A shortest generator word for every loop-free diagram of ``TL_n``.

    Breadth-first in the order u_1, ..., u_{n-1}, so the choice is stable.
    """
    if n not in _WORD_TABLES:
        gens = [tl.generator_diagram(n, i) for i in range(1, n)]
        start = tl.identity_diagram(n)
        table = {start.pairing: ()}
        queue = deque([start])
        while queue:
            d = queue.popleft()
            for i, g in enumerate(gens, 1):
                p = tl.multiply(d, g)
                if p.pairing not in table:
                    table[p.pairing] = table[d.pairing] + (i,)
                    queue.append(tl.TLDiagram(n, p.pairing))
        _WORD_TABLES[n] = table
    return _WORD_TABLES[n]


def _generator_index(t: core.Triangulation) -> int | None:
    n = t.n
    if n >= 2 and t == flipgraph.generator_node(n, 0):
        return 0
    for i in range(1, n):
        if t == tl.generator_triangulation(n, i):
            return i
    return None


# -- subcommands ----------------------------------------------------------------


def cmd_convert(args) -> int:
    text = _read_input(args.input).strip()
    src, dst = args.from_, args.to
    if src == "matching":
        bits = core.matching_outdegrees(core.matching_from_json(_parse_json(text)))
    elif src == "triangulation":
        t = core.triangulation_from_json(_parse_json(text))
        bits = core.bits_from_degrees(core.triangulation_outdegrees(t))
    elif src == "bits":
        bits = core.parse_bits(text)
    else:
        bits = core.bits_from_degrees(core.parse_degrees(text))
    if dst == "bits":
        out = core.format_bits(bits)
    elif dst == "degrees":
        out = core.format_degrees(core.degrees_from_bits(bits))
    elif dst == "matching":
        out = _dump(core.matching_from_outdegrees(bits).to_json())
    else:
        out = _dump(core.triangulation_from_outdegrees(core.degrees_from_bits(bits)).to_json())
    print(out)
    return 0


def cmd_neighbors(args) -> int:
    obj = _parse_structure(_read_input(args.input), args.n)
    t = _as_triangulation(obj, args.n)
    n = t.n
    words: dict[core.Triangulation, tl.Word] = {}
    gen = _generator_index(t)
    if gen is not None and n >= 2:
        for w in flipgraph.all_generator_neighbors(n, gen):
            words[tl.word_to_triangulation(w, n)[0]] = w
    elif n <= WORD_LOOKUP_MAX_N:
        table = shortest_words(n)
    for s in flips.diagonal_flip_neighbors(t):
        entry = {"flip": flips.find_diagonal_flip(t, _removed(t, s)).to_json(), "triangulation": s.to_json()}
        if s in words:
            entry["word"] = tl.format_word(words[s])
        elif gen is None and n <= WORD_LOOKUP_MAX_N:
            entry["word"] = tl.format_word(table[core.triangulation_to_matching(s)])
        print(_dump(entry))
    return 0


def _removed(t: core.Triangulation, s: core.Triangulation) -> core.Pair:
    (old,) = set(t.diagonals) - set(s.diagonals)
    return old


def cmd_flip(args) -> int:
    obj = _parse_structure(_read_input(args.input), None)
    op = _parse_json(args.op)
    kind = op.get("kind")
    if kind == "diagonal":
        t = _as_triangulation(obj, None)
        f = flips.find_diagonal_flip(t, op["old"])
        out = {
            "triangulation": flips.diagonal_flip(t, f.old_diagonal).to_json(),
            "flip": {**f.to_json(), "new": list(f.new_diagonal), "quad": list(f.quad)},
            "transported": flips.transport_diagonal_flip(t, f).to_json(),
            "matching": core.triangulation_to_matching(flips.diagonal_flip(t, f.old_diagonal)).to_json(),
        }
    elif kind == "arc_move":
        m = obj if isinstance(obj, core.Matching) else core.triangulation_to_matching(obj)
        move = flips.ArcMove(tuple(op["arc"]), op["move"])
        result = flips.apply_arc_move(m, move)
        f = flips.transport_arc_move(m, move)
        out = {
            "matching": result.to_json(),
            "transported": {**f.to_json(), "new": list(f.new_diagonal), "quad": list(f.quad)},
            "triangulation": core.matching_to_triangulation(result).to_json(),
        }
    elif kind == "matching":
        m = obj if isinstance(obj, core.Matching) else core.triangulation_to_matching(obj)
        f = flips.MatchingFlip(tuple(op["indices"]), op.get("direction", flips.NEST_TO_SEQ))
        result = flips.apply_matching_flip(m, f)
        before = core.matching_to_triangulation(m)
        after = core.matching_to_triangulation(result)
        out = {
            "matching": result.to_json(),
            "triangulation": after.to_json(),
            "removed_diagonals": [list(d) for d in sorted(set(before.diagonals) - set(after.diagonals))],
            "added_diagonals": [list(d) for d in sorted(set(after.diagonals) - set(before.diagonals))],
            "special_cases": list(flips.special_cases(f)),
        }
        if f.direction == flips.NEST_TO_SEQ and not out["special_cases"]:
            effect = flips.matching_flip_deffect(m, f)
            out["deffect"] = {"p": effect.p, "q": effect.q,
                              "before": core.format_degrees(effect.before),
                              "after": core.format_degrees(effect.after)}
    else:
        raise UsageError(f"unknown flip kind {kind!r}")
    print(_dump(out))
    return 0


def cmd_distance(args) -> int:
    a = _as_triangulation(_parse_structure(args.a, args.n), args.n)
    b = _as_triangulation(_parse_structure(args.b, args.n), args.n)
    res = flipgraph.flip_distance(a, b, witness=args.witness)
    out = {"distance": res.distance, "lower_bound": res.lower_bound}
    if args.witness:
        out["witness"] = [core.format_degrees(core.triangulation_outdegrees(t)) for t in res.witness_path]
    print(_dump(out))
    return 0


def cmd_graph(args) -> int:
    g = flipgraph.build_flip_graph(args.n)
    if args.dot:
        highlight = []
        if args.highlight == "generators":
            highlight = [flipgraph.node_key(flipgraph.generator_node(args.n, i)) for i in range(args.n)]
        sys.stdout.write(flipgraph.export_dot(g, highlight))
    else:
        print(_dump({"n": g.n, "nodes": len(g), "edges": g.edge_count()}))
    return 0


def cmd_tl(args) -> int:
    word = tl.parse_word(args.word)
    d = tl.evaluate_word(word, args.n)
    t, loop_free = tl.word_to_triangulation(word, args.n)
    out = {
        "n": args.n,
        "word": tl.format_word(word),
        "diagram": d.to_json(),
        "loops": d.loops,
        "basis_element": loop_free,
        "triangulation": t.to_json(),
        "degrees": core.format_degrees(core.triangulation_outdegrees(t)),
    }
    print(_dump(out))
    return 0


def cmd_verify(args) -> int:
    results = run_all(args.n_max)
    for r in results:
        print(r.line())
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} claims passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="flipcat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="convert between the four encodings")
    p.add_argument("--from", dest="from_", choices=SEQ_FORMATS, required=True)
    p.add_argument("--to", choices=SEQ_FORMATS, required=True)
    p.add_argument("--input", help="literal input, @file, or - for stdin (default)")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("neighbors", help="list flip neighbors of a triangulation or word")
    p.add_argument("--input", help="triangulation/matching JSON or generator word (default stdin)")
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_neighbors)

    p = sub.add_parser("flip", help="apply a flip and report its transport")
    p.add_argument("--input", help="triangulation or matching JSON (default stdin)")
    p.add_argument("--op", required=True, help="flip descriptor JSON")
    p.set_defaults(func=cmd_flip)

    p = sub.add_parser("distance", help="flip distance between two triangulations")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("graph", help="build the flip graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dot", action="store_true")
    p.add_argument("--highlight", choices=["generators"])
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("tl", help="evaluate a Temperley-Lieb word")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_tl)

    p = sub.add_parser("verify", help="check every claim up to a size bound")
    p.add_argument("--n-max", type=int, default=8)
    p.set_defaults(func=cmd_verify)
    return parser


def _error(code: str, message: str) -> None:
    sys.stderr.write(_dump({"code": code, "message": message}) + "\n")


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        _error("usage", str(exc))
        return 2
    except FlipcatError as exc:
        _error(exc.code, str(exc))
        return 1
    except (KeyError, TypeError) as exc:
        _error("usage", f"malformed input: {exc}")
        return 2


def main() -> None:
    sys.exit(run())
