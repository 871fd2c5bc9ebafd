"""Command-line front end.

Subcommands cover both halves of the package: ``classify``, ``normalize``,
``sum``, ``glue``, and ``replay`` operate on polygon edge-words, while
``rational`` executes a construction script against the lattice calculus.
Every subcommand accepts ``--json`` for machine-readable output carrying the
same numbers as the human report.

Exit codes: 0 on success, 1 for bad input (syntax, validation, script
errors), 2 for an internal invariant violation or a trace whose replay
produces an invalid intermediate, which indicates a bug rather than a user
mistake.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .lattice import RationalSurface, euler_characteristic_cx, intersect
from .minimal import ReductionReport
from .moves import MoveTrace, ReplayError, parse_trace, replay
from .normalize import normalize
from .script import render_reduction, render_report, run_script
from .sums import connected_sum_words
from .words import (
    InternalInvariantError,
    SurfaceType,
    SurfclassError,
    Word,
    canonical_word,
    classify_by_invariants,
    glue_polygons,
    parse_polygon_file,
    parse_word,
    validate,
)


def _type_fields(t: SurfaceType) -> dict:
    return {
        "type": str(t),
        "genus": t.genus if t.orientable else 0,
        "crosscaps": 0 if t.orientable else t.genus,
        "euler": t.euler,
    }


def _print_word_report(word: Word, t: SurfaceType, out) -> None:
    print(f"word: {word.render()}", file=out)
    print(f"type: {t.describe()}", file=out)
    print(f"canonical: {canonical_word(t).render()}", file=out)


def cmd_classify(args) -> int:
    word = validate(parse_word(args.word))
    t = classify_by_invariants(word)
    if args.json:
        payload = _type_fields(t)
        payload["canonical"] = canonical_word(t).render()
        print(json.dumps(payload))
    else:
        _print_word_report(word, t, sys.stdout)
    return 0


def cmd_normalize(args) -> int:
    word = parse_word(args.word)
    result = normalize(word)
    t = result.type
    canonical = canonical_word(t).render()
    if args.json:
        payload = _type_fields(t)
        payload["canonical"] = canonical
        if args.trace:
            payload["trace"] = [m.render() for m in result.trace.steps]
        print(json.dumps(payload))
    elif args.trace:
        # a replayable document: comments carry the summary, the rest is
        # one move per line in the trace grammar
        print(f"# initial: {word.render()}")
        print(f"# type: {t.describe()}")
        print(f"# canonical: {canonical}")
        print(f"# moves: {len(result.trace.steps)}")
        rendered = result.trace.render()
        if rendered:
            print(rendered)
    else:
        _print_word_report(word, t, sys.stdout)
        print(f"moves: {len(result.trace.steps)}")
    return 0


def cmd_sum(args) -> int:
    w1 = parse_word(args.word1)
    w2 = parse_word(args.word2)
    total = connected_sum_words(w1, w2)
    t = normalize(total).type
    if args.json:
        payload = _type_fields(t)
        payload["canonical"] = canonical_word(t).render()
        print(json.dumps(payload))
    else:
        _print_word_report(total, t, sys.stdout)
    return 0


def cmd_glue(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        polys = parse_polygon_file(fh.read())
    merged = glue_polygons(polys)
    t = normalize(merged).type
    if args.json:
        payload = _type_fields(t)
        payload["canonical"] = canonical_word(t).render()
        print(json.dumps(payload))
    else:
        print(f"polygons: {len(polys.polygons)}", file=sys.stdout)
        _print_word_report(merged, t, sys.stdout)
    return 0


def cmd_replay(args) -> int:
    word = parse_word(args.word)
    with open(args.tracefile, encoding="utf-8") as fh:
        trace = parse_trace(fh.read(), word)
    final = replay(trace)
    t = classify_by_invariants(final)
    if args.json:
        payload = _type_fields(t)
        payload["canonical"] = canonical_word(t).render()
        payload["trace"] = [m.render() for m in trace.steps]
        print(json.dumps(payload))
    else:
        print(f"initial: {word.render()}")
        print(f"final: {final.render()}")
        print(f"type: {t.describe()}")
        print(f"moves: {len(trace.steps)}")
    return 0


def _lattice_payload(surf: RationalSurface) -> dict:
    return {
        "basis": list(surf.basis),
        "gram": [list(row) for row in surf.gram],
        "canonical": list(surf.canonical.coords),
        "tracked": {nm: list(cls.coords) for nm, cls in surf.tracked},
    }


def cmd_rational(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        outcome = run_script(fh.read())
    surf = outcome.surface
    reductions = outcome.reductions
    if args.json:
        payload = {
            "lattice": _lattice_payload(surf),
            "k_squared": surf.k_squared,
            "b2": surf.rank,
            "euler": euler_characteristic_cx(surf),
        }
        if reductions:
            last: ReductionReport = reductions[-1]
            payload["minimal"] = str(last.final)
            payload["steps"] = [
                {"line": nm, "class": list(cls.coords)} for nm, cls in last.steps
            ]
        print(json.dumps(payload))
    else:
        blocks = []
        for kind, payload in outcome.events:
            blocks.append(
                payload if kind == "report" else render_reduction(payload)
            )
        if not blocks:
            blocks.append(render_report(surf))
        print("\n\n".join(blocks))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="surfclass",
        description="Classify closed surfaces from polygon edge-words and "
        "reduce rational complex surfaces to minimal models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify an edge-word by its invariants")
    p.add_argument("word", help="edge-word, e.g. \"a b a' b'\" or compact aba'b'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("normalize", help="rewrite an edge-word to canonical form")
    p.add_argument("word")
    p.add_argument("--trace", action="store_true", help="emit the move trace")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("sum", help="connected sum of two edge-words")
    p.add_argument("word1")
    p.add_argument("word2")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("glue", help="merge a polygon-set file and classify it")
    p.add_argument("file", help="one polygon word per line, # comments")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_glue)

    p = sub.add_parser("replay", help="replay a move trace against a word")
    p.add_argument("word")
    p.add_argument("tracefile", help="one move per line, # comments")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("rational", help="run a rational-surface script")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_rational)

    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ReplayError, InternalInvariantError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except SurfclassError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
