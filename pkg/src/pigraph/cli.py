"""Command-line surface.

Exit codes: 0 accept, 1 reject, 2 usage or parse error, 3 size guard.
All output is plain text, one logical record per line; --json wraps the
same fields.  Identical inputs and flags produce byte-identical output.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .alternating import NotAlternatelyOrientable, OddCycle, alternating_orientation_of_cocomp
from .apex import (
    AUX_NOT_BIPARTITE,
    NOT_COCOMPARABILITY,
    C4AlternationViolation,
    PhiUnsatWitness,
    Rejection,
    recognize,
    verify_apex_ordering,
)
from .files import (
    ParseError,
    read_graph,
    read_ordering,
    write_graph,
    write_nonbetweenness,
    write_representation,
)
from .generate import (
    nonbetweenness_to_graph,
    random_nonbetweenness,
    random_representation,
    representation_to_graph,
)
from .oracle import InputTooLarge, brute_force_recognize
from .transitive import (
    ForcingConflict,
    NotCocomparability,
    UmbrellaViolation,
    cocomparability_orient,
    verify_transitive_extension,
)

EXIT_ACCEPT = 0
EXIT_REJECT = 1
EXIT_USAGE = 2
EXIT_TOO_LARGE = 3


def _pair_token(pair) -> str:
    return f"{pair[0]}:{pair[1]}"


def _lit_token(lit) -> str:
    var, positive = lit
    return f"x{var}" if positive else f"~x{var}"


def witness_lines(w) -> list[str]:
    if isinstance(w, ForcingConflict):
        chain = lambda c: " ".join(f"{a} {b}" for a, b in c)
        return [
            f"SEED {w.seed[0]} {w.seed[1]}",
            f"CHAIN {chain(w.chain_a)}",
            f"CHAIN {chain(w.chain_b)}",
        ]
    if isinstance(w, UmbrellaViolation):
        return [f"UMBRELLA {w.u} {w.v} {w.w}"]
    if isinstance(w, C4AlternationViolation):
        return [f"C4_NOT_ALTERNATING {w.a} {w.b} {w.c} {w.d}"]
    if isinstance(w, OddCycle):
        return ["ODD_CLOSED_WALK " + " ".join(_pair_token(p) for p in w.nodes)]
    if isinstance(w, PhiUnsatWitness):
        return [
            f"VARIABLE {w.unsat.variable} PAIR {_pair_token(w.variable_pair)}",
            "POS_PATH " + " ".join(_lit_token(l) for l in w.unsat.pos_path),
            "NEG_PATH " + " ".join(_lit_token(l) for l in w.unsat.neg_path),
        ]
    raise TypeError(f"unknown witness type {type(w).__name__}")


def witness_json(w):
    if isinstance(w, ForcingConflict):
        return {
            "type": "forcing_conflict",
            "seed": list(w.seed),
            "chains": [[list(a) for a in w.chain_a], [list(a) for a in w.chain_b]],
        }
    if isinstance(w, UmbrellaViolation):
        return {"type": "umbrella", "triple": [w.u, w.v, w.w]}
    if isinstance(w, C4AlternationViolation):
        return {"type": "c4_not_alternating", "cycle": [w.a, w.b, w.c, w.d]}
    if isinstance(w, OddCycle):
        return {"type": "odd_closed_walk", "walk": [list(p) for p in w.nodes]}
    if isinstance(w, PhiUnsatWitness):
        return {
            "type": "phi_unsatisfiable",
            "variable": w.unsat.variable,
            "pair": list(w.variable_pair),
            "pos_path": [_lit_token(l) for l in w.unsat.pos_path],
            "neg_path": [_lit_token(l) for l in w.unsat.neg_path],
        }
    raise TypeError(f"unknown witness type {type(w).__name__}")


class _Out:
    def __init__(self, args):
        self.quiet = getattr(args, "quiet", False)
        self.json = getattr(args, "json", False)

    def lines(self, text_lines: list[str], payload: dict) -> None:
        if self.quiet:
            return
        if self.json:
            print(json.dumps(payload, sort_keys=True))
        else:
            for line in text_lines:
                print(line)


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _recognize_one(text: str, out: _Out) -> int:
    g = read_graph(text)
    res = recognize(g)
    if isinstance(res, Rejection):
        out.lines(
            [res.stage] + witness_lines(res.witness),
            {"outcome": "reject", "stage": res.stage, "witness": witness_json(res.witness)},
        )
        return EXIT_REJECT
    out.lines(
        [" ".join(map(str, res))],
        {"outcome": "accept", "ordering": list(res)},
    )
    return EXIT_ACCEPT


def cmd_recognize(args) -> int:
    out = _Out(args)
    if args.batch is not None:
        if args.graph is not None:
            print("recognize: give either a graph file or --batch, not both", file=sys.stderr)
            return EXIT_USAGE
        root = Path(args.batch)
        if not root.is_dir():
            print(f"recognize: {root} is not a directory", file=sys.stderr)
            return EXIT_USAGE
        worst = EXIT_ACCEPT
        for path in sorted(p for p in root.iterdir() if p.is_file()):
            if not out.quiet and not out.json:
                print(f"== {path.name}")
            try:
                code = _recognize_one(path.read_text(encoding="utf-8"), out)
            except ParseError as exc:
                if not out.quiet:
                    if out.json:
                        print(json.dumps(
                            {"file": path.name, "outcome": "parse_error", "error": str(exc)},
                            sort_keys=True,
                        ))
                    else:
                        print(f"PARSE_ERROR {exc}")
                code = EXIT_USAGE
            worst = max(worst, code)
        return worst
    if args.graph is None:
        print("recognize: a graph file (or --batch DIR) is required", file=sys.stderr)
        return EXIT_USAGE
    return _recognize_one(_read(args.graph), out)


def cmd_verify(args) -> int:
    out = _Out(args)
    g = read_graph(_read(args.graph))
    sigma = read_ordering(_read(args.ordering))
    try:
        viol = verify_apex_ordering(g, sigma)
    except ValueError as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if viol is None:
        out.lines(["OK"], {"outcome": "ok"})
        return EXIT_ACCEPT
    out.lines(
        witness_lines(viol),
        {"outcome": "violation", "witness": witness_json(viol)},
    )
    return EXIT_REJECT


def cmd_cocomp(args) -> int:
    out = _Out(args)
    g = read_graph(_read(args.graph))
    if args.ordering is not None:
        sigma = read_ordering(_read(args.ordering))
        try:
            viol = verify_transitive_extension(g, sigma)
        except ValueError as exc:
            print(f"cocomp: {exc}", file=sys.stderr)
            return EXIT_USAGE
        if viol is None:
            out.lines(["OK"], {"outcome": "ok"})
            return EXIT_ACCEPT
        out.lines(
            witness_lines(viol),
            {"outcome": "violation", "witness": witness_json(viol)},
        )
        return EXIT_REJECT
    res = cocomparability_orient(g)
    if isinstance(res, NotCocomparability):
        out.lines(
            [NOT_COCOMPARABILITY] + witness_lines(res.witness),
            {
                "outcome": "reject",
                "stage": NOT_COCOMPARABILITY,
                "witness": witness_json(res.witness),
            },
        )
        return EXIT_REJECT
    _fbar, sigma = res
    out.lines(
        [" ".join(map(str, sigma))],
        {"outcome": "accept", "ordering": list(sigma)},
    )
    return EXIT_ACCEPT


def cmd_altorient(args) -> int:
    out = _Out(args)
    g = read_graph(_read(args.graph))
    res = alternating_orientation_of_cocomp(g)
    if isinstance(res, NotCocomparability):
        out.lines(
            [NOT_COCOMPARABILITY] + witness_lines(res.witness),
            {
                "outcome": "reject",
                "stage": NOT_COCOMPARABILITY,
                "witness": witness_json(res.witness),
            },
        )
        return EXIT_REJECT
    if isinstance(res, NotAlternatelyOrientable):
        out.lines(
            [AUX_NOT_BIPARTITE] + witness_lines(res.witness),
            {
                "outcome": "reject",
                "stage": AUX_NOT_BIPARTITE,
                "witness": witness_json(res.witness),
            },
        )
        return EXIT_REJECT
    arcs = sorted(res.arcs())
    out.lines(
        [f"{u} {v}" for u, v in arcs],
        {"outcome": "accept", "arcs": [list(a) for a in arcs]},
    )
    return EXIT_ACCEPT


def cmd_oracle(args) -> int:
    out = _Out(args)
    g = read_graph(_read(args.graph))
    sigma = brute_force_recognize(g)  # InputTooLarge propagates to main
    if sigma is None:
        out.lines(["NO"], {"outcome": "reject"})
        return EXIT_REJECT
    out.lines(
        ["YES", " ".join(map(str, sigma))],
        {"outcome": "accept", "ordering": list(sigma)},
    )
    return EXIT_ACCEPT


def cmd_gen(args) -> int:
    if args.kind == "rep":
        rep = random_representation(args.n, args.seed, window=args.window)
        Path(args.out).write_text(write_representation(rep), encoding="utf-8")
        if args.graph_out:
            g = representation_to_graph(rep)
            Path(args.graph_out).write_text(write_graph(g), encoding="utf-8")
    else:
        inst = random_nonbetweenness(args.n, args.triples, args.seed)
        Path(args.out).write_text(write_nonbetweenness(inst), encoding="utf-8")
        if args.graph_out:
            g = nonbetweenness_to_graph(inst)
            Path(args.graph_out).write_text(write_graph(g), encoding="utf-8")
    return EXIT_ACCEPT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pigraph",
        description="Simple-triangle (PI) graph recognition, verification, "
        "oracles and instance generators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, quiet=True):
        p.add_argument("--json", action="store_true", help="emit one JSON object instead of text")
        if quiet:
            p.add_argument("--quiet", action="store_true", help="no output, exit code only")

    p = sub.add_parser("recognize", help="recognize a graph file; print an apex ordering")
    p.add_argument("graph", nargs="?", help="graph file ('n m' header, then edge lines)")
    p.add_argument("--batch", metavar="DIR", help="process every file in DIR")
    common(p)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("verify", help="check an apex ordering against a graph")
    p.add_argument("graph")
    p.add_argument("ordering", help="file of whitespace-separated vertex labels")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cocomp", help="cocomparability recognition (Step 1 alone)")
    p.add_argument("graph")
    p.add_argument("--ordering", help="verify this ordering instead of computing one")
    common(p)
    p.set_defaults(func=cmd_cocomp)

    p = sub.add_parser("altorient", help="alternating orientation of a cocomparability graph")
    p.add_argument("graph")
    common(p)
    p.set_defaults(func=cmd_altorient)

    p = sub.add_parser("oracle", help="factorial-time reference verdict (n <= 9)")
    p.add_argument("graph")
    common(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="write a random instance file")
    p.add_argument("kind", choices=["rep", "reduction"])
    p.add_argument("--n", type=int, required=True, help="triangles (rep) or |A| (reduction)")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--window", type=int, default=None,
                   help="rep only: local shuffle radius; small values give sparse graphs")
    p.add_argument("--triples", type=int, default=0, help="reduction only: |C|")
    p.add_argument("--out", required=True, help="instance file to write")
    p.add_argument("--graph-out", default=None, help="also write the derived graph file")
    common(p, quiet=False)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"PARSE_ERROR {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputTooLarge as exc:
        print(f"INPUT_TOO_LARGE {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except OSError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
