"""Batch command line: solve, verify, construct, play.

Exit codes: 0 pass, 1 usage/input error, 2 resource cap, 3 verification
failure — CI can tell "theorem falsified" from "ran out of budget".
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import families, game, solver, verifier
from .connectivity import Matching, find_perfect_matching, is_k_connected
from .forest import beta_context, construct_forest
from .graph import Graph, GraphError, bits, edge, load_graph, mask_of

EXIT_OK, EXIT_INPUT, EXIT_CAP, EXIT_FALSIFIED = 0, 1, 2, 3

CLAIMS = ("main", "nonsharp", "tree-char", "mpw", "lemma-kconn", "forest-pipeline", "all")


def resolve_graph(spec: str) -> Graph:
    """Builtin name first, then a file path (edge list or JSON)."""
    try:
        return families.builtin(spec)
    except GraphError:
        pass
    try:
        with open(spec) as fh:
            return load_graph(fh.read())
    except OSError as exc:
        raise GraphError(f"{spec!r} is neither a builtin nor a readable file: {exc}")


def _options(args) -> solver.SolveOptions:
    return solver.SolveOptions(
        cap=args.cap,
        timeout_ms=args.timeout_ms,
        additive=not args.strict,
    )


def emit(payload, args):
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        _emit_text(payload)


def _emit_text(payload, indent=""):
    if isinstance(payload, dict):
        for key, val in payload.items():
            if isinstance(val, (dict, list)):
                print(f"{indent}{key}:")
                _emit_text(val, indent + "  ")
            else:
                print(f"{indent}{key}: {val}")
    elif isinstance(payload, list):
        if all(not isinstance(v, (dict, list)) for v in payload):
            print(f"{indent}{', '.join(str(v) for v in payload)}")
        else:
            for val in payload:
                _emit_text(val, indent)
    else:
        print(f"{indent}{payload}")


def cmd_solve(args) -> int:
    g = resolve_graph(args.graph)
    result = solver.solve(g, _options(args))
    emit(result.to_json(), args)
    return EXIT_OK


def _run_claim(claim: str, g: Graph, args, opts, instance):
    if claim == "main":
        return [verifier.verify_main_theorem(g, args.k, opts, instance=instance)]
    if claim == "nonsharp":
        return [verifier.verify_nonsharpness(g, args.k, opts, instance=instance)]
    if claim == "tree-char":
        return [verifier.verify_tree_characterization(g, opts, instance=instance)]
    if claim == "mpw":
        return [verifier.verify_mpw_bounds(g, opts, instance=instance)]
    if claim == "lemma-kconn":
        return [verifier.verify_lemma_kconn(g, args.k, instance=instance)]
    if claim == "forest-pipeline":
        return [verifier.verify_forest_pipeline(g, args.k, opts, instance=instance)]
    raise GraphError(f"unknown claim {claim!r}")


def cmd_verify(args) -> int:
    opts = _options(args)
    reports = []
    if args.suite == "standard":
        reports = verifier.standard_suite(args.seed, opts)
    elif args.sweep:
        name, _, span = args.sweep.partition(":")
        lo, _, hi = span.partition("-")
        for n in range(int(lo), int(hi or lo) + 1):
            g = families.builtin(f"{name}:{n}")
            for claim in CLAIMS[:-1] if args.claim == "all" else [args.claim]:
                try:
                    reports.extend(_run_claim(claim, g, args, opts, f"{name}:{n}"))
                except GraphError:
                    continue
        if not reports:
            raise GraphError("sweep produced no applicable reports")
    else:
        if not args.graph:
            print("verify: --graph or --suite required", file=sys.stderr)
            return EXIT_INPUT
        g = resolve_graph(args.graph)
        if args.claim == "all":
            for claim in CLAIMS[:-1]:
                try:
                    reports.extend(_run_claim(claim, g, args, opts, args.graph))
                except GraphError:
                    continue  # claim's preconditions don't fit this instance
        else:
            reports = _run_claim(args.claim, g, args, opts, args.graph)

    if args.format == "json":
        print(json.dumps([r.to_json() for r in reports], indent=2, sort_keys=True))
    else:
        for r in reports:
            print(r.render_text())
    return EXIT_FALSIFIED if any(r.holds is False for r in reports) else EXIT_OK


def _parse_vertices(g: Graph, spec: str) -> int:
    """Comma-separated labels or indices into a vertex mask."""
    if not spec.strip():
        return 0
    by_label = {g.label(v): v for v in range(g.n)}
    out = 0
    for token in spec.split(","):
        token = token.strip()
        if token in by_label:
            out |= 1 << by_label[token]
        elif token.isdigit() and int(token) < g.n:
            out |= 1 << int(token)
        else:
            raise GraphError(f"unknown vertex {token!r}")
    return out


def cmd_construct(args) -> int:
    g = resolve_graph(args.graph)
    if args.matching:
        pairs = [p.split("-") for p in args.matching.split(",")]
        matching = Matching(
            frozenset(edge(int(a), int(b)) for a, b in pairs)
        )
    else:
        matching = find_perfect_matching(g)
        if matching is None:
            raise GraphError("graph has no perfect matching")
    d = _parse_vertices(g, args.delete or "")
    ctx = beta_context(g, matching, d)
    cert, paths = construct_forest(ctx)
    emit(
        {
            "matching": matching.to_json()["matching"],
            "deleted": sorted(bits(d)),
            "beta_vertices": sorted(bits(ctx.d_prime)),
            "surviving_matching": sorted(list(e) for e in ctx.f0),
            "paths": paths.to_json()["paths"],
            "certificate": cert.to_json(g),
        },
        args,
    )
    return EXIT_OK


def _prompt_vertices(g: Graph, prompt: str) -> int:
    while True:
        raw = input(prompt)
        try:
            return _parse_vertices(g, raw)
        except GraphError as exc:
            print(f"  {exc}")


def cmd_play(args) -> int:
    g = resolve_graph(args.graph)
    opts = _options(args)
    engine = solver.get_solver(g, opts)
    human_lister = args.role == "lister"
    s = game.new_game(g)
    print(f"slow coloring on {args.graph} (n={g.n});"
          f" you are {'Lister' if human_lister else 'Painter'}")
    try:
        while not game.is_terminal(s):
            rem = ", ".join(g.label(v) for v in bits(s.remaining))
            print(f"remaining: {{{rem}}}  score: {s.score}")
            if human_lister:
                mark = _prompt_vertices(g, "your mark: ")
            else:
                mark = engine.best_mark(s.remaining)
                print(f"engine marks {{{', '.join(g.label(v) for v in bits(mark))}}}")
            while True:
                try:
                    game.check_mark(s, mark)
                    break
                except game.IllegalMove as exc:
                    print(f"  illegal: {exc}")
                    mark = _prompt_vertices(g, "your mark: ")
            if human_lister:
                reply = engine.best_reply(s.remaining, mark)
                print(f"engine deletes {{{', '.join(g.label(v) for v in bits(reply))}}}")
                s = game.apply_move(s, mark, reply)
            else:
                while True:
                    reply = _prompt_vertices(g, "your deletion: ")
                    try:
                        s = game.apply_move(s, mark, reply)
                        break
                    except game.IllegalMove as exc:
                        if exc.addable is not None:
                            print(f"  illegal: {exc} (vertex {g.label(exc.addable)} can be added)")
                        else:
                            print(f"  illegal: {exc}")
    except EOFError:
        print("\naborted; partial transcript follows")
        print(json.dumps(s.to_json(), sort_keys=True))
        return EXIT_INPUT

    print(f"final score: {s.score}")
    matching = find_perfect_matching(g)
    if matching is not None and is_k_connected(g, 3 * args.k) and g.n >= 4 * args.k:
        bound = Fraction(3 * g.n, 2) + args.k
        print(f"theorem bound 3n/2 + k = {bound}: "
              f"{'met' if s.score >= bound else 'NOT met'}"
              + (" (sharp)" if s.score == bound else ""))
    if args.transcript:
        with open(args.transcript, "w") as fh:
            json.dump(s.to_json(), fh, indent=2, sort_keys=True)
        print(f"transcript saved to {args.transcript}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="slowcolor")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--graph", help="builtin name (prism, path:5, ...) or file path")
        p.add_argument("--k", type=int, default=1)
        p.add_argument("--cap", type=int, default=solver.DEFAULT_CAP)
        p.add_argument("--timeout-ms", type=int, default=None)
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--strict", action="store_true",
                       help="disable additive component decomposition")

    p = sub.add_parser("solve", help="exact slow coloring number")
    common(p)
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("verify", help="check a paper claim on an instance")
    p.add_argument("claim", choices=CLAIMS)
    common(p)
    p.add_argument("--suite", choices=("standard",), default=None)
    p.add_argument("--sweep", help="family sweep, e.g. path:2-8")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("construct", help="run the matching-xor-paths forest construction")
    common(p)
    p.add_argument("--delete", help="comma-separated deleted vertices (Painter's D)")
    p.add_argument("--matching", help="perfect matching as u-v,u-v,... (default: search)")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("play", help="interactive human-vs-engine game")
    common(p)
    p.add_argument("--role", choices=("lister", "painter"), default="painter")
    p.add_argument("--transcript", help="write the transcript JSON here")
    p.set_defaults(fn=cmd_play)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (solver.SolverCapExceeded, solver.SolveTimeout) as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
