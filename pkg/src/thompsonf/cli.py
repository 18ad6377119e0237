"""Command line entry point: ``thompsonf <command> ...``.

Exit codes: 0 success, 1 a checked property failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import cayley, chains, kernel
from .complexity import GammaParams, NotInGamma, complexity, phi, phi_carets
from .forest import ParseError, format_forest, parse_pforest, parse_tree
from .ponzi import verify_ball
from .sampling import random_pforest
from .words import check_relation, decompose, evaluate, format_word, parse_word

AMENABILITY_NOTE = (
    "note: these ratios are exploratory; whether they tend to 0 "
    "(i.e. whether F is amenable) is an open problem and is not decided here"
)


class UsageError(Exception):
    pass


def _params(args) -> GammaParams:
    try:
        return GammaParams(args.k, args.l)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _spec(args) -> cayley.GraphSpec:
    if getattr(args, "full", False):
        return cayley.FullPositiveMonoid()
    return cayley.Gamma(_params(args))


def cmd_eval(args, out) -> int:
    print(evaluate(parse_word(args.word)).key, file=out)
    return 0


def cmd_member(args, out) -> int:
    params = _params(args)
    n = phi_carets(parse_pforest(args.pforest), params.l)
    verb = "caret survives" if n == 1 else "carets survive"
    print(f"{'true' if n <= params.k else 'false'} ({n} {verb})", file=out)
    return 0


def cmd_phi(args, out) -> int:
    if args.l < 1:
        raise UsageError("--l must be >= 1")
    print(format_forest(phi(parse_pforest(args.pforest), args.l)), file=out)
    return 0


def cmd_complexity(args, out) -> int:
    print(complexity(parse_tree(args.tree)), file=out)
    return 0


def cmd_decompose(args, out) -> int:
    params = _params(args)
    try:
        w, v = decompose(parse_pforest(args.pforest), params)
    except NotInGamma as exc:
        raise UsageError(str(exc)) from None
    print(f"w: {format_word(w)}", file=out)
    print(f"v: {format_word(v)}", file=out)
    return 0


def cmd_relations(args, out) -> int:
    rng = random.Random(args.seed)
    points = [random_pforest(rng, max_carets=args.max_carets) for _ in range(args.samples)]
    pairs = [(i, j) for i in range(2, args.max_index + 1) for j in range(0, i - 1)]
    failures = []
    for i, j in pairs:
        for p in points:
            if not check_relation(i, j, p):
                failures.append((i, j, p))
    for i, j, p in failures[:20]:
        print(f"FAIL x{i} x{j} = x{j} x{i - 1} at {p.key}", file=out)
    counter = evaluate((1, 0)) != evaluate((0, 0))
    print(
        f"relations x_i x_j = x_j x_(i-1), j+2 <= i <= {args.max_index}: "
        f"{len(pairs)} pairs x {len(points)} forests, {len(failures)} failures",
        file=out,
    )
    print(f"x1 x0 != x0 x0 (i = j+1 excluded): {'confirmed' if counter else 'NOT confirmed'}", file=out)
    return 0 if not failures and counter else 1


def cmd_ball(args, out) -> int:
    b = cayley.ball(_spec(args), args.radius, jobs=args.jobs)
    if args.json:
        print(cayley.summary_json(b), file=out)
        return 0
    print(f"# {b.spec}, radius {args.radius}", file=out)
    print("depth\tnew\ttotal", file=out)
    total = 0
    for d, n in enumerate(b.growth()):
        total += n
        print(f"{d}\t{n}\t{total}", file=out)
    return 0


def cmd_folner(args, out) -> int:
    b = cayley.ball(_spec(args), args.radius, jobs=args.jobs)
    print(f"# boundary/size of radius-r balls in {b.spec}", file=out)
    print("radius\tsize\tratio", file=out)
    sizes = 0
    for r, (n, ratio) in enumerate(zip(b.growth(), cayley.folner_by_depth(b))):
        sizes += n
        print(f"{r}\t{sizes}\t{ratio.numerator}/{ratio.denominator}", file=out)
    print(AMENABILITY_NOTE, file=out)
    return 0


def cmd_verify(args, out) -> int:
    rep = verify_ball(_params(args), args.radius, jobs=args.jobs)
    if args.json:
        print(rep.dumps(), file=out)
    else:
        print(f"{rep.params}, radius {rep.radius} [{kernel.BACKEND} kernel]", file=out)
        for name in ("vertex_count", "min_divergence", "max_abs_flow", "max_c", "max_right_nontrivial"):
            print(f"  {name}: {getattr(rep, name)}", file=out)
        print(f"  bound k+l: {rep.params.flow_bound}", file=out)
        print(f"  violations: {len(rep.violations)}", file=out)
        for v, reason in rep.violations[:50]:
            print(f"    {v}: {reason}", file=out)
    return 0 if rep.ok else 1


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def cmd_chain_to_flow(args, out) -> int:
    g = chains.parse_graph(_read(args.graph))
    coeffs = chains.parse_chain(_read(args.chain))
    c = chains.UFChain.fit(g, coeffs)
    res = chains.reroute(g, c)
    before = chains.chain_divergences(c, g.n)
    inflow = res.flow.inflows()
    after = [inflow.get(v, 0) for v in range(g.n)]
    for line in res.flow.lines():
        print(line, file=out)
    print("# vertex chain_divergence flow_divergence", file=out)
    for v in range(g.n):
        print(f"# {v} {before[v]} {after[v]}", file=out)
    ok = before == after and res.flow.is_antisymmetric()
    ok = ok and all(g.is_edge(a, b) for a, b in res.flow.values)
    print(f"# K={c.K} R={c.R} max|G|={res.flow.max_abs()} bound={res.bound} preserved={ok}", file=out)
    return 0 if ok else 1


def cmd_export_dot(args, out) -> int:
    b = cayley.ball(_spec(args), args.radius, jobs=args.jobs)
    Path(args.out).write_text(cayley.export_dot(b))
    print(f"wrote {len(b)} vertices to {args.out}", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="thompsonf", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def kl(p, need_k=True):
        if need_k:
            p.add_argument("--k", type=int, required=True)
        p.add_argument("--l", type=int, required=True)

    def graph_opts(p):
        p.add_argument("--k", type=int, default=0)
        p.add_argument("--l", type=int, default=1)
        p.add_argument("--radius", type=int, required=True)
        p.add_argument("--full", action="store_true", help="use the whole positive monoid")
        p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("eval", help="evaluate a positive word")
    p.add_argument("word")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("member", help="membership in Gamma_k^l")
    kl(p)
    p.add_argument("pforest")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("phi", help="apply phi_l")
    kl(p, need_k=False)
    p.add_argument("pforest")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("complexity", help="complexity of a tree")
    p.add_argument("tree")
    p.set_defaults(func=cmd_complexity)

    p = sub.add_parser("decompose", help="write a member of Gamma_k^l as w v")
    kl(p)
    p.add_argument("pforest")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("relations", help="randomized check of the defining relations")
    p.add_argument("--max-index", type=int, default=8)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--max-carets", type=int, default=12)
    p.add_argument("--seed", type=int, default=20080101)
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("ball", help="growth of a Cayley ball")
    graph_opts(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_ball)

    p = sub.add_parser("folner", help="exact boundary ratios per radius")
    graph_opts(p)
    p.set_defaults(func=cmd_folner)

    p = sub.add_parser("verify-ponzi", help="check the Ponzi flow on a ball of Gamma_k^l")
    kl(p)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("chain-to-flow", help="reroute a 1-chain into an edge flow")
    p.add_argument("--graph", required=True)
    p.add_argument("--chain", required=True)
    p.set_defaults(func=cmd_chain_to_flow)

    p = sub.add_parser("export-dot", help="write a Cayley ball as DOT")
    graph_opts(p)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_export_dot)
    return ap


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "radius", 0) < 0:
        print("error: --radius must be >= 0", file=sys.stderr)
        return 2
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.func(args, out)
    except (UsageError, ParseError, chains.ChainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
