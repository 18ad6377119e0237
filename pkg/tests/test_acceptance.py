"""Exit criteria.  Every check is exact; each prints one PASS/FAIL line."""

import io
import json
import random
import time

import pytest

from conftest import record
from thompsonf import cli
from thompsonf.cayley import ball, gamma
from thompsonf.chains import (
    EdgeFlow,
    UFChain,
    build_flow_lists,
    cayley_ball_to_labeled_digraph,
    chain_divergences,
    reroute,
)
from thompsonf.complexity import (
    GammaParams,
    complexity,
    in_gamma,
    phi,
    s_power,
    s_trees,
)
from thompsonf.forest import Caret, OriginTag, PointedForest, carets, graft
from thompsonf.ponzi import VerificationReport, divergence, flow_value
from thompsonf.sampling import (
    all_trees,
    random_chain,
    random_connected_graph,
    random_forest,
    random_pforest,
    random_tree,
    trees_with_leaves,
)
from thompsonf.words import build_tree_word, check_relation, decompose, evaluate


def verdict(n, ok, detail):
    record(f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {detail}")
    assert ok, detail


@pytest.mark.parametrize("k, l", [(0, 1), (1, 1), (2, 2), (0, 3)])
def test_c1_ponzi_flow_radius_10(k, l):
    params = GammaParams(k, l)
    t0 = time.perf_counter()
    buf = io.StringIO()
    code = cli.run(["verify-ponzi", "--k", str(k), "--l", str(l), "--radius", "10", "--json"], out=buf)
    elapsed = time.perf_counter() - t0
    rep = VerificationReport.from_json(json.loads(buf.getvalue()))
    bound = k + l
    ok = (
        code == 0
        and rep.ok
        and rep.vertex_count == len(ball(gamma(k, l), 10))
        and rep.min_divergence >= 1
        and rep.max_abs_flow <= bound
        and rep.max_c <= bound
        and rep.max_right_nontrivial <= bound
        and elapsed < 300
    )
    for v, reason in rep.violations[:20]:
        record(f"    counterexample {v}: {reason}")
    verdict(
        1,
        ok,
        f"Gamma_{k}^{l} r=10: {rep.vertex_count} vertices, min div {rep.min_divergence}, "
        f"max|G| {rep.max_abs_flow}, max c {rep.max_c}, max right {rep.max_right_nontrivial} "
        f"(bound {bound}), {len(rep.violations)} violations, {elapsed:.2f}s",
    )


def _right_depths(t, depth=0):
    if isinstance(t, Caret):
        yield t, depth
        yield from _right_depths(t.left, depth)
        yield from _right_depths(t.right, depth + 1)


def test_c2_complexity_oracle_12_leaves():
    t0 = time.perf_counter()
    count = 0
    bad = []
    for t in all_trees(12):
        count += 1
        # min m with s^m trivial, by iterating s
        layer, m = [t], 0
        survivors = {0: {id(c) for c, _ in _right_depths(t)}}
        while any(x.carets for x in layer):
            layer = s_trees(layer)
            m += 1
            survivors[m] = {id(c) for x in layer for c, _ in _right_depths(x)}
        if complexity(t) != m:
            bad.append((t.code, "complexity"))
        depths = list(_right_depths(t))
        for j, ids in survivors.items():
            if ids != {id(c) for c, d in depths if d >= j}:
                bad.append((t.code, f"survival at m={j}"))
    elapsed = time.perf_counter() - t0
    ok = not bad and len(trees_with_leaves(12)) == 58786 and elapsed < 60
    verdict(
        2,
        ok,
        f"{count} trees with <= 12 leaves ({len(trees_with_leaves(12))} with exactly 12), "
        f"{len(bad)} mismatches, {elapsed:.1f}s",
    )


def test_c3_relation_suite():
    rng = random.Random(2008)
    points = [random_pforest(rng, max_carets=12) for _ in range(250)]
    assert all(carets(p) <= 12 for p in points)
    failures = [
        (i, j, p.key)
        for i in range(2, 9)
        for j in range(0, i - 1)
        for p in points
        if not check_relation(i, j, p)
    ]
    counter = evaluate((1, 0)) != evaluate((0, 0))
    verdict(
        3,
        not failures and counter,
        f"{len(failures)} failures over 0<=j, j+2<=i<=8 on {len(points)} forests; "
        f"x1x0 != x0x0 {'confirmed' if counter else 'NOT confirmed'}",
    )


def test_c4_build_tree_word():
    bad = []
    count = 0
    for t in all_trees(10):
        count += 1
        u = build_tree_word(t)
        if evaluate(u) != PointedForest([t], 0):
            bad.append((t.code, "evaluate"))
        if len(u) != t.carets:
            bad.append((t.code, "length"))
        if max(u, default=0) != complexity(t):
            bad.append((t.code, "max index"))
    verdict(4, not bad, f"{count} trees with <= 10 leaves, {len(bad)} failures")


def _random_member(rng, params):
    w = [rng.randint(0, 8) for _ in range(rng.randint(0, params.k))]
    v = [rng.randint(0, params.l) for _ in range(rng.randint(0, 16))]
    return evaluate(w + v)


def _members(rng, params, n):
    out = []
    while len(out) < n // 2:
        p = random_pforest(rng, max_carets=10)
        if in_gamma(p, params):
            out.append(p)
    while len(out) < n:
        out.append(_random_member(rng, params))
    return out


def test_c5_decomposition():
    rng = random.Random(5)
    cases = [(GammaParams(1, 1), ball(gamma(1, 1), 8).vertices)]
    cases.append((GammaParams(2, 2), _members(rng, GammaParams(2, 2), 500)))
    cases.append((GammaParams(1, 3), _members(rng, GammaParams(1, 3), 500)))
    bad = []
    total = 0
    for params, points in cases:
        for p in points:
            total += 1
            w, v = decompose(p, params)
            if evaluate(w + v) != p:
                bad.append((p.key, "product"))
            if not len(w) == carets(phi(p, params.l)) <= params.k:
                bad.append((p.key, "|w|"))
            if max(v, default=0) > params.l:
                bad.append((p.key, "v index"))
    verdict(5, not bad, f"{total} members decomposed (radius-8 Gamma_1^1 ball + 2x500), {len(bad)} failures")


def test_c6_skills():
    rng = random.Random(6)
    bad = 0
    done = 0
    while done < 1000:
        j = rng.randint(0, 5)
        t = random_tree(rng, rng.randint(j, j + 6), OriginTag.FROM_T)
        if complexity(t) != j:
            continue
        r = [random_tree(rng, rng.randint(0, 4), OriginTag.FROM_R) for _ in range(t.leaves)]
        rt = graft(r, t)
        left = [c for x in s_power(rt, j) for c, _ in _right_depths(x)]
        if any(c.tag is OriginTag.FROM_T for c in left):
            bad += 1
        # tight: some T caret still survives one step earlier
        if j and not any(c.tag is OriginTag.FROM_T for x in s_power(rt, j - 1) for c, _ in _right_depths(x)):
            bad += 1
        done += 1
    verdict(6, bad == 0, f"{done} (R, T) pairs with complexity(T) <= 5, {bad} failures")


def test_c7_scheme_to_flow():
    rng = random.Random(7)
    bad = 0
    for _ in range(500):
        g = random_connected_graph(rng, rng.randint(1, 40), max_degree=6)
        R, K = rng.randint(1, 3), rng.randint(2, 5)
        coeffs = random_chain(rng, g, R, K)
        c = UFChain(coeffs, K, R)
        c.validate(g)
        res = reroute(g, c)
        f = res.flow
        inflow = [sum(f[(b, x)] for b in g.adj[x]) for x in range(g.n)]
        ok = (
            g.degree <= 6
            and f.is_antisymmetric()
            and all(g.is_edge(a, b) for a, b in f.values)
            and inflow == chain_divergences(coeffs, g.n)
            and f.max_abs() <= res.bound
        )
        bad += not ok
    verdict(7, bad == 0, f"500 random graphs (n <= 40, degree <= 6), {bad} failures")


def test_c8_flow_lists():
    params = GammaParams(1, 1)
    b = ball(gamma(1, 1), 8)
    d = cayley_ball_to_labeled_digraph(b)
    f = EdgeFlow()
    for u, _, v in b.edges():
        f.set(u, v, flow_value(u, v, params))
    n, K = 2, params.flow_bound
    bad = 0
    interior = 0
    for v in b.vertices:
        if not b.is_interior(v):
            continue
        interior += 1
        lv, lv2 = build_flow_lists(d, f, K, v)
        ok = (
            len(lv) == 2 * n * K
            and len(lv2) == 2 * n * K + 1
            and lv2.h_count <= lv.h_count
            and lv2.non_h > lv.non_h
            and lv2.non_h - lv.non_h == divergence(v, params)
        )
        bad += not ok
    verdict(8, bad == 0 and interior > 0, f"{interior} interior vertices of the Gamma_1^1 radius-8 ball, {bad} failures")


def test_c9_pointer_monotonicity():
    rng = random.Random(9)
    counter = []
    for _ in range(10_000):
        trees = random_forest(rng, rng.randint(0, 10), max_trees=6)
        last = max((i for i, t in enumerate(trees) if t.carets), default=-1)
        for k, l in [(0, 1), (1, 1), (2, 2)]:
            params = GammaParams(k, l)
            seq = [in_gamma(PointedForest(trees, p), params) for p in range(last + 2)]
            if any(a and not b for a, b in zip(seq, seq[1:])):
                counter.append((" ".join(t.code for t in trees), k, l, seq))
    for c in counter[:10]:
        record(f"    counterexample {c}")
    verdict(9, not counter, f"10000 random forests x 3 (k,l) pairs, {len(counter)} non-monotone cases")


def test_c10_folner_is_exploratory():
    buf = io.StringIO()
    code = cli.run(["folner", "--full", "--radius", "6"], out=buf)
    lines = buf.getvalue().splitlines()
    rows = [ln.split("\t") for ln in lines[2:-1]]
    exact = all("/" in r[2] and r[2].split("/")[1].isdigit() for r in rows)
    ok = code == 0 and len(rows) == 7 and exact and lines[-1] == cli.AMENABILITY_NOTE
    verdict(
        10,
        ok,
        "full-monoid ratios reported exactly per radius ("
        + ", ".join(r[2] for r in rows)
        + "); no limit asserted",
    )
