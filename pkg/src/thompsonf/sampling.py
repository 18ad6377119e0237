"""Exhaustive enumeration and seeded random generation of trees and forests."""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterator, Optional

from .forest import LEAF, Caret, OriginTag, PointedForest, Tree


@lru_cache(maxsize=None)
def trees_with_leaves(n: int) -> tuple[Tree, ...]:
    """All binary trees with exactly ``n`` leaves (Catalan(n - 1) of them)."""
    if n < 1:
        return ()
    if n == 1:
        return (LEAF,)
    out = []
    for a in range(1, n):
        for left in trees_with_leaves(a):
            for right in trees_with_leaves(n - a):
                out.append(Caret(left, right))
    return tuple(out)


def all_trees(max_leaves: int) -> Iterator[Tree]:
    for n in range(1, max_leaves + 1):
        yield from trees_with_leaves(n)


def random_tree(rng: random.Random, carets: int, tag: Optional[OriginTag] = None) -> Tree:
    if carets == 0:
        return LEAF
    left = rng.randrange(carets)
    return Caret(random_tree(rng, left, tag), random_tree(rng, carets - 1 - left, tag), tag)


def random_forest(rng: random.Random, carets: int, max_trees: int = 6) -> list[Tree]:
    n = rng.randint(1, max_trees)
    sizes = [0] * n
    for _ in range(carets):
        sizes[rng.randrange(n)] += 1
    return [random_tree(rng, s) for s in sizes]


def random_pforest(rng: random.Random, max_carets: int = 12, max_trees: int = 6) -> PointedForest:
    trees = random_forest(rng, rng.randint(0, max_carets), max_trees)
    return PointedForest(trees, rng.randint(0, len(trees) + 1))


def random_connected_graph(rng: random.Random, n: int, max_degree: int = 6, extra: Optional[int] = None):
    """Random spanning tree plus extra edges, all degrees capped at ``max_degree``."""
    from .chains import ExplicitGraph

    deg = [0] * n
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for idx in range(1, n):
        v = order[idx]
        # a tree always has a vertex below the cap when max_degree >= 2
        u = rng.choice([u for u in order[:idx] if deg[u] < max_degree])
        edges.add((min(u, v), max(u, v)))
        deg[u] += 1
        deg[v] += 1
    for _ in range(rng.randint(0, n) if extra is None else extra):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v and (min(u, v), max(u, v)) not in edges and deg[u] < max_degree and deg[v] < max_degree:
            edges.add((min(u, v), max(u, v)))
            deg[u] += 1
            deg[v] += 1
    return ExplicitGraph(n, sorted(edges))


def random_chain(rng: random.Random, g, R: int = 3, K: int = 5, terms: Optional[int] = None) -> dict:
    """Random coefficients with |a| < K on pairs at distance <= R."""
    coeffs: dict[tuple[int, int], int] = {}
    for _ in range(rng.randint(0, 2 * g.n) if terms is None else terms):
        x = rng.randrange(g.n)
        dist = g.distances_from(x)
        near = [y for y in range(g.n) if 0 <= dist[y] <= R]
        y = rng.choice(near)
        a = rng.randint(-(K - 1), K - 1)
        if a:
            coeffs[(x, y)] = a
    return coeffs
