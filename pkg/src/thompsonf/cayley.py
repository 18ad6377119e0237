"""Right Cayley graph of the positive monoid on {x0, x1} and its Gamma_k^l subgraphs."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Union

from . import kernel
from .complexity import GammaParams
from .forest import (
    PointedForest,
    apply_generator,
    apply_generator_inverse,
    identity,
)

OUT = "out"
IN = "in"
GENERATORS = (0, 1)


@dataclass(frozen=True)
class FullPositiveMonoid:
    def contains(self, p: PointedForest) -> bool:
        return True

    def to_json(self) -> dict:
        return {"membership": "full"}

    def __str__(self):
        return "full positive monoid"


@dataclass(frozen=True)
class Gamma:
    params: GammaParams

    def contains(self, p: PointedForest) -> bool:
        return kernel.phi_carets(p.codes, p.pointer, self.params.l) <= self.params.k

    def to_json(self) -> dict:
        return {"membership": "gamma", "k": self.params.k, "l": self.params.l}

    def __str__(self):
        return str(self.params)


GraphSpec = Union[FullPositiveMonoid, Gamma]


def gamma(k: int, l: int) -> Gamma:
    return Gamma(GammaParams(k, l))


def neighbors(p: PointedForest, spec: GraphSpec) -> list[tuple[int, str, PointedForest]]:
    """Incident edges of ``p`` as (generator, direction, other endpoint)."""
    out = []
    # Gamma_k^l is closed under x0 and x1 (l >= 1), so outgoing edges need no test
    for g in GENERATORS:
        out.append((g, OUT, apply_generator(p, g)))
    for g in GENERATORS:
        q = apply_generator_inverse(p, g)
        if q is not None and spec.contains(q):
            out.append((g, IN, q))
    return out


@dataclass
class Ball:
    spec: GraphSpec
    radius: int
    depth: dict[PointedForest, int] = field(repr=False)

    @property
    def vertices(self) -> list[PointedForest]:
        return sorted(self.depth, key=lambda v: (self.depth[v], v.key))

    def __len__(self):
        return len(self.depth)

    def __contains__(self, p: PointedForest):
        return p in self.depth

    def is_interior(self, p: PointedForest) -> bool:
        """All neighbours of an interior vertex lie in the ball."""
        return self.depth[p] < self.radius

    def growth(self) -> list[int]:
        counts = [0] * (self.radius + 1)
        for d in self.depth.values():
            counts[d] += 1
        return counts

    def edges(self) -> Iterator[tuple[PointedForest, int, PointedForest]]:
        for v in self.vertices:
            for g in GENERATORS:
                w = apply_generator(v, g)
                if w in self.depth:
                    yield v, g, w

    def summary(self) -> dict:
        return {
            "spec": self.spec.to_json(),
            "radius": self.radius,
            "vertex_count": len(self.depth),
            "edge_count": sum(1 for _ in self.edges()),
            "growth": self.growth(),
        }


def _expand(args) -> list[PointedForest]:
    frontier, spec = args
    return [q for p in frontier for _, _, q in neighbors(p, spec)]


def ball(spec: GraphSpec, radius: int, jobs: int = 1) -> Ball:
    if radius < 0:
        raise ValueError("radius must be >= 0")
    start = identity()
    depth = {start: 0}
    frontier = [start]
    pool = None
    if jobs > 1:
        import multiprocessing

        pool = multiprocessing.Pool(jobs)
    try:
        for d in range(1, radius + 1):
            if pool is not None and len(frontier) > 256:
                size = -(-len(frontier) // (jobs * 4))
                chunks = [(frontier[i : i + size], spec) for i in range(0, len(frontier), size)]
                found = [q for part in pool.map(_expand, chunks) for q in part]
            else:
                found = _expand((frontier, spec))
            nxt = []
            for q in found:
                if q not in depth:
                    depth[q] = d
                    nxt.append(q)
            frontier = nxt
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    return Ball(spec, radius, depth)


def folner_ratio(vertices: Iterable[PointedForest], spec: GraphSpec) -> Fraction:
    s = set(vertices)
    if not s:
        raise ValueError("Folner ratio of an empty set")
    boundary = 0
    for p in s:
        for _, _, q in neighbors(p, spec):
            if q not in s:
                boundary += 1
    return Fraction(boundary, len(s))


def folner_by_depth(b: Ball) -> list[Fraction]:
    """Boundary ratio of the sub-ball of each radius 0..b.radius."""
    out = []
    layers: list[list[PointedForest]] = [[] for _ in range(b.radius + 1)]
    for v, d in b.depth.items():
        layers[d].append(v)
    acc: list[PointedForest] = []
    for layer in layers:
        acc.extend(layer)
        out.append(folner_ratio(acc, b.spec))
    return out


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(b: Ball, name: Optional[str] = None) -> str:
    lines = [f"digraph {_dot_quote(name or 'cayley')} {{"]
    index = {}
    for i, v in enumerate(b.vertices):
        index[v] = i
        lines.append(f"  n{i} [label={_dot_quote(v.key)}];")
    for v, g, w in b.edges():
        lines.append(f"  n{index[v]} -> n{index[w]} [label=\"x{g}\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def summary_json(b: Ball) -> str:
    return json.dumps(b.summary(), sort_keys=True)
