"""The explicit Ponzi flow on Gamma_k^l and exhaustive ball verification.

For P in Gamma_k^l let c_P count the nontrivial trees left of the pointer
onto which the pointer could move while staying in Gamma_k^l.  The flow is

    G(P, P x0^-1) = c_P
    G(P, P x1^-1) = 1     (pointed tree nontrivial, P x1^-1 in Gamma)

extended antisymmetrically and zero elsewhere.  Every vertex has net
inflow at least 1 and |G| never exceeds k + l.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from . import kernel
from .cayley import gamma as gamma_spec
from .cayley import ball
from .complexity import GammaParams, NotInGamma
from .forest import PointedForest, apply_generator_inverse


class _MinPositions(dict):
    """Per-forest cache of the leftmost admissible pointer."""

    def __init__(self, params: GammaParams):
        super().__init__()
        self.params = params

    def __missing__(self, codes: tuple[str, ...]) -> int:
        pos = kernel.min_position(codes, self.params.k, self.params.l)
        self[codes] = pos
        return pos


_caches: dict[GammaParams, _MinPositions] = {}


def _cache(params: GammaParams) -> _MinPositions:
    c = _caches.get(params)
    if c is None or len(c) > 1_000_000:
        c = _caches[params] = _MinPositions(params)
    return c


def _member(p: PointedForest, params: GammaParams) -> bool:
    return kernel.phi_carets(p.codes, p.pointer, params.l) <= params.k


def _require(p: PointedForest, params: GammaParams) -> None:
    if not _member(p, params):
        raise NotInGamma(f"{p.key} is not in {params}")


def _c(codes: tuple[str, ...], pointer: int, mp: int) -> int:
    return sum(1 for q in range(mp, min(pointer, len(codes))) if len(codes[q]) > 1)


def c_value(p: PointedForest, params: GammaParams) -> int:
    _require(p, params)
    codes = p.codes
    return _c(codes, p.pointer, _cache(params)[codes])


def c_value_bruteforce(p: PointedForest, params: GammaParams) -> int:
    """c_P straight from its definition: one membership test per position."""
    _require(p, params)
    return sum(
        1
        for q in range(min(p.pointer, len(p.trees)))
        if p.trees[q].carets and _member(PointedForest(p.trees, q), params)
    )


def flow_value(p: PointedForest, q: PointedForest, params: GammaParams) -> int:
    _require(p, params)
    _require(q, params)
    if apply_generator_inverse(p, 0) == q:
        return c_value(p, params)
    if apply_generator_inverse(q, 0) == p:
        return -c_value(q, params)
    if apply_generator_inverse(p, 1) == q:
        return 1
    if apply_generator_inverse(q, 1) == p:
        return -1
    return 0


def divergence(p: PointedForest, params: GammaParams) -> int:
    """Net inflow sum over neighbours Q of G(Q, P)."""
    _require(p, params)
    return _local(p, params, _cache(params))["divergence"]


def _local(p: PointedForest, params: GammaParams, mps: _MinPositions) -> dict:
    codes = p.codes
    ptr = p.pointer
    mp = mps[codes]
    c_here = _c(codes, ptr, mp)
    c_next = _c(codes, ptr + 1, mp)
    x0_back = ptr >= 1 and ptr - 1 >= mp
    nontrivial = ptr < len(codes) and len(codes[ptr]) > 1
    x1_back = False
    if nontrivial:
        q = apply_generator_inverse(p, 1)
        x1_back = _member(q, params)
    x0_term = c_next - (c_here if x0_back else 0)
    x1_term = 1 - (1 if x1_back else 0)
    return {
        "mp": mp,
        "c": c_here,
        "c_next": c_next,
        "x0_back": x0_back,
        "nontrivial": nontrivial,
        "x0_term": x0_term,
        "x1_term": x1_term,
        "divergence": x0_term + x1_term,
    }


@dataclass
class VerificationReport:
    params: GammaParams
    radius: int
    vertex_count: int = 0
    min_divergence: Optional[int] = None
    max_abs_flow: int = 0
    max_c: int = 0
    max_right_nontrivial: int = 0
    violations: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: "VerificationReport") -> None:
        self.vertex_count += other.vertex_count
        if other.min_divergence is not None:
            if self.min_divergence is None or other.min_divergence < self.min_divergence:
                self.min_divergence = other.min_divergence
        self.max_abs_flow = max(self.max_abs_flow, other.max_abs_flow)
        self.max_c = max(self.max_c, other.max_c)
        self.max_right_nontrivial = max(self.max_right_nontrivial, other.max_right_nontrivial)
        self.violations.extend(other.violations)

    def to_json(self) -> dict:
        return {
            "k": self.params.k,
            "l": self.params.l,
            "radius": self.radius,
            "vertex_count": self.vertex_count,
            "min_divergence": self.min_divergence,
            "max_abs_flow": self.max_abs_flow,
            "max_c": self.max_c,
            "max_right_nontrivial": self.max_right_nontrivial,
            "violations": [{"vertex": v, "reason": r} for v, r in self.violations],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data: dict) -> "VerificationReport":
        return cls(
            params=GammaParams(data["k"], data["l"]),
            radius=data["radius"],
            vertex_count=data["vertex_count"],
            min_divergence=data["min_divergence"],
            max_abs_flow=data["max_abs_flow"],
            max_c=data["max_c"],
            max_right_nontrivial=data["max_right_nontrivial"],
            violations=[(v["vertex"], v["reason"]) for v in data["violations"]],
        )


def check_vertices(
    vertices: list[PointedForest], params: GammaParams, radius: int = 0
) -> VerificationReport:
    rep = VerificationReport(params, radius)
    mps = _cache(params)
    bound = params.flow_bound
    for p in vertices:
        rep.vertex_count += 1
        if not _member(p, params):
            rep.violations.append((p.key, "vertex not in Gamma"))
            continue
        loc = _local(p, params, mps)
        div = loc["divergence"]
        if rep.min_divergence is None or div < rep.min_divergence:
            rep.min_divergence = div
        flows = [loc["c_next"], 1]
        if loc["x0_back"]:
            flows.append(loc["c"])
        flow = max(flows)
        rep.max_abs_flow = max(rep.max_abs_flow, flow)
        rep.max_c = max(rep.max_c, loc["c"])
        codes = p.codes
        right = sum(1 for code in codes[loc["mp"] :] if len(code) > 1)
        rep.max_right_nontrivial = max(rep.max_right_nontrivial, right)

        if div < 1:
            rep.violations.append((p.key, f"divergence {div} < 1"))
        if flow > bound:
            rep.violations.append((p.key, f"flow {flow} exceeds k+l={bound}"))
        if right > bound:
            rep.violations.append((p.key, f"{right} nontrivial trees from the leftmost pointer exceed k+l={bound}"))
        if loc["c"] > 0 and not loc["x0_back"]:
            rep.violations.append((p.key, "c_P > 0 but P x0^-1 not in Gamma"))
        if loc["x0_term"] != (1 if loc["nontrivial"] else 0):
            rep.violations.append((p.key, f"x0 inflow {loc['x0_term']} disagrees with pointed tree"))
        if not loc["nontrivial"] and loc["x1_term"] < 1:
            rep.violations.append((p.key, "trivial pointed tree without x1 inflow"))
    return rep


def _check_chunk(args) -> VerificationReport:
    keys, params, radius = args
    from .forest import parse_pforest

    return check_vertices([parse_pforest(k) for k in keys], params, radius)


def verify_ball(params: GammaParams, radius: int, jobs: int = 1) -> VerificationReport:
    b = ball(gamma_spec(params.k, params.l), radius, jobs=jobs)
    vertices = b.vertices
    if jobs <= 1 or len(vertices) < 2048:
        rep = check_vertices(vertices, params, radius)
    else:
        import multiprocessing

        size = -(-len(vertices) // (jobs * 4))
        chunks = [
            ([v.key for v in vertices[i : i + size]], params, radius)
            for i in range(0, len(vertices), size)
        ]
        rep = VerificationReport(params, radius)
        with multiprocessing.Pool(jobs) as pool:
            for part in pool.map(_check_chunk, chunks):
                rep.merge(part)
    rep.radius = radius
    return rep
