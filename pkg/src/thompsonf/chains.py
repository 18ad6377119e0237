"""Uniformly finite 1-chains, Ponzi schemes and flows on explicit finite graphs.

File formats (whitespace separated, 0-based vertex indices):

    graph:            first line ``n m``, then m lines ``u v``
    chain:            lines ``u v coeff``
    labeled digraph:  lines ``u label v``
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping, Optional, Sequence

H = "h"


class ChainError(ValueError):
    pass


class ExplicitGraph:
    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        self.n = n
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ChainError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise ChainError(f"self-loop at {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.adj = [sorted(a) for a in adj]
        self._dist: dict[int, list[int]] = {}

    @property
    def degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def is_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def distances_from(self, src: int) -> list[int]:
        """BFS distances, -1 for unreachable vertices."""
        d = self._dist.get(src)
        if d is None:
            d = [-1] * self.n
            d[src] = 0
            todo = deque([src])
            while todo:
                u = todo.popleft()
                for w in self.adj[u]:
                    if d[w] < 0:
                        d[w] = d[u] + 1
                        todo.append(w)
            self._dist[src] = d
        return d

    def distance(self, u: int, v: int) -> int:
        return self.distances_from(v)[u]

    def shortest_path(self, u: int, v: int) -> list[int]:
        """Lexicographically least shortest path from u to v."""
        dv = self.distances_from(v)
        if dv[u] < 0:
            raise ChainError(f"vertices {u} and {v} are not connected")
        path = [u]
        while path[-1] != v:
            cur = path[-1]
            path.append(next(w for w in self.adj[cur] if dv[w] == dv[cur] - 1))
        return path


@dataclass
class UFChain:
    coefficients: dict[tuple[int, int], int]
    K: int
    R: int

    def __post_init__(self):
        self.coefficients = {e: a for e, a in self.coefficients.items() if a}

    @classmethod
    def fit(cls, g: ExplicitGraph, coefficients: Mapping[tuple[int, int], int]) -> "UFChain":
        """Chain with the tightest K and R for ``coefficients`` on ``g``."""
        coeffs = {e: a for e, a in coefficients.items() if a}
        K = max((abs(a) for a in coeffs.values()), default=0) + 1
        R = 1
        for u, v in coeffs:
            d = g.distance(u, v)
            if d < 0:
                raise ChainError(f"coefficient on disconnected pair ({u}, {v})")
            R = max(R, d)
        return cls(coeffs, K, R)

    def validate(self, g: ExplicitGraph) -> None:
        for (u, v), a in self.coefficients.items():
            if abs(a) >= self.K:
                raise ChainError(f"|a[{u},{v}]| = {abs(a)} not below K = {self.K}")
            d = g.distance(u, v)
            if d < 0 or d > self.R:
                raise ChainError(f"pair ({u}, {v}) at distance {d} exceeds R = {self.R}")


def chain_divergence(c: UFChain | Mapping[tuple[int, int], int], x: int) -> int:
    coeffs = c.coefficients if isinstance(c, UFChain) else c
    return sum(a for (u, v), a in coeffs.items() if v == x) - sum(
        a for (u, v), a in coeffs.items() if u == x
    )


def chain_divergences(c: UFChain | Mapping[tuple[int, int], int], n: int) -> list[int]:
    coeffs = c.coefficients if isinstance(c, UFChain) else c
    div = [0] * n
    for (u, v), a in coeffs.items():
        div[v] += a
        div[u] -= a
    return div


def is_ponzi_scheme(c: UFChain, n: int) -> bool:
    """Positive net inflow at every vertex; never true on a finite nonempty graph."""
    return n > 0 and all(d > 0 for d in chain_divergences(c, n))


@dataclass
class EdgeFlow:
    """Antisymmetric integer flow; ``values[(a, b)] == -values[(b, a)]``."""

    values: dict[tuple[Hashable, Hashable], int] = field(default_factory=dict)

    def __getitem__(self, pair: tuple[Hashable, Hashable]) -> int:
        return self.values.get(pair, 0)

    def set(self, a: Hashable, b: Hashable, value: int) -> None:
        if a == b:
            if value:
                raise ChainError(f"nonzero flow on loop at {a}")
            return
        if value:
            self.values[(a, b)] = value
            self.values[(b, a)] = -value
        else:
            self.values.pop((a, b), None)
            self.values.pop((b, a), None)

    def add(self, a: Hashable, b: Hashable, value: int) -> None:
        self.set(a, b, self[(a, b)] + value)

    def inflow(self, x: Hashable) -> int:
        return sum(val for (a, b), val in self.values.items() if b == x)

    def inflows(self) -> dict[Hashable, int]:
        out: dict[Hashable, int] = defaultdict(int)
        for (a, b), val in self.values.items():
            out[b] += val
        return out

    def is_antisymmetric(self) -> bool:
        return all(self.values.get((b, a), 0) == -val for (a, b), val in self.values.items())

    def max_abs(self) -> int:
        return max((abs(v) for v in self.values.values()), default=0)

    def lines(self) -> list[str]:
        return [f"{a} {b} {v}" for (a, b), v in sorted(self.values.items()) if v > 0]


@dataclass
class Rerouted:
    flow: EdgeFlow
    edge_coefficients: dict[tuple[int, int], int]
    # number of original coefficients landing on the busiest edge
    max_contributions: int
    K: int

    @property
    def bound(self) -> int:
        """Every |G| is at most this: each contribution is below K in size."""
        return (self.K - 1) * self.max_contributions


def reroute(g: ExplicitGraph, c: UFChain) -> Rerouted:
    """Push every long-range coefficient along a shortest path."""
    edge_coeffs: dict[tuple[int, int], int] = defaultdict(int)
    load: dict[frozenset, int] = defaultdict(int)
    for (x, y), a in sorted(c.coefficients.items()):
        if x == y:
            # a loop coefficient enters and leaves x: no effect on divergence
            continue
        d = g.distance(x, y)
        if d < 0:
            raise ChainError(f"coefficient on disconnected pair ({x}, {y})")
        path = [x, y] if d == 1 else g.shortest_path(x, y)
        for u, v in zip(path, path[1:]):
            edge_coeffs[(u, v)] += a
            load[frozenset((u, v))] += 1
    flow = EdgeFlow()
    for (u, v), a in edge_coeffs.items():
        flow.add(u, v, a)
    coeffs = {e: a for e, a in edge_coeffs.items() if a}
    return Rerouted(flow, coeffs, max(load.values(), default=0), c.K)


def chain_to_flow(g: ExplicitGraph, c: UFChain) -> EdgeFlow:
    return reroute(g, c).flow


# -- labeled digraphs and flow lists -----------------------------------------


class LabeledDigraph:
    """Directed graph with at most one in- and one out-edge per label at each vertex.

    ``complete`` lists vertices whose whole neighbourhood is present; None
    means every vertex is complete.
    """

    def __init__(
        self,
        vertices: Iterable[Hashable],
        labels: Sequence[str],
        edges: Iterable[tuple[Hashable, str, Hashable]] = (),
        complete: Optional[Iterable[Hashable]] = None,
    ):
        self.vertices = list(vertices)
        self.labels = list(labels)
        if H in self.labels:
            raise ChainError(f"label {H!r} is reserved")
        self.out: dict[tuple[Hashable, str], Hashable] = {}
        self.inc: dict[tuple[Hashable, str], Hashable] = {}
        self.complete = None if complete is None else set(complete)
        vs = set(self.vertices)
        for u, lab, v in edges:
            if lab not in self.labels:
                raise ChainError(f"unknown label {lab!r}")
            if u not in vs or v not in vs:
                raise ChainError(f"edge {u} -{lab}-> {v} leaves the vertex set")
            if (u, lab) in self.out or (v, lab) in self.inc:
                raise ChainError(f"two {lab}-edges at one end of {u} -> {v}")
            self.out[(u, lab)] = v
            self.inc[(v, lab)] = u

    def edges(self) -> list[tuple[Hashable, str, Hashable]]:
        return [(u, lab, v) for (u, lab), v in self.out.items()]

    def check_labels(self) -> bool:
        outs = defaultdict(int)
        ins = defaultdict(int)
        for u, lab, v in self.edges():
            outs[(u, lab)] += 1
            ins[(v, lab)] += 1
        return all(n == 1 for n in outs.values()) and all(n == 1 for n in ins.values())

    def is_complete(self, v: Hashable) -> bool:
        return self.complete is None or v in self.complete


@dataclass(frozen=True)
class FlowList:
    symbols: tuple[str, ...]

    def __len__(self):
        return len(self.symbols)

    @property
    def h_count(self) -> int:
        return self.symbols.count(H)

    @property
    def non_h(self) -> int:
        return len(self.symbols) - self.h_count


def inverse_symbol(label: str) -> str:
    return label + "^-1"


def build_flow_lists(d: LabeledDigraph, G: EdgeFlow, K: int, v: Hashable) -> tuple[FlowList, FlowList]:
    """The outgoing list L_v (length 2nK) and incoming list L'_v (length 2nK + 1)."""
    if not d.is_complete(v):
        raise ChainError(f"neighbourhood of {v} is not fully present")
    n = len(d.labels)
    out: list[str] = []
    inc: list[str] = []
    for lab in d.labels:
        w = d.out.get((v, lab))
        if w is not None:
            out.extend([lab] * max(G[(v, w)], 0))
    for lab in d.labels:
        w = d.inc.get((v, lab))
        if w is not None:
            out.extend([inverse_symbol(lab)] * max(G[(v, w)], 0))
    for lab in d.labels:
        w = d.inc.get((v, lab))
        if w is not None:
            inc.extend([lab] * max(G[(w, v)], 0))
    for lab in d.labels:
        w = d.out.get((v, lab))
        if w is not None:
            inc.extend([inverse_symbol(lab)] * max(G[(w, v)], 0))
    if len(out) > 2 * n * K or len(inc) > 2 * n * K:
        raise ChainError(f"flow at {v} exceeds the bound K = {K}")
    out.extend([H] * (2 * n * K - len(out)))
    inc.extend([H] * (2 * n * K + 1 - len(inc)))
    return FlowList(tuple(out)), FlowList(tuple(inc))


# -- file formats ------------------------------------------------------------


def _data_lines(text: str) -> list[list[str]]:
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(line.split())
    return out


def parse_graph(text: str) -> ExplicitGraph:
    rows = _data_lines(text)
    if not rows or len(rows[0]) != 2:
        raise ChainError("graph file must start with 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(u), int(v)) for u, v in rows[1:]]
    except ValueError as exc:
        raise ChainError(f"bad graph file: {exc}") from None
    if len(edges) != m:
        raise ChainError(f"graph header promises {m} edges, found {len(edges)}")
    return ExplicitGraph(n, edges)


def format_graph(g: ExplicitGraph) -> str:
    edges = g.edges()
    return "\n".join([f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"


def parse_chain(text: str) -> dict[tuple[int, int], int]:
    coeffs: dict[tuple[int, int], int] = defaultdict(int)
    for row in _data_lines(text):
        try:
            u, v, a = (int(x) for x in row)
        except ValueError:
            raise ChainError(f"bad chain line {' '.join(row)!r}") from None
        coeffs[(u, v)] += a
    return dict(coeffs)


def format_chain(coeffs: Mapping[tuple[int, int], int]) -> str:
    return "".join(f"{u} {v} {a}\n" for (u, v), a in sorted(coeffs.items()) if a)


def parse_labeled_digraph(text: str) -> LabeledDigraph:
    rows = _data_lines(text)
    edges = []
    for row in rows:
        if len(row) != 3:
            raise ChainError(f"bad labeled edge line {' '.join(row)!r}")
        edges.append((int(row[0]), row[1], int(row[2])))
    vertices = sorted({u for u, _, _ in edges} | {v for _, _, v in edges})
    labels = sorted({lab for _, lab, _ in edges})
    return LabeledDigraph(vertices, labels, edges)


def format_labeled_digraph(d: LabeledDigraph) -> str:
    return "".join(f"{u} {lab} {v}\n" for u, lab, v in d.edges())


def cayley_ball_to_labeled_digraph(b) -> LabeledDigraph:
    """Vertices of a Cayley ball with its x0/x1 edges; interior vertices marked complete."""
    return LabeledDigraph(
        b.vertices,
        ["x0", "x1"],
        ((u, f"x{g}", v) for u, g, v in b.edges()),
        complete=[v for v in b.vertices if b.is_interior(v)],
    )
