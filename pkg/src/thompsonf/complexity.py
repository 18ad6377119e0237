"""The stripping map s, tree complexity, phi_j, and membership in Gamma_k^l.

``s`` removes the left spine of a tree: s(Caret(L, R)) = s(L) + [R].
phi_j applies s j times to the pointed tree and everything left of it, and
j - q times to the tree q places right of the pointer.  A pointed forest
lies in Gamma_k^l exactly when phi_l leaves at most k carets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import kernel
from .forest import LEAF, Caret, Forest, PointedForest, Tree


class NotInGamma(ValueError):
    pass


@dataclass(frozen=True)
class GammaParams:
    k: int
    l: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError(f"k must be >= 0, got {self.k}")
        if self.l < 1:
            raise ValueError(f"l must be >= 1, got {self.l}")

    @property
    def flow_bound(self) -> int:
        return self.k + self.l

    def __str__(self):
        return f"Gamma(k={self.k}, l={self.l})"


def s_tree(tree: Tree) -> list[Tree]:
    spine_rights = []
    node = tree
    while isinstance(node, Caret):
        spine_rights.append(node.right)
        node = node.left
    return [LEAF] + spine_rights[::-1]


def s_trees(trees: Iterable[Tree]) -> list[Tree]:
    out: list[Tree] = []
    for t in trees:
        out.extend(s_tree(t))
    return out


def s_forest(f: Forest) -> Forest:
    return Forest(s_trees(f.trees))


def s_power(tree: Tree, m: int) -> list[Tree]:
    trees = [tree]
    for _ in range(m):
        if all(t.carets == 0 for t in trees):
            break
        trees = s_trees(trees)
    return trees


def complexity(tree: Tree) -> int:
    # iterative postorder: complexity(Caret(L, R)) = max(c(L), c(R) + 1)
    memo: dict[int, int] = {}
    stack = [(tree, False)]
    while stack:
        node, done = stack.pop()
        if not isinstance(node, Caret):
            memo[id(node)] = 0
        elif done:
            memo[id(node)] = max(memo[id(node.left)], memo[id(node.right)] + 1)
        else:
            stack.append((node, True))
            stack.append((node.right, False))
            stack.append((node.left, False))
    return memo[id(tree)]


def strip_counts(p: PointedForest, l: int, upto: int | None = None) -> list[int]:
    """Number of s applications phi_l gives each stored tree of ``p``."""
    n = len(p.trees) if upto is None else upto
    return [l if i <= p.pointer else max(l - (i - p.pointer), 0) for i in range(n)]


def phi(p: PointedForest, j: int) -> Forest:
    if j < 1:
        raise ValueError(f"phi needs j >= 1, got {j}")
    out: list[Tree] = []
    for t, m in zip(p.trees, strip_counts(p, j)):
        out.extend(s_power(t, m))
    return Forest(out)


def phi_carets(p: PointedForest, l: int) -> int:
    return kernel.phi_carets(p.codes, p.pointer, l)


def in_gamma(p: PointedForest, params: GammaParams) -> bool:
    return kernel.phi_carets(p.codes, p.pointer, params.l) <= params.k


def min_pointed_position(f: Forest | PointedForest, params: GammaParams) -> int:
    codes = tuple(t.code for t in f.trees)
    pos = kernel.min_position(codes, params.k, params.l)
    if pos < 0:
        raise NotInGamma(
            f"no pointer position puts {' '.join(codes) or '(empty)'} in {params}"
        )
    return pos


def _contract(tree: Tree, m: int) -> Tree:
    if m <= 0:
        return LEAF
    if not isinstance(tree, Caret):
        return tree
    return Caret(_contract(tree.left, m), _contract(tree.right, m - 1), tree.tag)


def skeleton(p: PointedForest, l: int) -> PointedForest:
    """Replace every subtree that survives phi_l by a single leaf."""
    trees = [_contract(t, m) for t, m in zip(p.trees, strip_counts(p, l))]
    return PointedForest(trees, p.pointer)
