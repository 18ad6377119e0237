"""Positive words in x_0, x_1, x_2, ... and the P = w v decomposition.

Letters are plain ints (``3`` means x_3) and a word is a tuple of them,
read left to right in application order.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .complexity import GammaParams, NotInGamma, in_gamma, phi, s_tree, skeleton
from .forest import (
    Caret,
    Forest,
    ParseError,
    PointedForest,
    Tree,
    apply_generator,
    identity,
)

Word = tuple[int, ...]


def parse_word(text: str) -> Word:
    letters = []
    for tok in text.split():
        if len(tok) < 2 or tok[0] != "x" or not tok[1:].isdigit():
            raise ParseError(f"bad generator {tok!r} in word {text!r}")
        letters.append(int(tok[1:]))
    return tuple(letters)


def format_word(u: Sequence[int]) -> str:
    return " ".join(f"x{i}" for i in u)


def apply_word(p: PointedForest, u: Iterable[int]) -> PointedForest:
    for i in u:
        p = apply_generator(p, i)
    return p


def evaluate(u: Iterable[int]) -> PointedForest:
    return apply_word(identity(), u)


def check_relation(i: int, j: int, p: PointedForest) -> bool:
    """Test x_i x_j = x_j x_{i-1} at ``p``; only claimed for i > j + 1."""
    if not i > j + 1:
        raise ValueError(f"relation x{i} x{j} = x{j} x{i - 1} needs i > j + 1")
    return apply_word(p, (i, j)) == apply_word(p, (j, i - 1))


def shift_word(u: Sequence[int], q: int) -> Word:
    if any(i == 0 for i in u):
        raise ValueError("cannot shift a word containing x0")
    return tuple(i + q for i in u)


def build_tree_word(tree: Tree) -> Word:
    """Word in x_1..x_c (c the complexity) building ``tree`` under a fixed pointer."""
    if not isinstance(tree, Caret):
        return ()
    out: list[int] = []
    for sub in s_tree(tree)[1:]:
        out.extend(shift_word(build_tree_word(sub), 1))
        out.append(1)
    return tuple(out)


def _build_at_offset(tree: Tree, d: int, out: list[int]) -> None:
    if isinstance(tree, Caret):
        _build_at_offset(tree.right, d + tree.left.leaves, out)
        _build_at_offset(tree.left, d, out)
        out.append(d + 1)


def build_fixed_pointer_word(f: Forest | Sequence[Tree]) -> Word:
    """Word with no x0 that builds ``f`` with the pointer left at position 0."""
    trees = f.trees if isinstance(f, Forest) else tuple(f)
    offsets = []
    acc = 0
    for t in trees:
        offsets.append(acc)
        acc += t.leaves
    out: list[int] = []
    for t, d in reversed(list(zip(trees, offsets))):
        _build_at_offset(t, d, out)
    return tuple(out)


def decompose(p: PointedForest, params: GammaParams) -> tuple[Word, Word]:
    """Split ``p`` as w v with |w| <= k over all generators and v over x_0..x_l."""
    if not in_gamma(p, params):
        raise NotInGamma(f"{p.key} is not in {params}")
    w = build_fixed_pointer_word(phi(p, params.l))
    q = skeleton(p, params.l)
    v: list[int] = []
    for pos in range(q.pointer + 1):
        if pos:
            v.append(0)
        v.extend(build_tree_word(q.tree_at(pos)))
    for pos in range(q.pointer + 1, len(q.trees)):
        v.extend(shift_word(build_tree_word(q.trees[pos]), pos - q.pointer))
    return w, tuple(v)
