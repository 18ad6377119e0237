"""Pointed forests: elements of the positive monoid of Thompson's group F.

Trees are immutable.  Every tree carries its canonical text code
(``.`` for a leaf, ``(LR)`` for a caret), which doubles as its hash key.

Text grammar::

    tree    := "." | "(" tree tree ")"
    pforest := "p=" nat ":" (" " tree)*
    word    := "x" nat (" x" nat)*
"""

from __future__ import annotations

import enum
from typing import Iterable, Iterator, Optional, Sequence, Union


class ParseError(ValueError):
    pass


class OriginTag(enum.Enum):
    FROM_R = "R"
    FROM_T = "T"


class Tree:
    __slots__ = ("code", "leaves", "carets")

    code: str
    leaves: int
    carets: int

    @property
    def is_leaf(self) -> bool:
        return self.carets == 0

    def __eq__(self, other):
        if not isinstance(other, Tree):
            return NotImplemented
        return self.code == other.code

    def __hash__(self):
        return hash(self.code)

    def __repr__(self):
        return f"Tree({self.code!r})"

    def __str__(self):
        return self.code

    def __reduce__(self):
        # tags are dropped when pickling; only the shape travels to workers
        return (parse_tree, (self.code,))


class Leaf(Tree):
    __slots__ = ()

    def __init__(self):
        self.code = "."
        self.leaves = 1
        self.carets = 0


LEAF = Leaf()


class Caret(Tree):
    __slots__ = ("left", "right", "tag")

    def __init__(self, left: Tree, right: Tree, tag: Optional[OriginTag] = None):
        self.left = left
        self.right = right
        self.tag = tag
        self.code = "(" + left.code + right.code + ")"
        self.leaves = left.leaves + right.leaves
        self.carets = left.carets + right.carets + 1


def leaves(tree: Tree) -> int:
    return tree.leaves


def carets(x: Union[Tree, "Forest", "PointedForest", Iterable[Tree]]) -> int:
    if isinstance(x, Tree):
        return x.carets
    if isinstance(x, (Forest, PointedForest)):
        x = x.trees
    return sum(t.carets for t in x)


def _trim(trees: Iterable[Tree]) -> tuple[Tree, ...]:
    trees = tuple(trees)
    end = len(trees)
    while end and trees[end - 1].carets == 0:
        end -= 1
    return trees[:end]


class Forest:
    """A forest with an implicit infinite tail of trivial trees.

    Only the prefix up to the last nontrivial tree is stored.
    """

    __slots__ = ("trees",)

    def __init__(self, trees: Iterable[Tree] = ()):
        self.trees = _trim(trees)

    def __getitem__(self, i: int) -> Tree:
        if i < 0:
            raise IndexError(i)
        return self.trees[i] if i < len(self.trees) else LEAF

    def __len__(self):
        return len(self.trees)

    def __iter__(self) -> Iterator[Tree]:
        return iter(self.trees)

    def __eq__(self, other):
        if not isinstance(other, Forest):
            return NotImplemented
        return self.trees == other.trees

    def __hash__(self):
        return hash(self.trees)

    def __repr__(self):
        return f"Forest({format_forest(self)!r})"


class PointedForest:
    __slots__ = ("trees", "pointer", "_key", "_codes")

    def __init__(self, trees: Iterable[Tree] = (), pointer: int = 0):
        if pointer < 0:
            raise ValueError("pointer must be non-negative")
        self.trees = _trim(trees)
        self.pointer = pointer
        self._key = None
        self._codes = None

    @property
    def forest(self) -> Forest:
        return Forest(self.trees)

    @property
    def pointed_position(self) -> int:
        return self.pointer

    def tree_at(self, i: int) -> Tree:
        return self.trees[i] if i < len(self.trees) else LEAF

    @property
    def pointed_tree(self) -> Tree:
        return self.tree_at(self.pointer)

    @property
    def codes(self) -> tuple[str, ...]:
        if self._codes is None:
            self._codes = tuple(t.code for t in self.trees)
        return self._codes

    @property
    def key(self) -> str:
        """Canonical text form; also the deduplication key."""
        if self._key is None:
            self._key = format_pforest(self)
        return self._key

    def __eq__(self, other):
        if not isinstance(other, PointedForest):
            return NotImplemented
        return self.pointer == other.pointer and self.trees == other.trees

    def __hash__(self):
        return hash((self.pointer, self.trees))

    def __lt__(self, other: "PointedForest"):
        return self.key < other.key

    def __repr__(self):
        return f"PointedForest({self.key!r})"

    def __str__(self):
        return self.key

    def __reduce__(self):
        return (parse_pforest, (self.key,))


def identity() -> PointedForest:
    return PointedForest((), 0)


def canonicalize(p: PointedForest) -> PointedForest:
    # construction already trims; this rebuilds for callers holding raw data
    return PointedForest(p.trees, p.pointer)


def equals(p: PointedForest, q: PointedForest) -> bool:
    return canonicalize(p) == canonicalize(q)


def _padded(trees: Sequence[Tree], n: int) -> list[Tree]:
    out = list(trees)
    if len(out) < n:
        out.extend([LEAF] * (n - len(out)))
    return out


def apply_generator(p: PointedForest, i: int) -> PointedForest:
    """Right multiplication by x_i."""
    if i < 0:
        raise ValueError(f"generator index must be >= 0, got {i}")
    if i == 0:
        return PointedForest(p.trees, p.pointer + 1)
    a = p.pointer + i - 1
    trees = _padded(p.trees, a + 2)
    trees[a : a + 2] = [Caret(trees[a], trees[a + 1])]
    return PointedForest(trees, p.pointer)


def apply_generator_inverse(p: PointedForest, i: int) -> Optional[PointedForest]:
    """Right multiplication by x_i^-1, or None when the result is not positive."""
    if i < 0:
        raise ValueError(f"generator index must be >= 0, got {i}")
    if i == 0:
        if p.pointer == 0:
            return None
        return PointedForest(p.trees, p.pointer - 1)
    a = p.pointer + i - 1
    t = p.tree_at(a)
    if t.carets == 0:
        return None
    trees = list(p.trees)
    trees[a : a + 1] = [t.left, t.right]
    return PointedForest(trees, p.pointer)


def graft(r: Union[Forest, Sequence[Tree]], t: Tree) -> Tree:
    """Attach the first ``leaves(t)`` trees of ``r`` to the leaves of ``t``."""
    trees = r.trees if isinstance(r, Forest) else tuple(r)
    it = iter(trees)

    def go(node: Tree) -> Tree:
        if isinstance(node, Caret):
            left = go(node.left)
            return Caret(left, go(node.right), node.tag)
        return next(it, LEAF)

    return go(t)


def multiply(p: PointedForest, q: PointedForest) -> PointedForest:
    """Stack ``p`` under ``q``: the trees of p from its pointer on become leaves of q."""
    out = list(p.trees[: p.pointer])
    out.extend([LEAF] * (p.pointer - len(out)))
    src = p.trees[p.pointer :]
    pos = 0
    for qt in q.trees:
        n = qt.leaves
        out.append(graft(src[pos : pos + n], qt))
        pos += n
    out.extend(src[pos:])
    return PointedForest(out, p.pointer + q.pointer)


# -- text form -------------------------------------------------------------


def parse_tree(text: str) -> Tree:
    stack: list[list[Tree]] = []
    result: Optional[Tree] = None
    for pos, ch in enumerate(text):
        if result is not None:
            raise ParseError(f"trailing characters in tree {text!r}")
        if ch == "(":
            stack.append([])
            continue
        if ch == ".":
            node: Tree = LEAF
        elif ch == ")":
            if not stack or len(stack[-1]) != 2:
                raise ParseError(f"unbalanced ')' at {pos} in {text!r}")
            left, right = stack.pop()
            node = Caret(left, right)
        else:
            raise ParseError(f"unexpected {ch!r} at {pos} in {text!r}")
        if stack:
            if len(stack[-1]) == 2:
                raise ParseError(f"caret with more than two children in {text!r}")
            stack[-1].append(node)
        else:
            result = node
    if result is None or stack:
        raise ParseError(f"incomplete tree {text!r}")
    return result


def parse_forest(text: str) -> Forest:
    return Forest(parse_tree(tok) for tok in text.split())


def parse_pforest(text: str) -> PointedForest:
    text = text.strip()
    if not text.startswith("p="):
        raise ParseError(f"pointed forest must start with 'p=': {text!r}")
    head, sep, rest = text[2:].partition(":")
    if not sep or not head.isdigit():
        raise ParseError(f"bad pointer in {text!r}")
    return PointedForest(parse_forest(rest).trees, int(head))


def format_forest(f: Union[Forest, Iterable[Tree]]) -> str:
    trees = f.trees if isinstance(f, Forest) else _trim(f)
    return " ".join(t.code for t in trees)


def format_pforest(p: PointedForest) -> str:
    return "".join([f"p={p.pointer}:"] + [" " + t.code for t in p.trees])


def subtrees(tree: Tree) -> Iterator[Tree]:
    """Preorder walk over all subtrees."""
    todo = [tree]
    while todo:
        node = todo.pop()
        yield node
        if isinstance(node, Caret):
            todo.append(node.right)
            todo.append(node.left)
