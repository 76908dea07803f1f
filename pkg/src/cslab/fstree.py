"""Foata--Strehl trees of words with distinct letters.

The tree of a word has the minimum letter at the root, the tree of the
prefix before it as left subtree and the tree of the suffix after it as
right subtree; reading the tree in order gives the word back.  A vertex's
*level* is the number of right-child edges on its root path, and its
rl-word records the whole root path (``r`` = right child, ``l`` = left
child).

Unlabeled plane 0-1-2 shapes are nested pairs ``(left, right)`` with
``None`` for a missing child.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

Shape = Optional[tuple]


@dataclass(frozen=True)
class FSTree:
    """A labeled plane 0-1-2 tree; ``left``/``right`` map a label to its child."""

    root: Optional[int]
    left: dict = field(default_factory=dict)
    right: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.labels())

    def labels(self) -> list[int]:
        return unbuild(self)

    def parents(self) -> dict[int, tuple[int, str]]:
        """Map child label -> (parent label, 'l' or 'r')."""
        par = {c: (p, "l") for p, c in self.left.items()}
        par.update({c: (p, "r") for p, c in self.right.items()})
        return par

    def subtree(self, label: Optional[int]) -> list[int]:
        """Labels of the subtree rooted at ``label`` (in order)."""
        out: list[int] = []
        stack = []
        v = label
        while stack or v is not None:
            while v is not None:
                stack.append(v)
                v = self.left.get(v)
            v = stack.pop()
            out.append(v)
            v = self.right.get(v)
        return out

    def shape(self) -> Shape:
        def rec(v):
            if v is None:
                return None
            return (rec(self.left.get(v)), rec(self.right.get(v)))

        return rec(self.root)

    def to_json(self) -> Optional[dict]:
        def rec(v):
            if v is None:
                return None
            return {"label": v, "left": rec(self.left.get(v)), "right": rec(self.right.get(v))}

        return rec(self.root)

    @classmethod
    def from_json(cls, obj: Optional[dict]) -> "FSTree":
        left: dict = {}
        right: dict = {}

        def rec(node):
            if node is None:
                return None
            v = int(node["label"])
            for key, side in (("left", left), ("right", right)):
                c = rec(node.get(key))
                if c is not None:
                    side[v] = c
            return v

        return cls(rec(obj), left, right)


def _check_distinct(word: Sequence) -> None:
    if len(set(word)) != len(word):
        raise ValueError(f"word has repeated letters: {list(word)}")


def build(word: Sequence[int]) -> FSTree:
    """Foata--Strehl tree of ``word`` (a min-rooted Cartesian tree)."""
    _check_distinct(word)
    left: dict = {}
    right: dict = {}
    stack: list = []
    # Stack holds the right spine; popping a larger letter makes it the
    # left child of the incoming smaller one.
    for x in word:
        last = None
        while stack and stack[-1] > x:
            last = stack.pop()
        if last is not None:
            left[x] = last
        if stack:
            right[stack[-1]] = x
        stack.append(x)
    return FSTree(stack[0] if stack else None, left, right)


def unbuild(tree: FSTree) -> list[int]:
    """In-order reading of the tree; inverse of :func:`build`."""
    return tree.subtree(tree.root)


def _walk(tree: FSTree) -> Iterator[tuple[int, str]]:
    """Preorder (label, rl-word) pairs."""
    if tree.root is None:
        return
    stack = [(tree.root, "")]
    while stack:
        v, rl = stack.pop()
        yield v, rl
        if v in tree.right:
            stack.append((tree.right[v], rl + "r"))
        if v in tree.left:
            stack.append((tree.left[v], rl + "l"))


def levels(tree: FSTree) -> dict[int, int]:
    """Map label -> number of right steps from the root."""
    return {v: rl.count("r") for v, rl in _walk(tree)}


def word_levels(word: Sequence[int]) -> list[int]:
    """Levels of the letters of ``word`` in its tree, in word order."""
    lv = levels(build(word))
    return [lv[x] for x in word]


def rl_word(tree: FSTree, label: int) -> str:
    """Root path of ``label`` as a string over 'r' and 'l'."""
    par = tree.parents()
    if label != tree.root and label not in par:
        raise KeyError(f"label {label} is not in the tree")
    out = []
    v = label
    while v != tree.root:
        v, side = par[v]
        out.append(side)
    return "".join(reversed(out))


def _rl_key(rl: str) -> tuple[int, str]:
    # Same level: compare left to right with r before l; a word precedes its
    # extensions, which Python's string order already does.
    return rl.count("r"), rl.replace("r", "0").replace("l", "1")


def is_levelwise_numbered(tree: FSTree) -> bool:
    """True iff the labels 1..n follow the (level, rl-word) order."""
    walked = list(_walk(tree))
    labels = sorted(v for v, _ in walked)
    if labels != list(range(1, len(labels) + 1)):
        raise ValueError(f"labels must be exactly 1..n, got {labels}")
    ordered = sorted(walked, key=lambda p: _rl_key(p[1]))
    return all(v == i for i, (v, _) in enumerate(ordered, start=1))


def levelwise_numbering(shape: Shape) -> FSTree:
    """The unique levelwise numbering of an unlabeled shape."""
    slots: list[tuple[str, Shape]] = []

    def collect(node, rl):
        if node is None:
            return
        slots.append((rl, node))
        collect(node[0], rl + "l")
        collect(node[1], rl + "r")

    collect(shape, "")
    label_of = {rl: i for i, rl in enumerate(sorted((rl for rl, _ in slots), key=_rl_key), start=1)}
    left: dict = {}
    right: dict = {}
    for rl, node in slots:
        if node[0] is not None:
            left[label_of[rl]] = label_of[rl + "l"]
        if node[1] is not None:
            right[label_of[rl]] = label_of[rl + "r"]
    return FSTree(label_of[""] if slots else None, left, right)


def right_chains(tree: FSTree) -> list[list[int]]:
    """Maximal chains of parent -> right-child edges, top vertex first."""
    is_right_child = set(tree.right.values())
    chains = []
    for v, _ in _walk(tree):
        if v in is_right_child:
            continue
        chain = [v]
        while chain[-1] in tree.right:
            chain.append(tree.right[chain[-1]])
        chains.append(chain)
    return chains


def k_condition(tree: FSTree, k: int) -> bool:
    """Every maximal right chain has a multiple of k - 1 vertices."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    return all(len(c) % (k - 1) == 0 for c in right_chains(tree))


def shapes(n: int) -> Iterator[Shape]:
    """All plane 0-1-2 shapes with n vertices."""
    if n == 0:
        yield None
        return
    for a in range(n):
        for ls in shapes(a):
            for rs in shapes(n - 1 - a):
                yield (ls, rs)


def shape_to_json(shape: Shape) -> Optional[dict]:
    if shape is None:
        return None
    return {"left": shape_to_json(shape[0]), "right": shape_to_json(shape[1])}


def shape_from_json(obj: Optional[dict]) -> Shape:
    if obj is None:
        return None
    return (shape_from_json(obj.get("left")), shape_from_json(obj.get("right")))
