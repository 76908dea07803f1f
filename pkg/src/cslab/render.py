"""Static SVG drawings of lattice paths and Foata--Strehl trees."""

from __future__ import annotations

from typing import Sequence

from . import fstree
from .lattice import LatticePath

UNIT = 30
MARGIN = 20


def _doc(width: int, height: int, body: list[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    )
    return "\n".join([head, *body, "</svg>", ""])


def path_svg(path: LatticePath) -> str:
    """The path as a polyline over dotted level lines."""
    h = path.heights()
    lo, hi = min(h), max(h)
    width = 2 * MARGIN + UNIT * max(len(path), 1)
    height = 2 * MARGIN + UNIT * max(hi - lo, 1)

    def xy(i, y):
        return MARGIN + UNIT * i, MARGIN + UNIT * (hi - y)

    body = []
    for level in range(lo, hi + 1):
        _, y = xy(0, level)
        style = 'stroke="#888" stroke-width="1"' if level == 0 else 'stroke="#bbb" stroke-dasharray="2,3"'
        body.append(f'<line x1="{MARGIN}" y1="{y}" x2="{width - MARGIN}" y2="{y}" {style}/>')
    pts = " ".join("{},{}".format(*xy(i, y)) for i, y in enumerate(h))
    body.append(f'<polyline points="{pts}" fill="none" stroke="black" stroke-width="2"/>')
    for i, y in enumerate(h):
        cx, cy = xy(i, y)
        body.append(f'<circle cx="{cx}" cy="{cy}" r="3" fill="black"/>')
    return _doc(width, height, body)


def tree_svg(word: Sequence[int]) -> str:
    """The tree of ``word``: column = position in the word, row = depth.

    Right-child edges therefore slant to the right and left-child edges to
    the left.
    """
    tree = fstree.build(word)
    col = {a: i for i, a in enumerate(word)}
    depth = {}
    if tree.root is not None:
        stack = [(tree.root, 0)]
        while stack:
            v, d = stack.pop()
            depth[v] = d
            for child in (tree.left.get(v), tree.right.get(v)):
                if child is not None:
                    stack.append((child, d + 1))
    width = 2 * MARGIN + UNIT * max(len(word), 1)
    height = 2 * MARGIN + UNIT * (max(depth.values(), default=0) + 1)

    def xy(v):
        return MARGIN + UNIT * col[v] + UNIT // 2, MARGIN + UNIT * depth[v] + UNIT // 2

    body = []
    for side in (tree.left, tree.right):
        for parent, child in sorted(side.items()):
            (x1, y1), (x2, y2) = xy(parent), xy(child)
            body.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" stroke-width="1.5"/>')
    for v in word:
        cx, cy = xy(v)
        body.append(f'<circle cx="{cx}" cy="{cy}" r="10" fill="white" stroke="black"/>')
        body.append(f'<text x="{cx}" y="{cy + 4}" font-size="11" text-anchor="middle">{v}</text>')
    return _doc(width, height, body)
