"""Catalan--Spitzer permutations.

An augmented path of order n is tilted into integer heights
``z'_i = ((kn+1) z_i - i) / k``; those are pairwise distinct, the last one
is 0 and all others are positive.  The *full* permutation ranks all
kn+1 tilted heights, the *short* one only those at the lower ends of the
up steps of the underlying k-Catalan path.  The short permutation
determines the path; :func:`reconstruct` inverts it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from . import fstree
from .lattice import UP, DOWN, LatticePath, _require, augment, enumerate_catalan

Permutation = tuple


@dataclass(frozen=True)
class SpitzerCoordinates:
    k: int
    n: int
    zprime: tuple

    def __post_init__(self):
        z = self.zprime
        assert len(set(z)) == len(z), "tilted heights must be distinct"
        assert z[-1] == 0 and all(t > 0 for t in z[:-1])


def tilt(aug: LatticePath) -> SpitzerCoordinates:
    _require(aug, "augmented")
    k, n = aug.k, aug.order
    m = k * n + 1
    zprime = []
    for i, z in enumerate(aug.heights()[1:], start=1):
        q, r = divmod(m * z - i, k)
        assert r == 0
        zprime.append(q)
    return SpitzerCoordinates(k, n, tuple(zprime))


def ranks(values: Sequence) -> Permutation:
    """One-line notation of the relative order of distinct values."""
    order = sorted(range(len(values)), key=values.__getitem__)
    out = [0] * len(values)
    for r, i in enumerate(order, start=1):
        out[i] = r
    return tuple(out)


def pattern(word: Sequence) -> Permutation:
    if len(set(word)) != len(word):
        raise ValueError(f"word has repeated letters: {list(word)}")
    return ranks(word)


def ascent_set(p: Sequence) -> set[int]:
    """1-based positions i with p(i) < p(i+1)."""
    return {i for i in range(1, len(p)) if p[i - 1] < p[i]}


def full_csp(aug: LatticePath) -> Permutation:
    """Ranks of all kn+1 tilted heights; always ends with 1."""
    return ranks(tilt(aug).zprime)


def short_csp(path: LatticePath) -> Permutation:
    """Label up steps bottom level first, right to left within a level."""
    _require(path, "catalan")
    h = path.heights()
    ups = [(h[i], -i) for i, s in enumerate(path.steps) if s == UP]
    return ranks(ups)


def short_csp_via_full(path: LatticePath) -> Permutation:
    """Same permutation, as the pattern of the full one at its ascents."""
    full = full_csp(augment(path))
    return pattern([full[i - 1] for i in sorted(ascent_set(full))])


def is_short_csp(perm: Sequence[int], k: int = 2) -> bool:
    tree = fstree.build(perm)
    return fstree.is_levelwise_numbered(tree) and fstree.k_condition(tree, k)


def reconstruct(short: Sequence[int], k: int) -> LatticePath:
    """The unique k-Catalan path whose short permutation is ``short``."""
    short = tuple(short)
    if sorted(short) != list(range(1, len(short) + 1)):
        raise ValueError(f"not a permutation of 1..{len(short)}: {list(short)}")
    tree = fstree.build(short)
    if not fstree.is_levelwise_numbered(tree):
        raise ValueError(f"{list(short)} is not a short Catalan-Spitzer permutation: tree not levelwise numbered")
    if not fstree.k_condition(tree, k):
        raise ValueError(f"{list(short)} fails the right-chain condition for k={k}")
    lv = fstree.levels(tree)
    steps = []
    drop = k - 1
    # Up step i ends one above its level; the downs bring it to the next level.
    targets = [lv[x] for x in short[1:]] + [0]
    for x, nxt in zip(short, targets):
        d, r = divmod(lv[x] + 1 - nxt, drop)
        if r or d < 0:
            raise ValueError(f"level gap after letter {x} is not a nonnegative multiple of {drop}")
        steps.append(UP + DOWN * d)
    path = LatticePath(k, "".join(steps), "catalan")
    _require(path, "catalan")
    return path


def path_type(aug: LatticePath) -> tuple[int, ...]:
    """Lattice points per level 1, 2, ... (endpoint included, origin not)."""
    _require(aug, "augmented")
    c = Counter(aug.heights()[1:])
    return tuple(c.get(j, 0) for j in range(1, max(c) + 1))


def canonical_type(vec: Sequence[int]) -> tuple[int, ...]:
    vec = list(vec)
    while vec and vec[-1] == 0:
        vec.pop()
    return tuple(vec)


def type_census(n: int, k: int) -> Counter:
    """Number of augmented paths of order n per type."""
    return Counter(path_type(augment(p)) for p in enumerate_catalan(n, k))
