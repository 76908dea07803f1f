"""The restricted Foata--Strehl action and its orbit generating functions.

A word w is x-decomposable when the letters >= x form a contiguous block
with x at one of its ends; the x-flip moves x to the other end (and does
nothing otherwise).  Flips for x below the maximum generate the action;
every orbit has ``2^|I|`` elements, where I is the set of i for which the
members are i-decomposable.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Iterable, Iterator, Optional, Sequence

from . import fstree
from .lattice import enumerate_catalan
from .poly import MultiPoly, UniSeries
from .spitzer import is_short_csp, pattern, short_csp

Perm = tuple


def x_decompose(w: Sequence[int], x: int) -> Optional[tuple[tuple, tuple, tuple]]:
    """The x-decomposition (w1, w2, w3) of w, or None."""
    w = tuple(w)
    if x not in w:
        raise ValueError(f"{x} is not a letter of {list(w)}")
    big = [i for i, a in enumerate(w) if a >= x]
    lo, hi = big[0], big[-1]
    if hi - lo + 1 != len(big):
        return None
    if w[lo] != x and w[hi] != x:
        return None
    return w[:lo], w[lo : hi + 1], w[hi + 1 :]


def flip(w: Sequence[int], x: int) -> Perm:
    w = tuple(w)
    dec = x_decompose(w, x)
    if dec is None:
        return w
    w1, w2, w3 = dec
    if w2[0] == x:
        w2 = w2[1:] + (x,)
    else:
        w2 = (x,) + w2[:-1]
    return w1 + w2 + w3


def flip_set(w: Sequence[int]) -> frozenset[int]:
    """All i below the maximum letter for which w is i-decomposable."""
    top = max(w)
    return frozenset(x for x in w if x < top and x_decompose(w, x) is not None)


def _flip_set_fast(w: Perm) -> frozenset[int]:
    # Sweep x from the top: track the span of positions holding letters >= x.
    pos = {a: i for i, a in enumerate(w)}
    letters = sorted(w, reverse=True)
    lo = hi = pos[letters[0]]
    out = []
    for count, x in enumerate(letters[1:], start=2):
        p = pos[x]
        lo, hi = min(lo, p), max(hi, p)
        if hi - lo + 1 == count and (p == lo or p == hi):
            out.append(x)
    return frozenset(out)


def fs_swap(w: Sequence[int], x: int) -> Perm:
    """The unrestricted Foata--Strehl involution: swap the subtrees of x."""
    t = fstree.build(w)
    left, right = dict(t.left), dict(t.right)
    a, b = left.pop(x, None), right.pop(x, None)
    if b is not None:
        left[x] = b
    if a is not None:
        right[x] = a
    return tuple(fstree.unbuild(fstree.FSTree(t.root, left, right)))


def fs_decomposable(w: Sequence[int], x: int) -> bool:
    """Tree-side test: x has exactly one subtree, which holds every larger letter."""
    t = fstree.build(w)
    if (x in t.left) == (x in t.right):
        return False
    below = set(t.subtree(x)) - {x}
    return below == {a for a in w if a > x}


def is_distinguished(w: Sequence[int], I: Optional[Iterable[int]] = None) -> bool:
    """Letter i + 1 sits right of letter i for every i in the flip set."""
    w = tuple(w)
    pos = {a: i for i, a in enumerate(w)}
    I = _flip_set_fast(w) if I is None else I
    return all(pos[i + 1] > pos[i] for i in I)


def orbit_members(w: Sequence[int]) -> list[Perm]:
    """The 2^|I| images of w, sorted."""
    w = tuple(w)
    seen = {w}
    for i in sorted(_flip_set_fast(w)):
        seen |= {flip(u, i) for u in seen}
    return sorted(seen)


def orbit_closure(w: Sequence[int]) -> set[Perm]:
    """Orbit of w by breadth-first search over all flips (independent of I)."""
    w = tuple(w)
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for u in frontier:
            for x in u:
                v = flip(u, x)
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return seen


class PermClass:
    """A pattern-invariant class of permutations given by a predicate.

    ``members(n)`` yields the class inside S_n in lexicographic order;
    subclasses with a faster generator override it.
    """

    name = "custom"

    def __init__(self, predicate: Optional[Callable[[Perm], bool]] = None, name: Optional[str] = None):
        self._predicate = predicate
        if name:
            self.name = name

    def __contains__(self, w: Sequence[int]) -> bool:
        return self.contains(pattern(w)) if w else True

    def contains(self, perm: Perm) -> bool:
        return bool(self._predicate(perm))

    def members(self, n: int, first: Optional[int] = None) -> Iterator[Perm]:
        for p in permutations(range(1, n + 1)):
            if first is not None and p[0] != first:
                continue
            if self.contains(p):
                yield p


class AllPerms(PermClass):
    name = "all"

    def contains(self, perm):
        return True

    def members(self, n, first=None):
        if first is None:
            yield from permutations(range(1, n + 1))
            return
        rest = [a for a in range(1, n + 1) if a != first]
        for p in permutations(rest):
            yield (first,) + p


class ShortCSP(PermClass):
    """Short k-Catalan--Spitzer permutations (k = 2 gives the plain class)."""

    def __init__(self, k: int = 2):
        self.k = k
        self.name = "short-csp" if k == 2 else f"short-k-csp({k})"

    def contains(self, perm):
        return is_short_csp(perm, self.k)

    def members(self, n, first=None):
        if n % (self.k - 1):
            return
        perms = sorted(short_csp(p) for p in enumerate_catalan(n // (self.k - 1), self.k))
        for p in perms:
            if first is None or p[0] == first:
                yield p


def get_class(name: str, k: int = 2) -> PermClass:
    if name == "all":
        return AllPerms()
    if name == "short-csp":
        return ShortCSP(2)
    if name == "short-k-csp":
        return ShortCSP(k)
    raise ValueError(f"unknown class {name!r}")


@dataclass(frozen=True)
class OrbitRecord:
    rep: Perm
    I: frozenset
    members: Optional[tuple] = field(default=None, compare=False)

    @property
    def size(self) -> int:
        return 2 ** len(self.I)

    def to_json(self) -> dict:
        out = {"rep": list(self.rep), "I": sorted(self.I), "size": self.size}
        if self.members is not None:
            out["members"] = [list(m) for m in self.members]
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "OrbitRecord":
        members = tuple(tuple(m) for m in obj["members"]) if "members" in obj else None
        rec = cls(tuple(obj["rep"]), frozenset(obj["I"]), members)
        if rec.size != obj["size"]:
            raise ValueError("orbit size does not match its flip set")
        return rec


class FlipClosureError(ValueError):
    def __init__(self, w: Perm, x: int, image: Perm):
        self.w, self.x, self.image = w, x, image
        super().__init__(f"flip of {list(w)} at {x} gives {list(image)}, which is outside the class")


def _shard(cls: PermClass, n: int, first: Optional[int], with_members: bool) -> list[OrbitRecord]:
    out = []
    for w in cls.members(n, first):
        I = _flip_set_fast(w)
        for x in I:
            image = flip(w, x)
            if not cls.contains(image):
                raise FlipClosureError(w, x, image)
        if is_distinguished(w, I):
            members = tuple(orbit_members(w)) if with_members else None
            out.append(OrbitRecord(w, I, members))
    return out


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("CS_LAB_THREADS", "1")))
    except ValueError:
        return 1


def orbits(cls: PermClass, n: int, with_members: bool = False, workers: Optional[int] = None) -> list[OrbitRecord]:
    """Orbits of the restricted action on the class inside S_n, by representative.

    The class is checked for closure under flips on the way; a violation
    raises :class:`FlipClosureError`.  With more than one worker the scan is
    sharded by first letter across processes.
    """
    workers = _workers() if workers is None else workers
    if workers <= 1 or n < 2:
        recs = _shard(cls, n, None, with_members)
    else:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = ex.map(_shard, *zip(*[(cls, n, f, with_members) for f in range(1, n + 1)]))
            recs = [r for part in parts for r in part]
    return sorted(recs, key=lambda r: r.rep)


@dataclass
class Violation:
    w: Perm
    x: int
    reason: str

    def __str__(self):
        return f"{list(self.w)} at x={self.x}: {self.reason}"


def find_incompatibility(cls: PermClass, N: int) -> Optional[Violation]:
    """First member (n <= N) breaking compatibility with the action, if any."""
    for n in range(1, N + 1):
        for w in cls.members(n):
            for x in w:
                dec = x_decompose(w, x)
                if dec is None:
                    continue
                w1, w2, w3 = dec
                if not cls.contains(flip(w, x)):
                    return Violation(w, x, f"flip gives {list(flip(w, x))}")
                if w2 not in cls:
                    return Violation(w, x, f"middle part {list(w2)} not in class")
                if (w1 + w3) not in cls:
                    return Violation(w, x, f"outer part {list(w1 + w3)} not in class")
    return None


def check_compatible(cls: PermClass, N: int) -> bool:
    return find_incompatibility(cls, N) is None


def y_poly(coeffs: Sequence[int]) -> MultiPoly:
    """``sum coeffs[j] y^j`` as a one-variable polynomial."""
    return MultiPoly(1, {(j,): c for j, c in enumerate(coeffs)})


@dataclass
class OrbitSeries:
    """Brute-force counts and the closed forms built from the P series."""

    N: int
    P: UniSeries
    O: UniSeries
    Pxy: UniSeries
    Oxy: UniSeries
    O_closed: UniSeries
    Pxy_closed: UniSeries
    Oxy_closed: UniSeries

    def agrees(self) -> bool:
        return self.O == self.O_closed and self.Pxy == self.Pxy_closed and self.Oxy == self.Oxy_closed


def closed_forms(P: UniSeries) -> tuple[UniSeries, UniSeries, UniSeries]:
    """``P/(1+P)``, ``P/(1-2(y-1)P)`` and ``P/(1-(y-2)P)`` from the P series."""
    N = P.trunc
    Py = UniSeries([y_poly([c]) for c in P.coeffs], N)
    y = y_poly([0, 1])
    O = P / (1 + P)
    Pxy = Py / (1 - (2 * (y - 1)) * Py)
    Oxy = Py / (1 - (y - 2) * Py)
    return O, Pxy, Oxy


def orbit_series(cls: PermClass, N: int) -> OrbitSeries:
    """Count members and orbits by orbit size for n <= N, with closed forms."""
    P = [0] * (N + 1)
    O = [0] * (N + 1)
    Pnj = [[0] * (N + 1) for _ in range(N + 1)]
    Onj = [[0] * (N + 1) for _ in range(N + 1)]
    for n in range(1, N + 1):
        for w in cls.members(n):
            I = _flip_set_fast(w)
            P[n] += 1
            Pnj[n][len(I)] += 1
            if is_distinguished(w, I):
                O[n] += 1
                Onj[n][len(I)] += 1
        for j in range(N + 1):
            if Pnj[n][j] != Onj[n][j] * 2**j:
                raise AssertionError(f"P[{n},{j}] = {Pnj[n][j]} is not 2^{j} * O[{n},{j}] = {Onj[n][j]}")
    Ps = UniSeries(P, N)
    O_closed, Pxy_closed, Oxy_closed = closed_forms(Ps)
    return OrbitSeries(
        N,
        Ps,
        UniSeries(O, N),
        UniSeries([y_poly(r) for r in Pnj], N),
        UniSeries([y_poly(r) for r in Onj], N),
        O_closed,
        Pxy_closed,
        Oxy_closed,
    )


def format_y_table(series: UniSeries, start: int = 1) -> list[str]:
    """Lines ``n: coefficient`` with y-polynomials in descending powers."""
    return [f"{n}: {series[n].format(['y'], descending=True) if isinstance(series[n], MultiPoly) else series[n]}"
            for n in range(start, series.trunc + 1)]
