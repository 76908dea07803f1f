"""Lattice paths with up steps (1, 1) and down steps (1, 1 - k).

Three flavours share one type:

* ``catalan``   -- from the origin back to the axis, never below it,
* ``augmented`` -- a catalan path with an extra leading up step; stays at
  height >= 1 after that step and ends at height 1,
* ``bridge``    -- same step multiset as a catalan path, no sign constraint.

Also here: the cyclic-shift statistics (above/below the axis, the
sum-one and sum-zero cyclic profiles) and the tilted linear order on the
points of a sum-one path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterator, Sequence

UP = "U"
DOWN = "D"
KINDS = ("catalan", "augmented", "bridge")


def fuss_catalan(n: int, k: int) -> int:
    """Number of k-Catalan paths of order n, ``binom(kn+1, n) / (kn+1)``."""
    if n < 0 or k < 2:
        raise ValueError(f"need n >= 0 and k >= 2, got n={n}, k={k}")
    q, r = divmod(comb(k * n + 1, n), k * n + 1)
    assert r == 0
    return q


@dataclass(frozen=True)
class LatticePath:
    k: int
    steps: str
    kind: str = "catalan"

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"k must be >= 2, got {self.k}")
        if self.kind not in KINDS:
            raise ValueError(f"unknown path kind {self.kind!r}")
        if set(self.steps) - {UP, DOWN}:
            raise ValueError(f"steps must be a string over 'U'/'D', got {self.steps!r}")

    def __len__(self):
        return len(self.steps)

    def __str__(self):
        return self.steps

    @property
    def ups(self) -> int:
        return self.steps.count(UP)

    @property
    def downs(self) -> int:
        return self.steps.count(DOWN)

    @property
    def order(self) -> int:
        """The order n, i.e. the number of down steps."""
        return self.downs

    def heights(self) -> list[int]:
        """Heights of all lattice points, starting with the origin."""
        h = [0]
        drop = self.k - 1
        for s in self.steps:
            h.append(h[-1] + 1 if s == UP else h[-1] - drop)
        return h

    def points(self) -> list[tuple[int, int]]:
        return list(enumerate(self.heights()))

    def to_json(self) -> dict:
        return {"k": self.k, "kind": self.kind, "steps": self.steps}

    @classmethod
    def from_json(cls, obj: dict) -> "LatticePath":
        return cls(k=int(obj["k"]), steps=str(obj["steps"]), kind=str(obj["kind"]))


def validate(path: LatticePath) -> bool:
    """Check the kind-specific invariants of ``path``."""
    k, n = path.k, path.downs
    h = path.heights()
    if path.kind == "catalan":
        return path.ups == (k - 1) * n and h[-1] == 0 and min(h) >= 0
    if path.kind == "bridge":
        return path.ups == (k - 1) * n and h[-1] == 0
    # augmented
    if not path.steps or path.steps[0] != UP:
        return False
    if path.ups != (k - 1) * n + 1 or h[-1] != 1:
        return False
    return min(h[1:]) >= 1


def _require(path: LatticePath, kind: str) -> None:
    if path.kind != kind or not validate(path):
        raise ValueError(f"expected a valid {kind} path, got {path.kind} {path.steps!r} (k={path.k})")


def _catalan_words(n: int, k: int, prefix: str = "") -> Iterator[str]:
    total_up = (k - 1) * n
    drop = k - 1
    buf = list(prefix)
    ups = downs = h = 0
    for s in prefix:
        if s == UP:
            ups, h = ups + 1, h + 1
        else:
            downs, h = downs + 1, h - drop
        if h < 0 or ups > total_up or downs > n:
            return

    # Lexicographic with U < D: try the up step first.
    def rec(ups: int, downs: int, h: int):
        if ups == total_up and downs == n:
            yield "".join(buf)
            return
        if ups < total_up:
            buf.append(UP)
            yield from rec(ups + 1, downs, h + 1)
            buf.pop()
        if downs < n and h >= drop:
            buf.append(DOWN)
            yield from rec(ups, downs + 1, h - drop)
            buf.pop()

    yield from rec(ups, downs, h)


def enumerate_catalan(n: int, k: int, prefix: str = "") -> Iterator[LatticePath]:
    """All k-Catalan paths of order n in lexicographic order (U < D).

    ``prefix`` restricts the stream to paths starting with the given steps,
    which is how the enumeration is sharded.
    """
    if n < 0 or k < 2:
        raise ValueError(f"need n >= 0 and k >= 2, got n={n}, k={k}")
    for w in _catalan_words(n, k, prefix):
        yield LatticePath(k, w, "catalan")


def enumerate_bridges(n: int, k: int) -> Iterator[LatticePath]:
    """All ``binom(kn, n)`` bridges in lexicographic order (U < D)."""
    if n < 0 or k < 2:
        raise ValueError(f"need n >= 0 and k >= 2, got n={n}, k={k}")
    length = k * n
    buf: list[str] = []

    def rec(ups: int, downs: int):
        if ups + downs == length:
            yield LatticePath(k, "".join(buf), "bridge")
            return
        if ups < (k - 1) * n:
            buf.append(UP)
            yield from rec(ups + 1, downs)
            buf.pop()
        if downs < n:
            buf.append(DOWN)
            yield from rec(ups, downs + 1)
            buf.pop()

    yield from rec(0, 0)


def augment(path: LatticePath) -> LatticePath:
    _require(path, "catalan")
    return LatticePath(path.k, UP + path.steps, "augmented")


def deaugment(path: LatticePath) -> LatticePath:
    _require(path, "augmented")
    return LatticePath(path.k, path.steps[1:], "catalan")


def steps_above_axis(path: LatticePath) -> int:
    """Steps of a k=2 bridge lying above the axis (positive midpoint)."""
    if path.k != 2:
        raise ValueError("steps above the axis are only defined here for k = 2")
    h = path.heights()
    return sum(1 for a, b in zip(h, h[1:]) if a + b > 0)


def up_steps_below_axis(path: LatticePath) -> int:
    """Up steps starting strictly below the axis."""
    h = path.heights()
    return sum(1 for s, a in zip(path.steps, h) if s == UP and a < 0)


def _cyclic_shift(v: Sequence, s: int) -> list:
    s %= len(v)
    return list(v[s:]) + list(v[:s])


def huq_statistic(v: Sequence[int], s: int) -> int:
    """Positive partial sums of length 1..m-1 of the s-th cyclic shift of v."""
    if sum(v) != 1:
        raise ValueError(f"entries must sum to 1, got sum {sum(v)}")
    w = _cyclic_shift(v, s)
    total = 0
    count = 0
    for y in w[:-1]:
        total += y
        if total > 0:
            count += 1
    return count


def huq_profile(v: Sequence[int]) -> list[int]:
    """The statistic for every shift s = 0..m-1, in shift order."""
    return [huq_statistic(v, s) for s in range(len(v))]


class VanishingWindowError(ValueError):
    """A proper cyclic window of a sum-zero vector sums to zero."""

    def __init__(self, start: int, length: int):
        self.start, self.length = start, length
        super().__init__(f"cyclic window starting at index {start} of length {length} sums to zero")


def spitzer_profile(x: Sequence) -> list[int]:
    """Positive partial sums of length 1..m for each cyclic shift of x.

    Entries are exact (ints or Fractions); the total must vanish and no
    proper cyclic window may.
    """
    x = [Fraction(t) for t in x]
    m = len(x)
    if sum(x) != 0:
        raise ValueError(f"entries must sum to 0, got {sum(x)}")
    for start in range(m):
        acc = Fraction(0)
        for length in range(1, m):
            acc += x[(start + length - 1) % m]
            if acc == 0:
                raise VanishingWindowError(start, length)
    profile = []
    for s in range(m):
        acc = Fraction(0)
        count = 0
        for t in _cyclic_shift(x, s):
            acc += t
            if acc > 0:
                count += 1
        profile.append(count)
    return profile


def functional_order(v: Sequence[int]) -> list[tuple[int, int]]:
    """Points (i, v_i), i < m, of the path of v sorted by ``v_i - i/m``."""
    m = len(v)
    if sum(v) != 1:
        raise ValueError(f"entries must sum to 1, got sum {sum(v)}")
    pts = []
    h = 0
    for i in range(m):
        pts.append((i, h))
        h += v[i]
    keyed = sorted(pts, key=lambda p: Fraction(p[1]) - Fraction(p[0], m))
    keys = [Fraction(w) - Fraction(u, m) for u, w in keyed]
    assert all(a < b for a, b in zip(keys, keys[1:]))
    return keyed
