"""Type counts, their rational generating functions, and k-continuants.

``T_k(x_1..x_r) = x_1 Q_k(x_2..x_r) / Q_k(x_1..x_r)`` where ``Q_k`` is the
signed sum over unions of disjoint k-blocks of consecutive variables.
The same polynomials appear as k-continuants evaluated at ``1/(zeta x_i)``
with ``zeta`` a primitive 2k-th root of unity.
"""

from __future__ import annotations

import cmath
import random
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterator, Optional, Sequence

from .poly import MultiPoly, Series, evaluate_exact, one
from .spitzer import canonical_type


def type_count(vec: Sequence[int], k: int) -> int:
    """Number of augmented k-Catalan paths with ``vec[j-1]`` points at level j."""
    return _type_count(canonical_type(vec), k)


@lru_cache(maxsize=None)
def _type_count(vec: tuple, k: int) -> int:
    r = len(vec)
    if r == 0 or vec[0] < 1:
        return 0
    if r == 1:
        return int(vec[0] == 1)
    last = vec[-1]
    # Levels below 1 hold no points.
    for j in range(r - k + 1, r):
        if (vec[j - 1] if j >= 1 else 0) < last:
            return 0
    lo = r - k + 1
    reduced = list(vec)
    for j in range(lo, r + 1):
        reduced[j - 1] -= last
    return comb(vec[lo - 1] - 1, last) * _type_count(canonical_type(reduced), k)


def k_blocks(lo: int, hi: int, k: int) -> Iterator[tuple[int, ...]]:
    """Start points of every family of disjoint k-blocks inside [lo, hi]."""

    def rec(start):
        yield ()
        for s in range(start, hi - k + 2):
            for rest in rec(s + k):
                yield (s,) + rest

    yield from rec(lo)


def q_poly(k: int, r: int, first: int = 1, nvars: Optional[int] = None) -> MultiPoly:
    """``Q_k(x_first, ..., x_r)`` inside a ring of ``nvars`` (default r) variables."""
    nvars = r if nvars is None else nvars
    out: dict[tuple, int] = {}
    for starts in k_blocks(first, r, k):
        e = [0] * nvars
        for s in starts:
            for i in range(s, s + k):
                e[i - 1] = 1
        out[tuple(e)] = (-1) ** len(starts)
    return MultiPoly(nvars, out)


def t_series(k: int, r: int, D: int) -> Series:
    """Expansion of ``T_k(x_1..x_r)`` up to total degree D."""
    if r < 1:
        raise ValueError("need r >= 1")
    num = MultiPoly.var(1, r) * q_poly(k, r, first=2)
    return Series(num, D) / Series(q_poly(k, r), D)


def t_series_census(k: int, r: int, D: int) -> dict[tuple, int]:
    """Coefficients of :func:`t_series` keyed by canonical type."""
    return {canonical_type(e): c for e, c in t_series(k, r, D).poly.terms.items()}


def continuant(k: int, args: Sequence, one_=1):
    """``K_{k,n}(args)`` by its defining recurrence.

    ``args`` may hold numbers or :class:`MultiPoly` values; pass the ring's
    unit as ``one_`` for polynomial arguments.
    """
    vals = [one_]
    for n in range(1, len(args) + 1):
        if n < k:
            vals.append(vals[-1] * args[n - 1])
        else:
            vals.append(vals[n - k] + vals[n - 1] * args[n - 1])
    return vals[-1]


def continuant_matrix(k: int, args: Sequence, one_=1, zero=0) -> list:
    """``M_k(x_n)...M_k(x_1) e_1``: the column (K_n, K_{n-1}, ..., K_{n-k+1})."""
    v = [one_] + [zero] * (k - 1)
    for x in args:
        # First row (x, 0, ..., 0, 1); below it the shift.
        v = [x * v[0] + v[k - 1]] + v[: k - 1]
    return v


def symbolic_args(n: int) -> list[MultiPoly]:
    return [MultiPoly.var(i, n) for i in range(1, n + 1)]


def continuant_poly(k: int, n: int) -> MultiPoly:
    return continuant(k, symbolic_args(n), one(n))


def block_deletion_expansion(k: int, n: int) -> MultiPoly:
    """Sum of ``x_1...x_n`` with any disjoint consecutive k-blocks deleted."""
    out: dict[tuple, int] = {}
    for starts in k_blocks(1, n, k):
        e = [1] * n
        for s in starts:
            for i in range(s, s + k):
                e[i - 1] = 0
        out[tuple(e)] = out.get(tuple(e), 0) + 1
    return MultiPoly(n, out)


def continuant_ones(k: int, n: int) -> list[int]:
    """``K_{k,m}(1, ..., 1)`` for m = 0..n."""
    return [continuant(k, [1] * m) for m in range(n + 1)]


def q_vs_continuant_check(k: int, r: int, points: Sequence[Sequence], tol: float = 1e-9) -> bool:
    """Compare ``Q_k(x)`` with ``zeta^r x_1..x_r K_{k,r}(1/(zeta x_i))`` numerically."""
    zeta = cmath.exp(1j * cmath.pi / k)
    q = q_poly(k, r)
    for pt in points:
        lhs = complex(evaluate_exact(q, pt))
        xs = [complex(Fraction(x)) for x in pt[:r]]
        prod = 1
        for x in xs:
            prod *= x
        rhs = zeta**r * prod * continuant(k, [1 / (zeta * x) for x in xs])
        if abs(lhs - rhs) > tol:
            return False
    return True


def t_continuant_check(k: int, r: int, points: Sequence[Sequence], tol: float = 1e-9) -> bool:
    """``T_k`` as a ratio of continuants versus ``x_1 Q_k(x_2..) / Q_k(x_1..)``.

    Points where ``Q_k(x_1..x_r)`` vanishes are poles of ``T_k`` and are skipped.
    """
    zeta = cmath.exp(1j * cmath.pi / k)
    num = MultiPoly.var(1, r) * q_poly(k, r, first=2)
    den = q_poly(k, r)
    for pt in points:
        d = evaluate_exact(den, pt)
        if d == 0:
            continue
        exact = evaluate_exact(num, pt) / d
        ys = [1 / (zeta * complex(Fraction(x))) for x in pt[:r]]
        via = continuant(k, ys[1:]) / continuant(k, ys) / zeta
        if abs(complex(exact) - via) > tol * max(1.0, abs(via)):
            return False
    return True


def random_points(count: int, r: int, seed: int = 0) -> list[list[Fraction]]:
    """Positive rationals in [1/5, 2]; the range keeps doubles well conditioned."""
    rng = random.Random(seed)
    return [[Fraction(rng.randint(1, 10), 5) for _ in range(r)] for _ in range(count)]


def continued_fraction_T2(r: int, D: int) -> Series:
    """``1/(1/x_1 - 1/(1/x_2 - ... 1/(1/x_r)))`` expanded to total degree D."""
    if r < 1:
        raise ValueError("need r >= 1")
    x = [Series(MultiPoly.var(i, r), D) for i in range(1, r + 1)]
    f = x[r - 1]
    for j in range(r - 2, -1, -1):
        # 1/(1/x_j - f) = x_j / (1 - x_j f)
        f = x[j] / (1 - x[j] * f)
    return f


def flajolet_series(D: int, depth: Optional[int] = None) -> Series:
    """``x_1/(1 - x_1x_2/(1 - x_2x_3/(...)))`` to total degree D.

    The fraction is cut after ``depth`` levels (default D), leaving
    variables x_1..x_depth.  Paths of total degree <= D never climb above
    level (D + 1) // 2, so the default depth is exact at degree D.
    """
    depth = max(D, 1) if depth is None else depth
    nv = depth
    x = [Series(MultiPoly.var(i, nv), D) for i in range(1, nv + 1)]
    g = Series(one(nv), D)
    for j in range(nv - 2, -1, -1):
        g = 1 / (1 - x[j] * x[j + 1] * g)
    return x[0] * g
