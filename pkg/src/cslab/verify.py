"""Exhaustive verification suites behind ``cslab verify``.

Each suite expands into named cases; a case returns ``(ok, detail, echo)``
where ``echo`` holds extra lines to print (tables, counterexamples).  Cases
are plain module-level callables so they can be farmed out to worker
processes; results are always reported in case order.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable

from . import action, series
from .lattice import (
    enumerate_bridges,
    enumerate_catalan,
    fuss_catalan,
    steps_above_axis,
    up_steps_below_axis,
)
from .spitzer import is_short_csp, reconstruct, short_csp, short_csp_via_full, type_census

SUITES = (
    "raney",
    "chung-feller",
    "huq",
    "injectivity",
    "fs-characterization",
    "type-oracle",
    "continuant",
    "orbit-genfun",
)

# O(x, y) through x^6, coefficients of y^0, y^1, ... for n = 1..6.
REFERENCE_OXY = {
    "short-csp": [[1], [0, 1], [1, 0, 1], [2, 2, 0, 1], [6, 4, 3, 0, 1], [18, 13, 6, 4, 0, 1]],
    "all": [[1], [0, 1], [2, 0, 1], [8, 4, 0, 1], [48, 16, 6, 0, 1], [328, 100, 24, 8, 0, 1]],
}


@dataclass
class Case:
    name: str
    fn: Callable
    args: tuple = ()


@dataclass
class Result:
    name: str
    ok: bool
    detail: str = ""
    echo: list = field(default_factory=list)


def raney_case(k: int, n: int):
    got = sum(1 for _ in enumerate_catalan(n, k))
    want = fuss_catalan(n, k)
    return got == want, f"{got} paths, Fuss-Catalan {want}", []


def chung_feller_case(n: int):
    c = Counter(steps_above_axis(p) for p in enumerate_bridges(n, 2))
    want = {2 * r: fuss_catalan(n, 2) for r in range(n + 1)}
    return dict(c) == want, f"classes {dict(sorted(c.items()))}", []


def huq_case(k: int, n: int):
    c = Counter(up_steps_below_axis(p) for p in enumerate_bridges(n, k))
    want = {r: fuss_catalan(n, k) for r in range((k - 1) * n + 1)}
    return dict(c) == want, f"classes {dict(sorted(c.items()))}", []


def injectivity_case(k: int, n: int):
    seen = {}
    for p in enumerate_catalan(n, k):
        s = short_csp(p)
        if s in seen:
            return False, f"{seen[s]} and {p.steps} share {list(s)}", []
        seen[s] = p.steps
        if s != short_csp_via_full(p):
            return False, f"labeling and ascent-pattern routes differ on {p.steps}", []
        back = reconstruct(s, k)
        if back != p:
            return False, f"{p.steps} -> {list(s)} -> {back.steps}", []
    return True, f"{len(seen)} paths round-trip", []


def fs_characterization_case(k: int, n: int):
    m = (k - 1) * n
    image = {short_csp(p) for p in enumerate_catalan(n, k)}
    levelwise = {q for q in permutations(range(1, m + 1)) if is_short_csp(q, k)}
    if levelwise != image:
        extra = sorted(levelwise ^ image)[:1]
        return False, f"sets differ, e.g. {extra}", []
    return len(image) == fuss_catalan(n, k), f"{len(image)} permutations of length {m}", []


def type_oracle_case(k: int, total: int):
    census: Counter = Counter()
    for n in range(total // k + 1):
        if k * n + 1 <= total:
            census.update(type_census(n, k))
    coeffs = series.t_series_census(k, total, total)
    for t, c in census.items():
        if series.type_count(t, k) != c:
            return False, f"type {t}: census {c}, recurrence {series.type_count(t, k)}", []
    if coeffs != dict(census):
        diff = sorted(set(coeffs.items()) ^ set(census.items()))[:1]
        return False, f"generating function differs, e.g. {diff}", []
    return True, f"{len(census)} types", []


def cf_case(D: int):
    for r in range(1, 6):
        if series.continued_fraction_T2(r, D) != series.t_series(2, r, D):
            return False, f"continued fraction differs at r={r}", []
    if series.flajolet_series(D) != series.t_series(2, max(D, 1), D):
        return False, "Flajolet fraction differs", []
    return True, f"degree {D}", []


def continuant_case(k: int, n: int):
    rec = series.continuant_poly(k, n)
    mat = series.continuant_matrix(k, series.symbolic_args(n), series.one(n), series.MultiPoly(n))
    blk = series.block_deletion_expansion(k, n)
    if not (rec == mat[0] == blk):
        return False, "recurrence, matrix and block-deletion forms differ", []
    ones = series.continuant_ones(k, n)
    ok = all(ones[m] == ones[m - 1] + ones[m - k] for m in range(k, n + 1))
    return ok, f"K_{{{k},{n}}}(1..1) = {ones[-1]}", []


def q_kc_case(k: int, r: int):
    pts = series.random_points(20, r, seed=1000 * k + r)
    ok = series.q_vs_continuant_check(k, r, pts) and series.t_continuant_check(k, r, pts)
    return ok, "20 random points", []


def orbit_genfun_case(name: str, N: int):
    cls = action.get_class(name)
    s = action.orbit_series(cls, N)
    echo = [f"O(x,y) [{name}]"] + ["  x^" + line for line in action.format_y_table(s.Oxy)]
    if not s.agrees():
        return False, "brute-force counts differ from the closed forms", echo
    ref = REFERENCE_OXY[name]
    for n, coeffs in enumerate(ref[:N], start=1):
        if s.Oxy[n] != action.y_poly(coeffs):
            return False, f"x^{n} coefficient {s.Oxy[n]} differs from reference", echo
    if name == "short-csp":
        bad = [n for n in range(1, N + 1) if s.O[n] != fuss_catalan(n - 1, 2)]
        if bad:
            return False, f"orbit count is not C(n-1) at n={bad[0]}", echo
    if action.find_incompatibility(cls, min(N, 7)) is not None:
        return False, "class is not compatible with the action", echo
    return True, f"P, O, P(x,y), O(x,y) agree through x^{N}", echo


def build_cases(suite: str, N: int) -> list[Case]:
    if suite == "all":
        return [c for s in SUITES for c in build_cases(s, N)]
    half = max(1, N // 2)
    if suite == "raney":
        return [Case(f"raney k={k} n={n}", raney_case, (k, n))
                for k, top in ((2, N), (3, half), (4, half)) for n in range(top + 1)]
    if suite == "chung-feller":
        return [Case(f"chung-feller n={n}", chung_feller_case, (n,)) for n in range(N + 1)]
    if suite == "huq":
        return [Case(f"huq k={k} n={n}", huq_case, (k, n))
                for k, top in ((2, N), (3, 2 * N // 3), (4, N // 2)) for n in range(top + 1)]
    if suite == "injectivity":
        return [Case(f"injectivity k={k} n={n}", injectivity_case, (k, n))
                for k, top in ((2, N), (3, half), (4, half)) for n in range(top + 1)]
    if suite == "fs-characterization":
        return [Case(f"fs-characterization k={k} n={n}", fs_characterization_case, (k, n))
                for k in (2, 3, 4) for n in range(1, N // (k - 1) + 1)]
    if suite == "type-oracle":
        cases = [Case(f"type-oracle k={k} points<={N}", type_oracle_case, (k, N)) for k in (2, 3)]
        return cases + [Case(f"continued-fraction degree<={min(N, 8)}", cf_case, (min(N, 8),))]
    if suite == "continuant":
        cases = [Case(f"continuant k={k} n={n}", continuant_case, (k, n))
                 for k in (2, 3, 4) for n in range(N + 1)]
        return cases + [Case(f"q-continuant k={k} r={r}", q_kc_case, (k, r))
                        for k in (2, 3, 4) for r in range(1, min(N, 8) + 1)]
    if suite == "orbit-genfun":
        return [Case(f"orbit-genfun {name} n<={N}", orbit_genfun_case, (name, N)) for name in ("short-csp", "all")]
    raise ValueError(f"unknown suite {suite!r}")


def _run(case: Case) -> Result:
    try:
        ok, detail, echo = case.fn(*case.args)
    except Exception as exc:  # a crash is a failed case, reported with its cause
        return Result(case.name, False, f"{type(exc).__name__}: {exc}")
    return Result(case.name, bool(ok), detail, list(echo))


def run_suite(suite: str, N: int, workers: int | None = None) -> list[Result]:
    cases = build_cases(suite, N)
    if workers is None:
        workers = max(1, int(os.environ.get("CS_LAB_THREADS", "1") or 1))
    if workers <= 1:
        return [_run(c) for c in cases]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(_run, cases))
