"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v``; the summary lines are
written straight to the terminal regardless of capture settings.
"""

import subprocess
import sys
import time
import timeit
from collections import Counter
from itertools import permutations

import pytest

from cslab import action, series
from cslab.lattice import (
    LatticePath,
    enumerate_bridges,
    enumerate_catalan,
    fuss_catalan,
    steps_above_axis,
    up_steps_below_axis,
)
from cslab.poly import MultiPoly, one
from cslab.spitzer import full_csp, is_short_csp, reconstruct, short_csp, type_census

K4_PATH = LatticePath(4, "UUUUDUUUUUDUD", "augmented")


@pytest.fixture
def report(capsys):
    def emit(num, title, ok, elapsed, limit):
        ok = bool(ok) and elapsed < limit
        status = "PASS" if ok else "FAIL"
        with capsys.disabled():
            print(f"\n[acceptance {num:2d}] {status} {title} ({elapsed * 1000:.3f} ms, limit {limit * 1000:g} ms)")
        assert ok, f"criterion {num} failed"

    return emit


def test_01_worked_k4_example(report):
    want_full = (3, 5, 8, 11, 2, 4, 7, 10, 12, 13, 6, 9, 1)
    want_short = (2, 4, 7, 1, 3, 6, 8, 9, 5)
    path = LatticePath(4, K4_PATH.steps[1:])
    ok = full_csp(K4_PATH) == want_full and short_csp(path) == want_short

    def both():
        full_csp(K4_PATH)
        short_csp(path)

    per_call = min(timeit.repeat(both, number=20, repeat=5)) / 20
    report(1, "worked k=4 path: full and short permutations", ok, per_call, 0.001)


def test_02_raney(report):
    t = time.perf_counter()
    ok = all(
        sum(1 for _ in enumerate_catalan(n, k)) == fuss_catalan(n, k)
        for k, top in ((2, 10), (3, 5), (4, 5))
        for n in range(top + 1)
    )
    report(2, "Raney counts", ok, time.perf_counter() - t, 10)


def test_03_chung_feller(report):
    t = time.perf_counter()
    ok = True
    for n in range(9):
        c = Counter(steps_above_axis(p) for p in enumerate_bridges(n, 2))
        ok &= dict(c) == {2 * r: fuss_catalan(n, 2) for r in range(n + 1)}
    report(3, "Chung-Feller uniformity", ok, time.perf_counter() - t, 30)


def test_04_huq(report):
    t = time.perf_counter()
    ok = True
    for k, top in ((2, 6), (3, 4), (4, 3)):
        for n in range(top + 1):
            c = Counter(up_steps_below_axis(p) for p in enumerate_bridges(n, k))
            ok &= dict(c) == {r: fuss_catalan(n, k) for r in range((k - 1) * n + 1)}
    report(4, "Huq uniformity", ok, time.perf_counter() - t, 60)


def test_05_roundtrip(report):
    t = time.perf_counter()
    ok = True
    for k, top in ((2, 10), (3, 5), (4, 5)):
        for n in range(top + 1):
            seen = set()
            for p in enumerate_catalan(n, k):
                s = short_csp(p)
                ok &= s not in seen and reconstruct(s, k) == p
                seen.add(s)
    report(5, "reconstruct(short_csp(p)) = p", ok, time.perf_counter() - t, 30)


def test_06_fs_characterization(report):
    t = time.perf_counter()
    ok = True
    for k in (2, 3, 4):
        for n in range(1, 8 // (k - 1) + 1):
            m = (k - 1) * n
            image = {short_csp(p) for p in enumerate_catalan(n, k)}
            found = {q for q in permutations(range(1, m + 1)) if is_short_csp(q, k)}
            ok &= found == image and len(found) == fuss_catalan(n, k)
    report(6, "Foata-Strehl characterization", ok, time.perf_counter() - t, 60)


def test_07_type_oracle(report):
    t = time.perf_counter()
    ok = True
    for k in (2, 3):
        census = Counter()
        for n in range(9 // k + 1):
            if k * n + 1 <= 9:
                census.update(type_census(n, k))
        ok &= all(series.type_count(v, k) == c for v, c in census.items())
        ok &= series.t_series_census(k, 9, 9) == dict(census)
    report(7, "type census = recurrence = generating function", ok, time.perf_counter() - t, 30)


def test_08_continuants(report):
    t = time.perf_counter()
    ok = True
    for k in (2, 3, 4):
        for n in range(11):
            rec = series.continuant_poly(k, n)
            mat = series.continuant_matrix(k, series.symbolic_args(n), one(n), MultiPoly(n))[0]
            ok &= rec == mat == series.block_deletion_expansion(k, n)
    ok &= series.continuant_ones(2, 8) == [1, 1, 2, 3, 5, 8, 13, 21, 34]
    ok &= series.continuant_ones(3, 8) == [1, 1, 1, 2, 3, 4, 6, 9, 13]
    report(8, "continuant forms agree", ok, time.perf_counter() - t, 5)


def test_09_q_continuant_numeric(report):
    pts = {(k, r): series.random_points(20, r, seed=1000 * k + r) for k in (2, 3, 4) for r in range(1, 9)}
    t = time.perf_counter()
    ok = all(series.q_vs_continuant_check(k, r, p, tol=1e-9) for (k, r), p in pts.items())
    report(9, "Q_k as a continuant at random points", ok, time.perf_counter() - t, 1)


def test_10_continued_fractions(report):
    t = time.perf_counter()
    ok = True
    for D in range(1, 9):
        for r in range(1, 9):
            ok &= series.continued_fraction_T2(r, D) == series.t_series(2, r, D)
        ok &= series.flajolet_series(D) == series.t_series(2, D, D)
    report(10, "continued fraction and Flajolet expansions", ok, time.perf_counter() - t, 5)


def test_11_orbits(report):
    y = action.y_poly
    want = {
        "short-csp": [y([1]), y([0, 1]), y([1, 0, 1]), y([2, 2, 0, 1]), y([6, 4, 3, 0, 1]), y([18, 13, 6, 4, 0, 1])],
        "all": [y([1]), y([0, 1]), y([2, 0, 1]), y([8, 4, 0, 1]), y([48, 16, 6, 0, 1]), y([328, 100, 24, 8, 0, 1])],
    }
    t = time.perf_counter()
    short = action.orbit_series(action.ShortCSP(), 9)
    full = action.orbit_series(action.AllPerms(), 8)
    ok = all(short.O[n] == fuss_catalan(n - 1, 2) for n in range(1, 10))
    ok &= [short.Oxy[n] for n in range(1, 7)] == want["short-csp"]
    ok &= [full.Oxy[n] for n in range(1, 7)] == want["all"]
    ok &= short.agrees() and full.agrees()
    report(11, "orbit counts and O(x,y) closed forms", ok, time.perf_counter() - t, 120)


CLI_MATRIX = [
    ["count", "--k", "2", "--n", "3"],
    ["enumerate", "--k", "3", "--n", "3", "--format", "json"],
    ["enumerate", "--k", "2", "--n", "3", "--bridges", "--format", "csv"],
    ["count", "--k", "3", "--n", "3", "--by-type"],
    ["count", "--k", "2", "--n", "5", "--by-above-axis"],
    ["perm", "--k", "4", "--path", "UUUUDUUUUUDUD"],
    ["perm", "--reconstruct", "--k", "4", "--perm", "2,4,7,1,3,6,8,9,5"],
    ["types", "--k", "4", "--vec", "3,2,3,3,1,1"],
    ["genfun", "--k", "2", "--r", "4", "--deg", "6"],
    ["genfun", "--continuant", "--k", "3", "--n", "12", "--ones"],
    ["orbits", "--class", "all", "--n", "5", "--members"],
    ["orbits", "--class", "short-csp", "--n", "6", "--series", "--deg", "6"],
    ["verify", "--suite", "orbit-genfun", "--max", "6"],
]


def test_12_determinism(report, tmp_path):
    t = time.perf_counter()
    ok = True
    for argv in CLI_MATRIX:
        runs = [
            subprocess.run([sys.executable, "-m", "cslab", *argv], capture_output=True, cwd=tmp_path)
            for _ in range(2)
        ]
        ok &= runs[0].returncode == 0 and runs[0].stdout == runs[1].stdout and runs[0].stdout != b""
    report(12, "CLI output byte-identical across runs", ok, time.perf_counter() - t, 10)
