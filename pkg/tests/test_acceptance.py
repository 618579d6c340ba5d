"""Acceptance gate: one test per criterion, each recording a PASS/FAIL line.

The lines are printed in the "acceptance criteria" section at the end of a
pytest run.  Thresholds and runtimes are the criteria's own; nothing here is
relaxed to make a check pass.
"""

import math
import time

import numpy as np
import pytest

from hartogs import kernel, lowerbound, schur, specfun

GAMMA_IDS = ("recurrence", "reflection", "duplication")
HYP_TOLS = {"gauss_sum": 1e-10, "euler_transform": 1e-12, "integral_rep": 1e-8, "derivative": 1e-6}


def _fmt_pct(x: float) -> str:
    return f"{100 * x:+.2f}%"


def test_ac01_gamma_identities(criterion):
    t0 = time.perf_counter()
    reps = {r.check_id: r for r in specfun.identity_suite(n_gamma=200, seed=0, tol={k: 1e-11 for k in GAMMA_IDS})}
    dt = time.perf_counter() - t0
    gam = [reps[f"identity.{k}"] for k in GAMMA_IDS]
    ok = all(r.passed for r in gam) and dt < 1.0
    worst = max(r.discrepancy for r in gam)
    criterion(1, ok, f"gamma recurrence/reflection/duplication on 200 args: max rel {worst:.1e} < 1e-11", dt)
    assert ok


def test_ac02_hypergeometric_identities(criterion):
    t0 = time.perf_counter()
    reps = {r.check_id: r for r in specfun.identity_suite(tol=HYP_TOLS)}
    dt = time.perf_counter() - t0
    hyp = [reps[f"identity.{k}"] for k in HYP_TOLS]
    ok = all(r.passed for r in hyp) and dt < 10.0
    parts = ", ".join(f"{k} {reps[f'identity.{k}'].discrepancy:.1e}" for k in HYP_TOLS)
    criterion(2, ok, f"2F1 identities: {parts}", dt)
    assert ok


def test_ac03_torus_identity(criterion):
    t0 = time.perf_counter()
    reps = [schur.torus_identity_check(a, r2) for a in (0.5, 0.75, 1.0) for r2 in (0.0, 0.25, 0.5, 0.81)]
    closed_gap = max(abs(r.computed - r.details["closed"]) for r in reps if "closed" in r.details)
    dt = time.perf_counter() - t0
    worst = max(abs(r.computed - r.reference) / r.reference for r in reps)
    ok = all(r.passed for r in reps) and closed_gap < 1e-8 and dt < 5.0
    criterion(3, ok, f"circle mean vs F(a,a;1;|z|^2) on 3x4 grid: max rel {worst:.1e}; a=1 vs 1/(1-|z|^2) {closed_gap:.1e}", dt)
    assert ok


def test_ac04_forelli_rudin_supremum(criterion):
    t0 = time.perf_counter()
    reps = [schur.forelli_rudin_sup(c, t, 8) for c, t in ((1.0, 0.0), (0.5, 0.5), (1.5, -0.5))]
    spots = (
        abs(schur.forelli_rudin_closed(1.0, 0.0) - 4 / math.pi) < 1e-12
        and abs(schur.forelli_rudin_closed(0.5, 0.5) - 2.0) < 1e-12
        and abs(schur.forelli_rudin_closed(1.5, -0.5) - 2.0) < 1e-12
    )
    dt = time.perf_counter() - t0
    ok = all(r.passed for r in reps) and spots and dt < 60.0
    parts = ", ".join(f"(c,t)=({r.inputs['c']:g},{r.inputs['t']:g}) {_fmt_pct(r.details['relative_gap'])}" for r in reps)
    criterion(4, ok, f"disk supremum on |z|=1-2^-k, k<=8, vs closed form (1%): {parts}; spot values 4/pi, 2 {'ok' if spots else 'bad'}", dt)
    assert ok


def test_ac05_schur_integral(criterion):
    t0 = time.perf_counter()
    grid = schur.I_grid_check(tol=1e-7)
    sups = [schur.schur_sup_estimate(t, 10, tol=0.05) for t in (0.6, 0.75, 0.9)]
    mono = [schur.monotone_g_check(t) for t in (0.6, 0.8)]
    dt = time.perf_counter() - t0
    ok = grid.passed and all(r.passed for r in sups) and all(r.passed for r in mono) and dt < 300.0
    parts = ", ".join(f"t={r.inputs['t']:g} {_fmt_pct(r.details['relative_gap'])}" for r in sups)
    criterion(
        5, ok,
        f"I closed vs numeric {grid.computed:.1e}; sup vs pi^2/sin^2(pi t) at depth 10: {parts} "
        f"(nondecreasing: {all(r.details['monotone'] for r in sups)}); monotone g t=0.6,0.8: {all(r.passed for r in mono)}",
        dt,
    )
    assert ok


def test_ac06_series_identity(criterion):
    t0 = time.perf_counter()
    rep = lowerbound.lemma24_check(tol=1e-7)
    dt = time.perf_counter() - t0
    has_p3 = any(case[:4] == (2.0, -1.0 / 3.0, 1.0, 0.0) for case in lowerbound.LEMMA24_CASES)
    ok = rep.passed and has_p3 and len(lowerbound.LEMMA24_CASES) >= 5 and dt < 30.0
    criterion(6, ok, f"series vs disk quadrature on 5 sets incl. (2,-1/3,1,0): max rel {rep.computed:.1e}", dt)
    assert ok


def test_ac07_decomposition_and_bounded_parts(criterion):
    t0 = time.perf_counter()
    coef = [lowerbound.coefficient_identity_check(p, K=51, tol=1e-12) for p in (2.5, 3.0)]
    sups = [lowerbound.lemma25_sup_check(p, xi_grid=lowerbound.DEFAULT_XI_GRID) for p in (2.5, 3.0)]
    dt = time.perf_counter() - t0
    ok = all(r.passed for r in coef) and all(r.passed for r in sups) and dt < 60.0
    parts = "; ".join(
        f"p={r.inputs['p']:g} growth Psi {_fmt_pct(r.details['increase']['Psi'])} "
        f"Upsilon {_fmt_pct(r.details['increase']['Upsilon'])}"
        for r in sups
    )
    criterion(
        7, ok,
        f"coefficient identity k<=50 max {max(r.computed for r in coef):.1e}; "
        f"running sup growth over last grid points (< 5%): {parts}",
        dt,
    )
    assert ok


def test_ac08_reproducing_property(criterion):
    t0 = time.perf_counter()
    reps = [kernel.reproduce_check(kernel.MonomialIndex(j, k), tol=1e-6) for j, k in ((0, 0), (0, -1), (1, -1), (2, 1))]
    ann = kernel.annihilation_check(tol=1e-6)
    dt = time.perf_counter() - t0
    ok = all(r.passed for r in reps) and ann.passed and dt < 120.0
    criterion(8, ok, f"P z^m = z^m on 5 points: max err {max(r.computed for r in reps):.1e}; |P conj(w1)| {ann.computed:.1e}", dt)
    assert ok


def test_ac09_bound_arithmetic(criterion):
    t0 = time.perf_counter()
    reps = {r.check_id: r for r in schur.bounds_checks(n_samples=100, seed=0, tol=1e-6)}
    rows = schur.bounds_table([2.0, 3.0])
    dt = time.perf_counter() - t0
    ok = all(r.passed for r in reps.values())
    ok = ok and abs(rows[1].lower - 4 * math.pi**2 / 27) <= 1e-6 and abs(rows[1].upper - 4 * math.pi**2 / 3) <= 1e-6
    ok = ok and rows[0].lower == 1.0 and math.isinf(rows[0].upper)
    criterion(
        9, ok,
        f"lower(3)={rows[1].lower:.10f} (4pi^2/27), upper(3)={rows[1].upper:.10f} (4pi^2/3); "
        f"p<->q asymmetry {reps['bounds.symmetry'].computed:.1e}; lower<upper on 100 p; p=2 exact norm 1",
        dt,
    )
    assert ok


def test_ac10_lower_bound_ratio(criterion):
    t0 = time.perf_counter()
    r3 = lowerbound.ratio_path(3.0, 6, tol=0.10)
    r2 = lowerbound.ratio_path(2.0, 6, tol=1e-6)
    dt = time.perf_counter() - t0
    seq = r3.details["sequence"]
    ok = r3.passed and r2.passed and dt < 600.0
    criterion(
        10, ok,
        f"p=3 depth 6 ratio {seq[-1]:.4f} vs 4pi^2/27 {r3.reference:.4f} ({_fmt_pct(r3.details['relative_gap'])}, need 10%), "
        f"last three nondecreasing {r3.details['monotone_last3']}, below upper {max(seq) < schur.upper_bound(3.0)}; "
        f"p=2 max |ratio-1| {max(abs(x - 1) for x in r2.details['sequence']):.1e}",
        dt,
    )
    assert ok


def test_ac11_remainder_trend(criterion):
    t0 = time.perf_counter()
    trend, per_depth = lowerbound.remainder_trend(3.0, (4, 5, 6, 7), factor=0.5)
    dt = time.perf_counter() - t0
    identity = max(abs(r.computed - 1.0) for r in per_depth)
    decreasing = all(trend.details["decreasing"].values())
    ok = trend.passed and all(r.passed for r in per_depth) and dt < 600.0
    criterion(
        11, ok,
        f"eight remainder ratios, depth 4->7: all decreasing {decreasing}, worst final/initial "
        f"{trend.computed:.3f} (need < 0.5); Phi.Phi identity {identity:.1e}",
        dt,
    )
    assert ok


def test_ac12_schur_premises(criterion):
    t0 = time.perf_counter()
    reps = [r for p in (2.5, 3.0) for r in schur.schur_premise_check(p, n_points=20, slack=0.02)]
    dt = time.perf_counter() - t0
    ok = all(r.passed for r in reps)
    parts = ", ".join(f"{r.check_id.split('.', 1)[1]} max ratio {r.computed:.3g}" for r in reps)
    criterion(12, ok, f"Schur inequalities at 20 points with C(2/p)(1+2%): {parts}", dt)
    assert ok


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
