"""Acceptance suite.

One test per criterion, each printing a single PASS/FAIL line (visible with
``pytest -s`` or in the captured output).  Tolerances are fixed here, not
calibrated: exact integer equality for counting identities, closed-form
relative error bounds for volumes, and the stated desk-scale windows for the
asymptotic checks.
"""

import itertools
import math
import random
import time

import numpy as np
import pytest

from anisob import (
    ConstantFamily,
    ExpFamily,
    LogFamily,
    PowerFamily,
    approximation_number,
    bridge_korobov_to_sobolev,
    bridge_sobolev_to_korobov,
    classify,
    classify_standard,
    complexity_sobolev,
    count,
    ellipsoid_log_volume,
    ellipsoid_volume,
    nth_smallest_weight,
    quasi_triangle_sides,
    sandwich_report,
    unit_ball_volume,
)
from conftest import box_count, make_pair, sorted_weights


def report(name, ok, detail=""):
    print(f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, f"{name}: {detail}"


def grid_sequences(d):
    ramp = [float(j) for j in range(1, d + 1)]
    return {
        "unit": ([1.0] * d, [1.0] * d),
        "ramp-a": (ramp, [1.0] * d),
        "ramp-b": ([1.0] * d, ramp),
    }


def test_criterion_1_bridge_exactness():
    t0 = time.perf_counter()
    # 20 geometric points strictly inside (1e-3, 0.99); the open endpoints
    # would park thresholds exactly on achieved integer weights
    eps_grid = [1e-3 * (0.99 / 1e-3) ** (i / 21.0) for i in range(1, 21)]
    checked = 0
    failures = []
    for omega in (0.1, 0.5, 0.9):
        for d in (1, 2, 3):
            for label, (a, b) in grid_sequences(d).items():
                seq = make_pair(a, b)
                for eps in eps_grid:
                    r1 = bridge_korobov_to_sobolev(seq, omega, eps)
                    r2 = bridge_sobolev_to_korobov(seq, omega, eps)
                    checked += 1
                    if not (r1.equal and r2.equal):
                        failures.append((omega, d, label, eps))
    elapsed = time.perf_counter() - t0
    report(
        "1 bridge-exactness",
        not failures and elapsed < 60.0,
        f"{checked} grid points, {len(failures)} mismatches, {elapsed:.1f}s",
    )


def _oracle_counts(a, b, thresholds):
    """Box-scan counts (non-strict, strict) for many thresholds at once.

    Weights are the plain left-to-right term sums, built from scalar Python
    arithmetic; numpy only sorts and searches, so comparisons stay bit-exact.
    """
    t_max = float(max(thresholds))
    tables = []
    for j in range(len(a)):
        km = 0
        while a[j] * (km + 1) ** (2 * b[j]) <= t_max:
            km += 1
        one_sided = [a[j] * k ** (2 * b[j]) for k in range(km + 1)]
        tables.append(np.array([one_sided[abs(k)] for k in range(-km, km + 1)]))
    thr = np.asarray(thresholds, dtype=np.float64)
    non_strict = np.zeros(len(thr), dtype=np.int64)
    strict = np.zeros(len(thr), dtype=np.int64)
    if len(tables) == 1:
        slabs = [tables[0]]
    else:
        slabs = (x0 + tables[1] for x0 in tables[0])
    for w in slabs:
        for t in tables[2:]:
            w = (w.reshape(-1, 1) + t).ravel()
        w = np.sort(w)
        non_strict += np.searchsorted(w, thr, side="right")
        strict += np.searchsorted(w, thr, side="left")
    return non_strict, strict


def test_criterion_2_counting_oracle():
    t0 = time.perf_counter()
    rng = random.Random(1107)
    thresholds = [0.5 * i for i in range(1, 201)]
    mismatches = 0
    for trial in range(10):
        d = trial % 3 + 1
        a = [rng.uniform(0.5, 4.0) for _ in range(d)]
        b = [rng.uniform(0.5, 3.0) for _ in range(d)]
        seq = make_pair(a, b)
        oracle_le, oracle_lt = _oracle_counts(a, b, thresholds)
        for i, threshold in enumerate(thresholds):
            if count(seq, threshold) != oracle_le[i]:
                mismatches += 1
            if count(seq, threshold, strict=True) != oracle_lt[i]:
                mismatches += 1
    elapsed = time.perf_counter() - t0
    report(
        "2 counting-oracle",
        mismatches == 0 and elapsed < 60.0,
        f"10 instances x 200 thresholds x 2 comparisons, "
        f"{mismatches} mismatches, {elapsed:.1f}s",
    )


def test_criterion_3_order_statistics_oracle():
    t0 = time.perf_counter()
    rng = random.Random(2203)
    bad = 0
    for d in (1, 2, 2, 3, 3):
        a = [rng.uniform(0.5, 4.0) for _ in range(d)]
        b = [rng.uniform(0.5, 3.0) for _ in range(d)]
        seq = make_pair(a, b)
        oracle = sorted_weights(a, b, 10 ** 4)
        heap_stream = []
        from anisob import enumerate_weights

        for w, mult in enumerate_weights(seq, 10 ** 4):
            heap_stream.extend([w] * mult)
        if heap_stream[: 10 ** 4] != oracle:
            bad += 1
        for n in (10 ** 2, 10 ** 3, 10 ** 4):
            if nth_smallest_weight(seq, n, method="bisect") != oracle[n - 1]:
                bad += 1
    elapsed = time.perf_counter() - t0
    report("3 order-statistics", bad == 0, f"5 instances, {bad} disagreements, {elapsed:.1f}s")


def test_criterion_4_strong_equivalence_desk_scale():
    t0 = time.perf_counter()
    seq1 = make_pair([1.0], [1.0])
    a_n = approximation_number(seq1, 2001)
    dev1 = abs(2001 * a_n / 2.0 - 1.0)

    seq2 = make_pair([1.0, 1.0], [1.0, 1.0])
    w = nth_smallest_weight(seq2, 10 ** 6)
    a_n2 = 1.0 / math.sqrt(1.0 + w)
    dev2 = abs(math.sqrt(10 ** 6) * a_n2 / math.sqrt(math.pi) - 1.0)
    elapsed = time.perf_counter() - t0
    report(
        "4 strong-equivalence",
        dev1 <= 1e-3 and dev2 <= 0.02,
        f"d=1 dev {dev1:.2e} (<=1e-3), d=2 dev {dev2:.2e} (<=0.02), {elapsed:.1f}s",
    )


def _sample_regulated(rng):
    """Random regulated instance whose level-20 count stays enumerable."""
    while True:
        d = rng.randint(1, 3)
        a = sorted(rng.uniform(0.5, 4.0) for _ in range(d))
        b = [rng.uniform(0.5, 3.0) for _ in range(d)]
        seq = make_pair(a, b)
        p = seq.quasi_norm_power()
        g = seq.decay_exponent()
        log_top = (p / (2.0 * g)) * math.log(20.0 + seq.shift_constant())
        if log_top + ellipsoid_log_volume(a, [2.0 * x for x in b]) < math.log(1e6):
            return seq


def test_criterion_5_sandwich():
    t0 = time.perf_counter()
    rng = random.Random(3301)
    violations = 0
    for _ in range(10):
        seq = _sample_regulated(rng)
        assert seq.is_regulated()
        for row in sandwich_report(seq, range(1, 21)):
            if not row.ok:
                violations += 1
    elapsed = time.perf_counter() - t0
    report("5 sandwich", violations == 0,
           f"10 instances x m=1..20, {violations} violations, {elapsed:.1f}s")


def test_criterion_6_volume_oracle():
    t0 = time.perf_counter()
    for d in range(1, 11):
        got = unit_ball_volume([1.0] * d)
        want = 2.0 ** d / math.factorial(d)
        assert abs(got - want) <= 1e-12 * want
        got = unit_ball_volume([2.0] * d)
        want = math.pi ** (d / 2.0) / math.gamma(1.0 + d / 2.0)
        assert abs(got - want) <= 1e-12 * want

    rng = np.random.default_rng(4409)
    worst = 0.0
    for trial in range(10):
        d = int(rng.integers(1, 5))
        a = rng.uniform(0.5, 4.0, d)
        p = rng.uniform(0.5, 3.0, d)
        t = float(rng.uniform(0.5, 4.0))
        vol = ellipsoid_volume(a, p, t)
        half = (t / a) ** (1.0 / p)
        box = float(np.prod(2.0 * half))
        n_total = 10 ** 7
        hits = 0
        chunk = 2 * 10 ** 6
        for _ in range(n_total // chunk):
            x = rng.uniform(-half, half, (chunk, d))
            s = np.zeros(chunk)
            for j in range(d):
                s += a[j] * np.abs(x[:, j]) ** p[j]
            hits += int((s <= t).sum())
        p_hat = hits / n_total
        estimate = p_hat * box
        se = box * math.sqrt(max(p_hat * (1.0 - p_hat), 1e-12) / n_total)
        sigmas = abs(vol - estimate) / se
        worst = max(worst, sigmas)
        assert sigmas <= 3.0, (trial, d, sigmas)
    elapsed = time.perf_counter() - t0
    report("6 volume-oracle", True,
           f"closed forms d<=10 at 1e-12; 10 MC specs, worst {worst:.2f} sigma, {elapsed:.1f}s")


def test_criterion_7_quasi_triangle():
    t0 = time.perf_counter()
    rng = np.random.default_rng(5501)
    n_draws = 10 ** 5
    dims = rng.integers(1, 6, n_draws)
    scales = rng.uniform(0.05, 5.0, (n_draws, 5))
    smooth = rng.uniform(0.1, 3.0, (n_draws, 5))
    xs = rng.uniform(-10.0, 10.0, (n_draws, 5))
    ys = rng.uniform(-10.0, 10.0, (n_draws, 5))
    violations = 0
    for i in range(n_draws):
        d = int(dims[i])
        seq = make_pair(scales[i, :d].tolist(), smooth[i, :d].tolist())
        lhs, rhs = quasi_triangle_sides(seq, xs[i, :d].tolist(), ys[i, :d].tolist())
        if lhs > rhs * (1.0 + 1e-12):
            violations += 1
    elapsed = time.perf_counter() - t0
    report("7 quasi-triangle", violations == 0,
           f"{n_draws} draws, {violations} violations, {elapsed:.1f}s")


# classifier fixture: family, expected verdicts, and the deciding condition.
# scaling rows are classified against the reference smoothness b_j = j**2
# (summable reciprocals, log-bounded partial sums); smoothness rows use the
# induced-scaling classifier.
_ST = [(2.0, 1.0), (2.0, 0.5), (1.0, 1.0), (3.0, 0.5), (0.5, 2.0)]
_T, _F = True, False
_CLASSIFIER_FIXTURE = [
    # label, mode, family, (SPT, PT, QPT, UWT, WT), st verdicts, deciding condition
    ("a_j = 1", "scaling", ConstantFamily(1.0),
     (_F, _F, _F, _F, _F), (_F, _F, _F, _T, _T),
     "lim a_j = 1 finite: every growth condition fails; max(s/2,t)>1 rows hold"),
    ("a_j = j**0.5", "scaling", PowerFamily(1.0, 0.5),
     (_F, _F, _F, _F, _F), (_T, _T, _F, _T, _T),
     "log a_j/j -> 0 and a_j/j -> 0, but a_j -> inf and a_j/log j -> inf"),
    ("a_j = j", "scaling", PowerFamily(1.0, 1.0),
     (_F, _F, _F, _F, _F), (_T, _T, _F, _T, _T),
     "lim a_j/j = 1 blocks WT; a_j/j**((2-s)/s) with s=1 is a_j/j = 1, not inf"),
    ("a_j = j**2", "scaling", PowerFamily(1.0, 2.0),
     (_F, _F, _F, _F, _T), (_T, _T, _T, _T, _T),
     "a_j/j -> inf gives WT; log a_j/log j = 2 < inf blocks UWT"),
    ("a_j = log(j+1)", "scaling", LogFamily(1.0, 1.0),
     (_F, _F, _F, _F, _F), (_T, _F, _F, _T, _T),
     "lim a_j/log j = 1 blocks the (2, t<1) row; a_j -> inf keeps (2,1)"),
    ("a_j = 2**j", "scaling", ExpFamily(1.0, 2.0),
     (_T, _T, _T, _T, _T), (_T, _T, _T, _T, _T),
     "sum 1/b_j < inf and liminf log(a_j)/j = log 2 > 0: SPT and everything below"),
    ("a_j = e**j", "scaling", ExpFamily(1.0, math.e),
     (_T, _T, _T, _T, _T), (_T, _T, _T, _T, _T),
     "liminf log(a_j)/j = 1 > 0"),
    ("b_j = j", "smoothness", PowerFamily(1.0, 1.0),
     (_F, _F, _T, _T, _T), (_T, _T, _T, _T, _T),
     "harmonic sum diverges (no SPT) but stays log-bounded (QPT); b_j/log j -> inf"),
    ("b_j = j**2", "smoothness", PowerFamily(1.0, 2.0),
     (_T, _T, _T, _T, _T), (_T, _T, _T, _T, _T),
     "sum 1/j**2 < inf: SPT for the induced scaling"),
    ("b_j = 2", "smoothness", ConstantFamily(2.0),
     (_F, _F, _F, _F, _F), (_F, _F, _F, _T, _T),
     "constant smoothness: partial sums grow linearly, induced scaling is constant"),
]


def test_criterion_8_classifier_fixture():
    t0 = time.perf_counter()
    reference_b = PowerFamily(1.0, 2.0)
    mismatches = []
    for label, mode, fam, expect_main, expect_st, note in _CLASSIFIER_FIXTURE:
        if mode == "scaling":
            result = classify(fam, reference_b, _ST)
        else:
            result = classify_standard(fam, _ST)
        main = {v["notion"]: v["holds"] for v in result["notions"] if "s" not in v}
        got_main = tuple(main[k] for k in ("SPT", "PT", "QPT", "UWT", "WT"))
        got_st = tuple(v["holds"] for v in result["notions"] if "s" in v)
        if got_main != expect_main or got_st != expect_st:
            mismatches.append((label, got_main, got_st, note))
    elapsed = time.perf_counter() - t0
    report("8 classifier-fixture", not mismatches,
           f"{len(_CLASSIFIER_FIXTURE)} families x {5 + len(_ST)} notions, "
           f"mismatches: {mismatches if mismatches else 'none'}, {elapsed:.1f}s")


def test_criterion_9_cross_definition_consistency():
    t0 = time.perf_counter()
    rng = random.Random(6607)
    bad = 0
    for _ in range(50):
        d = rng.randint(1, 3)
        a = [rng.uniform(0.5, 4.0) for _ in range(d)]
        b = [rng.uniform(0.6, 2.5) for _ in range(d)]
        seq = make_pair(a, b)
        eps = rng.uniform(0.08, 0.9)
        n = complexity_sobolev(seq, eps)
        # independent route: sort the weights, count widths above eps
        ws = sorted_weights(a, b, n + 5)
        widths = [1.0 / math.sqrt(1.0 + w) for w in ws]
        independent = sum(1 for v in widths if v > eps)
        minimal = widths[n] <= eps and (n == 0 or widths[n - 1] > eps)
        if n != independent or not minimal:
            bad += 1
    elapsed = time.perf_counter() - t0
    report("9 cross-definition", bad == 0, f"50 random queries, {bad} mismatches, {elapsed:.1f}s")
