"""Exit criteria.  Each test records one PASS/FAIL line, shown in the summary."""

import itertools
import math
import random
import time

import pytest

from sumsets import atlas
from sumsets.cli import main
from sumsets.constructions import (
    ProgressionOfIntervalsSpec,
    TwoIntervalSpec,
    ap_interval_of_sizes,
    build_progression_of_intervals,
    build_two_interval,
    members_from_progressions,
    members_from_two_intervals,
    predicted_size_progression,
    predicted_size_two_interval,
    progression_sumset_intervals,
)
from sumsets.core import SumsetValue, hfold_sumset, sumset_size
from sumsets.oracle import interval_set_I, sumset_by_definition
from sumsets.rangeset import SearchConfig, completeness_bound, search_range, verify_structure


def _search(h, k, N, jobs=1):
    return search_range(SearchConfig(h, k, N, jobs=jobs))


def _serialize(result):
    return atlas.dumps([atlas.entry_from_result(result)])


def _triangular(h):
    return sorted({math.comb(h + 2, 2) - math.comb(ell, 2) for ell in range(1, h + 1)})


@pytest.fixture(scope="module")
def runs():
    """Complete searches of criteria 1-3, single-threaded, with timings."""
    out = {}
    pairs = [(3, 3)] + [(2, k) for k in range(3, 9)] + [(h, 3) for h in range(3, 9)]
    for h, k in pairs:
        if (h, k) in out:
            continue
        t = time.perf_counter()
        r = _search(h, k, completeness_bound(h, k))
        out[(h, k)] = (r, time.perf_counter() - t)
    return out


def test_c1_r33_exact(criterion, capsys, runs):
    t = time.perf_counter()
    code = main(["range", "3", "3", "--complete", "--no-cache"])
    elapsed = time.perf_counter() - t
    first = capsys.readouterr().out.splitlines()[0]
    r, _ = runs[(3, 3)]
    ok = (code == 0 and first == "{7, 9, 10}; missing: 8; complete" and r.sizes == (7, 9, 10)
          and r.search_bound == 575 and r.complete and elapsed < 10.0)
    criterion(1, ok, f"R(3,3) = {list(r.sizes)}, N = 575, {elapsed:.2f}s (limit 10s)")
    assert ok


def test_c2_r2k_interval(criterion, runs):
    total = 0.0
    bad = []
    for k in range(3, 9):
        r, dt = runs[(2, k)]
        total += dt
        want = tuple(range(2 * k - 1, math.comb(k + 1, 2) + 1))
        if r.sizes != want or r.missing() or not r.complete or r.search_bound != 2**k - 1:
            bad.append(k)
    ok = not bad and total < 120.0
    criterion(2, ok, f"k in [3,8], failing {bad}, {total:.2f}s (limit 120s)")
    assert ok


def test_c3_rh3_triangular(criterion, runs):
    total = 0.0
    bad = []
    for h in range(3, 9):
        r, dt = runs[(h, 3)]
        total += dt
        if list(r.sizes) != _triangular(h) or not r.complete or r.search_bound != 4 * (4 * h) ** 2 - 1:
            bad.append(h)
    ok = not bad and total < 600.0
    criterion(3, ok, f"h in [3,8], failing {bad}, {total:.2f}s (limit 600s)")
    assert ok


def test_c4_progression_grid(criterion):
    n = bad = 0
    for a in range(1, 5):
        for ell in range(1, 5):
            for b in range(a, (a - 1) * 6 + 5):
                spec = ProgressionOfIntervalsSpec(a, ell, b)
                A = build_progression_of_intervals(spec)
                for h in range(1, 7):
                    n += 1
                    S = hfold_sumset(A, h)
                    Q = SumsetValue.from_intervals(h, progression_sumset_intervals(spec, h), S.length)
                    if predicted_size_progression(spec, h) != S.cardinality or Q.bits != S.bits:
                        bad += 1
    criterion(4, bad == 0, f"{n} cases, {bad} mismatches (size and structure)")
    assert bad == 0


def test_c5_two_interval_grid(criterion):
    n = bad = boundary = 0
    for a in range(1, 6):
        for c in range(a):
            for b in range(a + 1, 34):
                spec = TwoIntervalSpec(a, b, c)
                A = build_two_interval(spec)
                for h in range(2, 7):
                    n += 1
                    boundary += b in (h * a, h * a + 1)
                    if predicted_size_two_interval(spec, h) != sumset_size(A, h):
                        bad += 1
    ok = bad == 0 and boundary > 0
    criterion(5, ok, f"{n} cases ({boundary} on b = ha or ha+1), {bad} mismatches")
    assert ok


def test_c6_weighted_sum_interval(criterion):
    bad = [(h, k) for h in range(1, 9) for k in range(1, 7)
           if list(interval_set_I(h, k)) != list(range((k - 1) * h + 1))]
    criterion(6, not bad, f"48 (h, k) pairs, mismatches {bad}")
    assert not bad


def test_c7_oracle_equivalence(criterion):
    n = bad = 0
    for k in range(1, 6):
        for rest in itertools.combinations(range(1, 17), k - 1):
            A = (0,) + rest
            if k > 1 and math.gcd(*rest) != 1:
                continue
            for h in range(0, 6):
                n += 1
                bad += hfold_sumset(A, h).bits != sumset_by_definition(A, h).bits
    rng = random.Random(20240601)
    for _ in range(10_000):
        k = rng.randint(2, 7)
        A = [0] + rng.sample(range(1, 500), k - 1)
        h = rng.randint(1, 6)
        n += 1
        bad += hfold_sumset(A, h).bits != sumset_by_definition(A, h).bits
    criterion(7, bad == 0, f"{n} cases (exhaustive + 10000 random), {bad} mismatches")
    assert bad == 0


def test_c8_structural_facts(criterion, runs):
    results = [r for r, _ in runs.values()]
    results += [_search(h, k, 64) for h, k in [(3, 4), (4, 4), (3, 5)]]
    bad = []
    for r in results:
        rep = verify_structure(r)
        s = rep.summary()
        h, k = r.h, r.k
        ok = rep.ok and r.sizes[0] == h * k - h + 1
        ok = ok and not set(range(h * k - h + 2, h * k)) & set(r.sizes) and h * k in r.sizes
        if r.complete:
            ok = ok and r.sizes[-1] == math.comb(h + k - 1, h) and s["max"] == "pass"
        if not ok:
            bad.append((h, k))
    criterion(8, not bad, f"{len(results)} results, failing {bad}")
    assert not bad


def test_c9_family_witnesses(criterion):
    failures = []
    for h in range(2, 9):
        try:
            p4 = {m.size for m in members_from_progressions(h, 4)}
            t4 = {m.size for m in members_from_two_intervals(h, 4)}
            if (h + 1) ** 2 not in t4:
                failures.append(("(h+1)^2", h))
            if not {b * h + 1 for b in range(3, h + 3)} <= p4:
                failures.append(("bh+1", h))
            for k in range(3, 9):
                mem = members_from_two_intervals(h, k)
                members_from_progressions(h, k)
                sizes = {m.size for m in mem}
                if h * k not in sizes:
                    failures.append(("hk", h, k))
                if k <= 6:
                    lo, hi = ap_interval_of_sizes(h, k)
                    if not set(range(lo, hi + 1)) <= sizes:
                        failures.append(("AP interval", h, k))
        except AssertionError as exc:  # FamilyMember re-verification failed
            failures.append(("kernel", h, str(exc)))
    criterion(9, not failures, f"h in [2,8], failures {failures}")
    assert not failures


def test_c10_determinism(criterion, runs):
    bad = []
    for (h, k), (r, _) in sorted(runs.items()):
        par = _search(h, k, completeness_bound(h, k), jobs=8)
        if _serialize(par) != _serialize(r):
            bad.append((h, k))
    criterion(10, not bad, f"{len(runs)} searches at jobs=1 vs jobs=8, differing {bad}")
    assert not bad


def test_complete_r34_out_of_reach(criterion):
    r = _search(3, 4, 64)
    ok = not r.complete and completeness_bound(3, 4) == 6911 and r.search_bound < 6911
    criterion("limit", ok, "R(3,4) at N=64 reported complete=false (bound 6911 not searched)")
    assert ok
