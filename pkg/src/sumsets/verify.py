"""Self-check suite behind ``sumsets verify``.

Each check returns ``(name, ok, detail)``.  The quick profile finishes in a
few seconds; ``quick=False`` widens the grids to the acceptance sizes.
"""

import itertools
import random

from .constructions import (
    ProgressionOfIntervalsSpec,
    TwoIntervalSpec,
    build_progression_of_intervals,
    build_two_interval,
    family_members,
    predicted_size_progression,
    predicted_size_two_interval,
)
from .core import hfold_sumset, sumset_size
from .oracle import interval_set_I, sumset_by_definition
from .rangeset import SearchConfig, closed_form_sizes, completeness_bound, search_range, verify_structure


def _kernel_vs_oracle(top, kmax, hmax):
    bad = 0
    n = 0
    for k in range(1, kmax + 1):
        for rest in itertools.combinations(range(1, top + 1), k - 1):
            A = (0,) + rest
            for h in range(hmax + 1):
                n += 1
                if hfold_sumset(A, h).bits != sumset_by_definition(A, h).bits:
                    bad += 1
    return bad == 0, f"{n} cases, {bad} mismatches"


def _random_kernel_vs_oracle(count, seed=1):
    rng = random.Random(seed)
    bad = 0
    for _ in range(count):
        k = rng.randint(2, 6)
        A = [0] + rng.sample(range(1, 200), k - 1)
        h = rng.randint(1, 6)
        if hfold_sumset(A, h).bits != sumset_by_definition(A, h).bits:
            bad += 1
    return bad == 0, f"{count} random cases, {bad} mismatches"


def _weighted_sums(hmax, kmax):
    bad = [(h, k) for h in range(1, hmax + 1) for k in range(1, kmax + 1)
           if list(interval_set_I(h, k)) != list(range((k - 1) * h + 1))]
    return not bad, f"mismatches {bad}"


def _progression_grid(hmax):
    bad = 0
    n = 0
    for a in range(1, 5):
        for ell in range(1, 5):
            for b in range(a, (a - 1) * hmax + 5):
                spec = ProgressionOfIntervalsSpec(a, ell, b)
                A = build_progression_of_intervals(spec)
                for h in range(1, hmax + 1):
                    n += 1
                    bad += predicted_size_progression(spec, h) != sumset_size(A, h)
    return bad == 0, f"{n} cases, {bad} mismatches"


def _two_interval_grid(hmax):
    bad = 0
    n = 0
    for a in range(1, 6):
        for c in range(a):
            for b in range(a + 1, 34):
                spec = TwoIntervalSpec(a, b, c)
                A = build_two_interval(spec)
                for h in range(2, hmax + 1):
                    n += 1
                    bad += predicted_size_two_interval(spec, h) != sumset_size(A, h)
    return bad == 0, f"{n} cases, {bad} mismatches"


def _search_matches_closed_form(pairs):
    bad = []
    for h, k in pairs:
        res = search_range(SearchConfig(h, k, completeness_bound(h, k)))
        if not res.complete or list(res.sizes) != closed_form_sizes(h, k):
            bad.append((h, k))
        elif not verify_structure(res).ok:
            bad.append((h, k))
    return not bad, f"{len(pairs)} pairs, failing {bad}"


def _members(hmax):
    n = 0
    for h in range(2, hmax + 1):
        for k in range(3, 7):
            n += len(family_members(h, k))
    return True, f"{n} members kernel-verified"


def run_checks(quick=True):
    hmax = 4 if quick else 6
    checks = [
        ("kernel-vs-oracle", lambda: _kernel_vs_oracle(10 if quick else 16, 4 if quick else 5,
                                                       4 if quick else 5)),
        ("kernel-vs-oracle-random", lambda: _random_kernel_vs_oracle(300 if quick else 10000)),
        ("weighted-sum-interval", lambda: _weighted_sums(8, 6)),
        ("progression-formula", lambda: _progression_grid(hmax)),
        ("two-interval-formula", lambda: _two_interval_grid(hmax)),
        ("search-vs-closed-form", lambda: _search_matches_closed_form(
            [(3, 3), (2, 4), (2, 5), (4, 3)] if quick else
            [(3, 3)] + [(2, k) for k in range(3, 9)] + [(h, 3) for h in range(3, 9)])),
        ("family-members", lambda: _members(hmax)),
    ]
    out = []
    for name, fn in checks:
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failed check, not a crashed report
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append((name, ok, detail))
    return out
