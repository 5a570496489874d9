import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sumsets.core import (
    AffineMap,
    CapacityError,
    IntegerSet,
    SumsetValue,
    canonical_form,
    hfold_sumset,
    is_arithmetic_progression,
    is_bh_set,
    max_size,
    min_size,
    normalize,
    sumset_size,
)

int_sets = st.sets(st.integers(-60, 60), min_size=1, max_size=6).map(IntegerSet)
small_h = st.integers(0, 5)


def test_integer_set_sorts_and_dedups():
    assert IntegerSet([3, 1, 3, 2]).elements == (1, 2, 3)


@pytest.mark.parametrize("text, expected", [
    ("{0,1,3}", (0, 1, 3)),
    (" { 5 , -2,0 } ", (-2, 0, 5)),
    ("{7}", (7,)),
])
def test_parse(text, expected):
    A = IntegerSet.parse(text)
    assert A.elements == expected
    assert IntegerSet.parse(str(A)) == A


@pytest.mark.parametrize("bad", ["0,1,3", "{}", "{1,,2}", "{a}", "{1 2}"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        IntegerSet.parse(bad)


@pytest.mark.parametrize("A, norm, lam, mu", [
    ({3, 5, 9}, (0, 1, 3), 2, 3),
    ({0, 1, 2}, (0, 1, 2), 1, 0),
    ({10, 20, 30}, (0, 1, 2), 10, 10),
    ({-4}, (0,), 1, -4),
])
def test_normalize_examples(A, norm, lam, mu):
    B, f = normalize(IntegerSet(A))
    assert B.elements == norm
    assert (f.lam, f.mu) == (lam, mu)
    assert f(B) == IntegerSet(A)


@given(int_sets)
def test_normalize_idempotent(A):
    B, f = normalize(A)
    assert B.is_normalized()
    assert f.lam > 0
    B2, g = normalize(B)
    assert B2 == B and g.is_identity


def test_affine_map_rejects_zero():
    with pytest.raises(ValueError):
        AffineMap(0, 1)


@pytest.mark.parametrize("A, h, intervals, size", [
    ((0, 1, 2), 3, ((0, 6),), 7),
    ((0, 1, 3), 3, ((0, 7), (9, 9)), 9),
    ((0, 1, 4), 3, ((0, 6), (8, 9), (12, 12)), 10),
])
def test_hfold_small_examples(A, h, intervals, size):
    S = hfold_sumset(A, h)
    assert S.intervals == intervals
    assert S.cardinality == size


def test_hfold_zero_and_one():
    A = IntegerSet([0, 2, 7, 11])
    assert hfold_sumset(A, 0).elements() == [0]
    assert hfold_sumset(A, 1).elements() == list(A)


def test_hfold_rejects_negative_and_oversize():
    with pytest.raises(ValueError):
        hfold_sumset([-1, 0], 2)
    with pytest.raises(CapacityError):
        hfold_sumset([0, 1000], 100, capacity=10_000)


def test_ap_predicate():
    assert is_arithmetic_progression({0, 1, 2})
    assert not is_arithmetic_progression({0, 1, 3})
    assert is_arithmetic_progression({7})
    assert is_arithmetic_progression({3, 9})


def test_bh_predicate():
    assert is_bh_set({0, 1, 4}, 3)
    assert not is_bh_set({0, 1, 2}, 3)
    for h in range(1, 12):
        assert is_bh_set({0, 1}, h)


@pytest.mark.parametrize("A, canon", [
    ({0, 1, 3}, (0, 1, 3)),
    ({0, 2, 3}, (0, 1, 3)),
    ({0, 4, 5, 9}, (0, 4, 5, 9)),
    ({10, 14, 16}, (0, 1, 3)),
])
def test_canonical_form_examples(A, canon):
    assert canonical_form(A).elements == canon


@given(st.sets(st.integers(-40, 40), min_size=2, max_size=6).map(IntegerSet),
       st.integers(-5, 5).filter(bool), st.integers(-50, 50))
def test_canonical_form_is_class_invariant(A, lam, mu):
    C = canonical_form(A)
    assert canonical_form(C) == C
    assert canonical_form(AffineMap(lam, mu)(A)) == C


@settings(max_examples=200)
@given(int_sets, st.integers(-6, 6).filter(bool), st.integers(-100, 100), small_h)
def test_affine_invariance(A, lam, mu, h):
    B = AffineMap(lam, mu)(A)
    assert sumset_size(normalize(B)[0], h) == sumset_size(normalize(A)[0], h)


def test_minimum_characterization_exhaustive():
    for k in range(1, 6):
        for rest in itertools.combinations(range(1, 21), k - 1):
            A = IntegerSet((0,) + rest)
            if not A.is_normalized():
                continue
            ap = is_arithmetic_progression(A)
            assert sumset_size(A, 1) == k
            for h in range(2, 5):
                assert (sumset_size(A, h) == min_size(h, k)) == ap, (A, h)


@settings(max_examples=200)
@given(int_sets, st.integers(1, 5))
def test_bounds_and_monotonicity(A, h):
    k = len(A)
    s = sumset_size(A, h)
    assert min_size(h, k) <= s <= max_size(h, k)
    assert s <= sumset_size(A, h + 1)


@given(int_sets, small_h)
def test_reflection_invariance(A, h):
    assert sumset_size(A, h) == sumset_size(A.dilate(-1), h)


@given(st.sets(st.integers(0, 80), min_size=1, max_size=6).map(IntegerSet), small_h)
def test_interval_roundtrip(A, h):
    S = hfold_sumset(A, h)
    ivs = S.intervals
    assert all(v + 1 < u2 for (_, v), (u2, _) in zip(ivs, ivs[1:]))
    assert sum(v - u + 1 for u, v in ivs) == S.cardinality == int(S.membership().sum())
    assert SumsetValue.from_intervals(h, ivs, S.length) == S


@given(st.sets(st.integers(0, 80), min_size=1, max_size=6).map(IntegerSet), st.integers(1, 5))
def test_normalized_endpoints_present(A, h):
    A = normalize(A)[0]
    S = hfold_sumset(A, h)
    assert 0 in S and h * A.max in S


def test_max_size_is_binomial():
    assert max_size(3, 3) == math.comb(5, 3) == 10
