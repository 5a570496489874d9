"""Slow sumset computations straight from the composition definition.

Nothing here is optimized on purpose: these functions are the ground truth the
bit-vector kernel and the closed-form size formulas are checked against.
"""

from math import comb

from .core import IntegerSet, SumsetValue

DEFAULT_ENUMERATION_CAP = 10**8


class EnumerationCapError(OverflowError):
    pass


def composition_count(h, k):
    return comb(h + k - 1, k - 1)


def _check_cap(h, k, cap):
    n = composition_count(h, k)
    if n > cap:
        raise EnumerationCapError(f"{n} compositions of {h} into {k} parts exceeds cap {cap}")


def _compositions(h, k):
    if k == 1:
        yield (h,)
        return
    for last in range(h + 1):
        for head in _compositions(h - last, k - 1):
            yield head + (last,)


def enumerate_compositions(h, k, cap=DEFAULT_ENUMERATION_CAP):
    """Yield every (x_1, ..., x_k) >= 0 with sum h.

    Recurses on the last coordinate, so tuples come out ordered by
    (x_k, ..., x_1): ``(2, 0), (1, 1), (0, 2)`` for h = k = 2.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if h < 0:
        raise ValueError("h must be nonnegative")
    _check_cap(h, k, cap)
    return _compositions(h, k)


def sumset_by_definition(A, h, cap=DEFAULT_ENUMERATION_CAP, order=None):
    """hA as { x . a : x a composition of h into |A| parts }.

    ``order`` optionally permutes which element pairs with which coordinate;
    the result must not depend on it.
    """
    if not isinstance(A, IntegerSet):
        A = IntegerSet(A)
    a = list(A)
    if order is not None:
        a = [a[i] for i in order]
    sums = set()
    for x in enumerate_compositions(h, len(a), cap):
        sums.add(sum(xj * aj for xj, aj in zip(x, a)))
    lo = min(sums)
    if lo < 0:
        raise ValueError("oracle output is bit-indexed; use nonnegative sets")
    return SumsetValue.from_elements(h, sums, h * A.max + 1)


def interval_set_I(h, k, cap=DEFAULT_ENUMERATION_CAP):
    """{ sum_{j>=2} (j-1) x_j : x in X_{h,k} } by enumeration."""
    if h < 1 or k < 1:
        raise ValueError("h and k must be positive")
    return IntegerSet(
        sum((j - 1) * x[j - 1] for j in range(2, k + 1))
        for x in enumerate_compositions(h, k, cap)
    )
