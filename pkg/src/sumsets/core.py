"""Finite integer sets, affine normalization and the h-fold sumset kernel.

Sumsets are held as dense bit-vectors (Python ints, bit ``n`` set iff ``n`` is
a member), so ``S + a`` is a single shift and ``S + A`` a handful of ORs.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property

import numpy as np

DEFAULT_CAPACITY = 1 << 26
INT64_MAX = (1 << 63) - 1


class CapacityError(OverflowError):
    """A bit-vector would exceed the configured size limit."""


@dataclass(frozen=True)
class IntegerSet:
    """Sorted, deduplicated finite set of integers."""

    elements: tuple

    def __init__(self, elements=()):
        elems = tuple(sorted({int(x) for x in elements}))
        object.__setattr__(self, "elements", elems)

    @classmethod
    def parse(cls, text):
        """Parse ``{n1,n2,...}``; whitespace allowed, negatives accepted."""
        m = re.fullmatch(r"\s*\{\s*(.*?)\s*\}\s*", text)
        if m is None:
            raise ValueError(f"malformed set literal: {text!r}")
        body = m.group(1)
        if not body:
            raise ValueError("empty set literal")
        try:
            values = [int(tok) for tok in body.split(",")]
        except ValueError:
            raise ValueError(f"malformed set literal: {text!r}") from None
        return cls(values)

    @classmethod
    def interval(cls, lo, hi):
        return cls(range(lo, hi + 1))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.elements

    def __getitem__(self, i):
        return self.elements[i]

    def __str__(self):
        return "{" + ",".join(map(str, self.elements)) + "}"

    def __repr__(self):
        return f"IntegerSet({str(self)})"

    @property
    def min(self):
        return self.elements[0]

    @property
    def max(self):
        return self.elements[-1]

    def gaps(self):
        e = self.elements
        return tuple(e[i + 1] - e[i] for i in range(len(e) - 1))

    def dilate(self, lam):
        return IntegerSet(lam * x for x in self.elements)

    def translate(self, mu):
        return IntegerSet(x + mu for x in self.elements)

    def is_normalized(self):
        if not self.elements or self.elements[0] != 0:
            return False
        return len(self) == 1 or math.gcd(*self.elements) == 1

    def witness_key(self):
        """Ordering used whenever one witness must be preferred over another."""
        return (self.max, self.elements)


@dataclass(frozen=True)
class AffineMap:
    """x -> lam * x + mu, lam nonzero."""

    lam: int = 1
    mu: int = 0

    def __post_init__(self):
        if self.lam == 0:
            raise ValueError("affine map needs a nonzero dilation")

    def __call__(self, A):
        return IntegerSet(self.lam * x + self.mu for x in A)

    @property
    def is_identity(self):
        return self.lam == 1 and self.mu == 0


IDENTITY = AffineMap(1, 0)


def normalize(A):
    """Return ``(A', f)`` with ``A == f(A')``, min A' = 0 and gcd A' = 1.

    >>> normalize(IntegerSet([3, 5, 9]))
    (IntegerSet({0,1,3}), AffineMap(lam=2, mu=3))
    """
    if not isinstance(A, IntegerSet):
        A = IntegerSet(A)
    if len(A) == 0:
        raise ValueError("cannot normalize the empty set")
    mu = A.min
    shifted = [x - mu for x in A]
    g = math.gcd(*shifted) or 1
    return IntegerSet(x // g for x in shifted), AffineMap(g, mu)


def canonical_form(A):
    """Representative of the affine class of ``A`` (reflections included).

    Both ``A`` and ``-A`` are normalized; the one with the lexicographically
    smaller gap sequence wins.
    """
    if not isinstance(A, IntegerSet):
        A = IntegerSet(A)
    if len(A) < 2:
        raise ValueError("canonical_form needs at least two elements")
    fwd, _ = normalize(A)
    rev, _ = normalize(A.dilate(-1))
    return fwd if fwd.gaps() <= rev.gaps() else rev


def is_arithmetic_progression(A):
    if not isinstance(A, IntegerSet):
        A = IntegerSet(A)
    return len(set(A.gaps())) <= 1


@dataclass(frozen=True)
class SumsetValue:
    """An h-fold sumset as a membership bit-vector over ``[0, length)``."""

    h: int
    bits: int
    length: int

    @cached_property
    def cardinality(self):
        return self.bits.bit_count()

    def __len__(self):
        return self.cardinality

    def __contains__(self, n):
        return 0 <= n < self.length and (self.bits >> n) & 1 == 1

    def membership(self):
        """Dense boolean array of length ``self.length``."""
        nbytes = (self.length + 7) // 8
        raw = np.frombuffer(self.bits.to_bytes(nbytes, "little"), dtype=np.uint8)
        return np.unpackbits(raw, bitorder="little")[: self.length].astype(bool)

    def elements(self):
        return np.flatnonzero(self.membership()).tolist()

    @cached_property
    def intervals(self):
        """Maximal disjoint intervals ``(u, v)``, sorted."""
        m = self.membership().astype(np.int8)
        edges = np.diff(np.concatenate(([0], m, [0])))
        starts = np.flatnonzero(edges == 1)
        stops = np.flatnonzero(edges == -1) - 1
        return tuple(zip(starts.tolist(), stops.tolist()))

    def format_intervals(self):
        return " ".join(f"[{u},{v}]" for u, v in self.intervals)

    @classmethod
    def from_intervals(cls, h, intervals, length):
        bits = 0
        for u, v in intervals:
            bits |= ((1 << (v - u + 1)) - 1) << u
        return cls(h, bits, length)

    @classmethod
    def from_elements(cls, h, elements, length=None):
        elements = list(elements)
        if length is None:
            length = max(elements) + 1
        bits = 0
        for x in elements:
            bits |= 1 << x
        return cls(h, bits, length)


def _bitset(A):
    bits = 0
    for a in A:
        bits |= 1 << a
    return bits


def hfold_sumset(A, h, capacity=DEFAULT_CAPACITY):
    """h-fold sumset of a set of nonnegative integers by shift-and-or."""
    if not isinstance(A, IntegerSet):
        A = IntegerSet(A)
    if len(A) == 0:
        raise ValueError("sumset of the empty set")
    if h < 0:
        raise ValueError("h must be nonnegative")
    if A.min < 0:
        raise ValueError("kernel needs nonnegative elements; translate first")
    length = h * A.max + 1
    if length > capacity:
        raise CapacityError(f"sumset span {length} exceeds capacity {capacity}")
    if h == 0:
        return SumsetValue(0, 1, 1)
    S = _bitset(A)
    for _ in range(h - 1):
        T = 0
        for a in A:
            T |= S << a
        S = T
    return SumsetValue(h, S, length)


def sumset_size(A, h, capacity=DEFAULT_CAPACITY):
    """|hA| for any finite integer set (translated to start at 0 first)."""
    if not isinstance(A, IntegerSet):
        A = IntegerSet(A)
    if A.min != 0:
        A = A.translate(-A.min)
    return hfold_sumset(A, h, capacity).cardinality


def min_size(h, k):
    return h * k - h + 1


def max_size(h, k):
    return math.comb(h + k - 1, h)


def is_bh_set(A, h):
    if not isinstance(A, IntegerSet):
        A = IntegerSet(A)
    target = max_size(h, len(A))
    if target > INT64_MAX:
        raise OverflowError(f"binom({h + len(A) - 1},{h}) exceeds int64")
    return sumset_size(A, h) == target
