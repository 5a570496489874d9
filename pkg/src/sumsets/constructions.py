"""Explicit set families with closed-form h-fold sumset sizes.

Two families are covered:

* progressions of intervals, ``A = {0, b, ..., (l-1)b} + [0, a-1]``;
* two intervals of different lengths, ``A = [0, a] U [b, b+c]`` with c < a < b.

All arithmetic is integer; every halving is asserted exact.
"""

from dataclasses import dataclass

from .core import IntegerSet, sumset_size


class InvalidSpecError(ValueError):
    pass


def _half(n):
    assert n % 2 == 0, f"expected an even numerator, got {n}"
    return n // 2


@dataclass(frozen=True)
class ProgressionOfIntervalsSpec:
    a: int
    ell: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.ell < 1 or self.b < 1:
            raise InvalidSpecError("a, l and b must be positive")
        if self.a > self.b:
            raise InvalidSpecError(f"requires a <= b (got a={self.a}, b={self.b})")

    @property
    def k(self):
        return self.a * self.ell


@dataclass(frozen=True)
class TwoIntervalSpec:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.c < 0:
            raise InvalidSpecError("requires c >= 0")
        if self.c >= self.a:
            raise InvalidSpecError(
                f"requires c < a (got a={self.a}, c={self.c}); reduce mirrored sets first"
            )
        if self.b <= self.a:
            raise InvalidSpecError(f"requires a < b (got a={self.a}, b={self.b})")

    @property
    def k(self):
        return self.a + self.c + 2


@dataclass(frozen=True)
class FamilyMember:
    """A size in R(h, k) with a witness set; validated against the kernel."""

    h: int
    size: int
    witness: IntegerSet
    provenance: str

    def __post_init__(self):
        got = sumset_size(self.witness, self.h)
        if got != self.size:
            raise AssertionError(
                f"{self.provenance}: |{self.h}*{self.witness}| = {got}, claimed {self.size}"
            )

    @property
    def k(self):
        return len(self.witness)


def build_progression_of_intervals(spec):
    return IntegerSet(j * spec.b + i for j in range(spec.ell) for i in range(spec.a))


def progression_sumset_intervals(spec, h):
    """The predicted structure of hA: ``b*[0, h(l-1)] + [0, h(a-1)]`` as raw blocks."""
    return [(j * spec.b, j * spec.b + h * (spec.a - 1)) for j in range(h * (spec.ell - 1) + 1)]


def predicted_size_progression(spec, h):
    a, ell, b = spec.a, spec.ell, spec.b
    if h < 1:
        raise ValueError("h must be positive")
    if b <= (a - 1) * h + 1:
        return (a + b * (ell - 1) - 1) * h + 1
    return (a - 1) * (ell - 1) * h * h + (a + ell - 2) * h + 1


def build_two_interval(spec):
    return IntegerSet(list(range(spec.a + 1)) + list(range(spec.b, spec.b + spec.c + 1)))


def reduce_two_interval(a, b, c):
    """Reflect ``[0,a] U [b,b+c]`` (a < c) onto ``[0,c] U [b+c-a, b+c]``."""
    if not 0 <= a < c:
        raise InvalidSpecError(f"reduction expects 0 <= a < c (got a={a}, c={c})")
    if b <= a:
        raise InvalidSpecError(f"requires a < b (got a={a}, b={b})")
    return TwoIntervalSpec(a=c, b=b + c - a, c=a)


def two_interval_i0(spec, h):
    """floor((ha - b) / (a - c)): last i where L_i and L_{i+1} still overlap.

    Can exceed h - 1 when b <= hc; every block then overlaps the next.
    """
    return (h * spec.a - spec.b) // (spec.a - spec.c)


def two_interval_blocks(spec, h):
    """The h + 1 blocks L_i = [ib, ha + i(b - a + c)] whose union is hA."""
    a, b, c = spec.a, spec.b, spec.c
    return [(i * b, h * a + i * (b - a + c)) for i in range(h + 1)]


def predicted_size_two_interval(spec, h):
    a, b, c = spec.a, spec.b, spec.c
    if h < 2:
        raise ValueError("two-interval formula needs h >= 2")
    if b > h * a:
        return _half((h + 1) * (2 + h * (a + c)))
    # i0 >= h means no block is separated; hA = [0, h(b+c)] is the i0 = h-1 case
    i0 = min(two_interval_i0(spec, h), h - 1)
    return (i0 + 1) * b + (h - i0) * (h * a + 1) - _half((h + i0 + 1) * (h - i0) * (a - c))


def _divisors(k):
    return [d for d in range(1, k + 1) if k % d == 0]


def _dedup(members):
    best = {}
    for m in members:
        cur = best.get(m.size)
        if cur is None or m.witness.witness_key() < cur.witness.witness_key():
            best[m.size] = m
    return [best[s] for s in sorted(best)]


def members_from_progressions(h, k):
    """Sizes from every factorization k = a*l of the progression family."""
    if h < 1 or k < 1:
        raise ValueError("h and k must be positive")
    out = []
    for a in _divisors(k):
        ell = k // a
        for b in range(a, (a - 1) * h + 2):
            spec = ProgressionOfIntervalsSpec(a, ell, b)
            size = (ell - 1) * h * b + (a - 1) * h + 1
            assert size == predicted_size_progression(spec, h)
            out.append(FamilyMember(h, size, build_progression_of_intervals(spec),
                                    f"progression a={a} l={ell} b={b}"))
        spec = ProgressionOfIntervalsSpec(a, ell, h * (a - 1) + 2)
        out.append(FamilyMember(h, predicted_size_progression(spec, h),
                                build_progression_of_intervals(spec),
                                f"progression a={a} l={ell} b={spec.b} (separated)"))
    return _dedup(out)


def members_from_two_intervals(h, k):
    """Sizes of ``[0, k-2] U {b}`` over every b, grouped as in the (i0, r) split."""
    if h < 2 or k < 3:
        raise ValueError("two-interval members need h >= 2 and k >= 3")
    a = k - 2
    out = []
    far = TwoIntervalSpec(a, h * a + 1, 0)
    out.append(FamilyMember(h, _half((h + 1) * (2 + h * a)), build_two_interval(far),
                            f"two-interval b={far.b} (separated)"))
    for i0 in range(h - 1):
        for r in range(k - 2):
            b = (h - i0) * a - r
            spec = TwoIntervalSpec(a, b, 0)
            assert two_interval_i0(spec, h) == i0
            size = (i0 + 1) * b + (h - i0) * (h * a + 1) - _half((h + i0 + 1) * (h - i0) * a)
            assert size == predicted_size_two_interval(spec, h)
            out.append(FamilyMember(h, size, build_two_interval(spec),
                                    f"two-interval b={b} i0={i0} r={r}"))
    hk = TwoIntervalSpec(a, k, 0)
    out.append(FamilyMember(h, h * k, build_two_interval(hk), "two-interval b=k (size hk)"))
    return _dedup(out)


def ap_interval_of_sizes(h, k):
    """Integer interval of sizes guaranteed by the i0 = 0 row of the two-interval family."""
    top = _half(h * h * (k - 2) + h * k)
    return top - k + 3, top


def family_members(h, k):
    """All family members for (h, k), deduplicated by size."""
    members = members_from_progressions(h, k)
    if h >= 2 and k >= 3:
        members += members_from_two_intervals(h, k)
    return _dedup(members)
