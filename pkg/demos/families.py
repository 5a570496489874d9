"""
Explicit families and their predicted sizes
===========================================

Progressions of intervals and two-interval sets have closed-form sumset
sizes.  Here the formulas are compared with the kernel on a sweep of b.
"""

from sumsets import (
    ProgressionOfIntervalsSpec,
    TwoIntervalSpec,
    build_progression_of_intervals,
    build_two_interval,
    predicted_size_progression,
    predicted_size_two_interval,
    sumset_size,
)

h = 3

# A = {0, b} + [0, 1]; the sizes climb by h until the blocks of hA separate
print("progression a=2 l=2")
for b in range(2, 10):
    spec = ProgressionOfIntervalsSpec(2, 2, b)
    A = build_progression_of_intervals(spec)
    print(f"  b={b:2d}  {str(A):<14} predicted {predicted_size_progression(spec, h):3d}"
          f"  kernel {sumset_size(A, h):3d}")

# A = [0, 2] U {b}
print("two-interval a=2 c=0")
for b in range(3, 9):
    spec = TwoIntervalSpec(2, b, 0)
    A = build_two_interval(spec)
    print(f"  b={b:2d}  {str(A):<14} predicted {predicted_size_two_interval(spec, h):3d}"
          f"  kernel {sumset_size(A, h):3d}")
