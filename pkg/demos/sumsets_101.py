"""
h-fold sumsets in a few lines
=============================

Compute hA, look at its interval structure, and check it against the slow
composition-based definition.
"""

from sumsets import IntegerSet, hfold_sumset, normalize, sumset_by_definition

# the three 3-element sets that realise every size of 3A
for A in ({0, 1, 2}, {0, 1, 3}, {0, 1, 4}):
    S = hfold_sumset(A, 3)
    print(sorted(A), "->", S.format_intervals(), "size", S.cardinality)

# sizes do not care about affine maps; normalize() recovers the representative
B = IntegerSet([3, 5, 9])
rep, f = normalize(B)
print(B, "=", f.lam, "*", rep, "+", f.mu)

# the bit-vector kernel and the composition oracle agree
A = IntegerSet([0, 2, 7, 11, 12])
print(hfold_sumset(A, 4) == sumset_by_definition(A, 4))
