"""
Where the missing numbers are
=============================

A small table of R(h, 4) lower-bound sets, with the sizes the explicit
families already guarantee marked.
"""

from sumsets import SearchConfig, search_range
from sumsets.constructions import family_members

N = 48
for h in range(2, 6):
    found = search_range(SearchConfig(h, 4, N))
    fam = {m.size for m in family_members(h, 4)}
    row = []
    for t in range(found.sizes[0], found.sizes[-1] + 1):
        if t in fam:
            row.append(f"{t}*")
        elif t in found.sizes:
            row.append(str(t))
        else:
            row.append("_")
    print(f"h={h}: " + " ".join(row))
print("* = produced by an explicit family, _ = not found up to N =", N)
