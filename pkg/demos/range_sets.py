"""
Exhaustive range sets R(h, k)
=============================

Search every canonical k-set inside [0, N], then check the result against
the known structure: minimum hk-h+1, the empty gap below hk, hk itself.
"""

from sumsets import SearchConfig, completeness_bound, search_range, verify_structure

for h, k in [(3, 3), (4, 3), (2, 6)]:
    N = completeness_bound(h, k)
    r = search_range(SearchConfig(h, k, N))
    print(f"R({h},{k}) with N={N}: {list(r.sizes)}  missing {r.missing()}  complete={r.complete}")

# R(3,4) is not known in closed form; a bounded search gives verified members only
r = search_range(SearchConfig(3, 4, 64))
rep = verify_structure(r)
print("R(3,4) up to N=64:", list(r.sizes), "missing", rep.missing, "complete", r.complete)
for c in rep.checks:
    print(f"  {c.name:<14} {c.status}")
