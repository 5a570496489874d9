"""Sumset size range sets R(h, k): closed forms, exhaustive search, checks.

The search visits canonical sets shard by shard, one shard per diameter
``m = max(A)``, smallest diameter first.  Results of a run at bound N are
therefore a prefix of the run at N + 1, witnesses are the smallest sets under
``(max, lexicographic)`` order, and a run can stop early as soon as every
value between the proven minimum and maximum has been hit.
"""

from __future__ import annotations

import json
import logging
import math
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from pathlib import Path

import numpy as np

from . import __version__
from . import _kernel
from .constructions import family_members
from .core import DEFAULT_CAPACITY, INT64_MAX, CapacityError, IntegerSet, max_size, min_size, sumset_size

log = logging.getLogger(__name__)


class InconsistencyError(RuntimeError):
    """Two sources that should agree on R(h, k) do not."""


class CheckpointMismatchError(RuntimeError):
    pass


@dataclass
class SearchConfig:
    h: int
    k: int
    N: int
    jobs: int = 1
    progress_interval: int = 0
    stop_when_saturated: bool = True
    capacity: int = DEFAULT_CAPACITY

    def __post_init__(self):
        if self.h < 1 or self.k < 1:
            raise ValueError("h and k must be positive")
        if self.N < self.k - 1:
            raise ValueError(f"no {self.k}-subset of [0,{self.N}] exists (need N >= k-1)")
        if self.jobs < 1:
            raise ValueError("jobs must be positive")


@dataclass
class RangeResult:
    h: int
    k: int
    witnesses: dict
    complete: bool
    source: str
    search_bound: int | None = None
    examined: int = 0
    last_shard: int | None = None
    extra_sizes: frozenset = field(default_factory=frozenset)

    @property
    def sizes(self):
        """Achieved sizes; witnesses may be absent for closed-form entries."""
        return tuple(sorted(set(self.witnesses) | set(self.extra_sizes)))

    def missing(self):
        s = self.sizes
        if not s:
            return []
        present = set(s)
        return [t for t in range(s[0], s[-1] + 1) if t not in present]

    def validate(self):
        """Re-check bounds and recompute every witness with the kernel."""
        lo, hi = min_size(self.h, self.k), max_size(self.h, self.k)
        for t in self.sizes:
            if not lo <= t <= hi:
                raise InconsistencyError(f"size {t} outside [{lo},{hi}] for h={self.h} k={self.k}")
        for t, w in self.witnesses.items():
            if len(w) != self.k:
                raise InconsistencyError(f"witness {w} for size {t} has {len(w)} elements")
            got = sumset_size(w, self.h)
            if got != t:
                raise InconsistencyError(f"witness {w}: |{self.h}A| = {got}, recorded as {t}")
        return self


def completeness_bound(h, k):
    """Smallest N for which searching [0, N] provably finds all of R(h, k)."""
    if h < 1 or k < 1:
        raise ValueError("h and k must be positive")
    if h == 1 or k <= 2:
        return k - 1
    if h == 2:
        n = 2**k - 1
    else:
        n = 4 * (4 * h) ** (k - 1) - 1
    if n > INT64_MAX:
        raise OverflowError(f"completeness bound for h={h} k={k} exceeds int64")
    return n


def _search_is_complete(h, k, N):
    if h == 1 or k <= 2:
        return True
    try:
        return N >= completeness_bound(h, k)
    except OverflowError:
        return False


def _composition_matrix(h, k):
    rows = []
    for combo in combinations_with_replacement(range(k), h):
        row = [0] * k
        for j in combo:
            row[j] += 1
        rows.append(row)
    return np.array(rows, dtype=np.int64).reshape(len(rows), k)


def _pick_method(h, k, m, ncomp):
    dense = (k - 1) * sum((i * m) // 64 + 1 for i in range(1, h)) + h * m // 64 + 1
    sparse = ncomp * (k + 2 * max(1, math.log2(max(ncomp, 2))))
    return _kernel.DENSE if dense * 4 <= sparse else _kernel.SPARSE


def _better(w, cur):
    return cur is None or w.witness_key() < cur.witness_key()


def _merge_witnesses(into, wit):
    for t, w in wit.items():
        if _better(w, into.get(t)):
            into[t] = w


class _Checkpoint:
    """Prefix checkpoint: merged witnesses for shards below ``next_shard``."""

    def __init__(self, path, config):
        self.path = Path(path)
        self.key = {"h": config.h, "k": config.k, "N": config.N, "version": __version__}
        self.last_write = 0.0

    def load(self):
        if not self.path.exists():
            return None
        data = json.loads(self.path.read_text())
        if data.get("key") != self.key:
            raise CheckpointMismatchError(
                f"checkpoint {self.path} was written for {data.get('key')}, not {self.key}"
            )
        wit = {int(t): IntegerSet(e) for t, e in data["witnesses"].items()}
        return wit, data["examined"], data["next_shard"]

    def save(self, wit, examined, next_shard, force=False):
        now = time.monotonic()
        if not force and now - self.last_write < 2.0:
            return
        self.last_write = now
        data = {
            "key": self.key,
            "next_shard": next_shard,
            "examined": examined,
            "witnesses": {str(t): list(w) for t, w in sorted(wit.items())},
        }
        tmp = self.path.with_suffix(self.path.suffix + ".tmp")
        tmp.write_text(json.dumps(data, sort_keys=True))
        os.replace(tmp, self.path)


def _run_shard(h, k, m, X, maxsize):
    method = _pick_method(h, k, m, X.shape[0])
    wit, examined = _kernel.scan_shard(h, k, m, X, method, maxsize)
    found = {}
    for t in np.flatnonzero(wit[:, 0] >= 0).tolist():
        found[t] = IntegerSet(wit[t].tolist())
    return found, int(examined)


def search_range(config, checkpoint=None):
    """Exhaustive canonical search of k-sets inside [0, N]."""
    h, k, N = config.h, config.k, config.N
    if h * N + 1 > config.capacity:
        raise CapacityError(f"sumset span {h * N + 1} exceeds capacity {config.capacity}")
    lo, hi = min_size(h, k), max_size(h, k)
    if hi > INT64_MAX:
        raise OverflowError(f"binom({h + k - 1},{h}) exceeds int64")
    if k == 1:
        return RangeResult(h, k, {1: IntegerSet([0])}, True, "search", N, 1, 0)

    wit = {}
    examined = 0
    first = k - 1
    ckpt = _Checkpoint(checkpoint, config) if checkpoint else None
    if ckpt is not None:
        state = ckpt.load()
        if state is not None:
            wit, examined, first = state
            log.info("resuming h=%d k=%d at shard %d", h, k, first)

    X = _composition_matrix(h, k)
    saturated = len(wit) == hi - lo + 1
    last = first - 1
    next_report = config.progress_interval
    window = max(1, 2 * config.jobs)
    pool = ThreadPoolExecutor(config.jobs) if config.jobs > 1 else None
    try:
        m = first
        while m <= N and not (saturated and config.stop_when_saturated):
            shards = list(range(m, min(N, m + window - 1) + 1))
            if pool is None:
                results = [_run_shard(h, k, s, X, hi) for s in shards]
            else:
                results = list(pool.map(lambda s: _run_shard(h, k, s, X, hi), shards))
            for s, (found, n) in zip(shards, results):
                _merge_witnesses(wit, found)
                examined += n
                last = s
                saturated = len(wit) == hi - lo + 1
                if saturated and config.stop_when_saturated:
                    break
            m = last + 1
            if ckpt is not None:
                ckpt.save(wit, examined, m)
            if config.progress_interval and examined >= next_report:
                log.info("h=%d k=%d: shard %d/%d, %d sets, %d sizes",
                         h, k, last, N, examined, len(wit))
                next_report = examined + config.progress_interval
    finally:
        if pool is not None:
            pool.shutdown()
    if ckpt is not None:
        ckpt.save(wit, examined, last + 1, force=True)

    complete = saturated or _search_is_complete(h, k, N)
    return RangeResult(h, k, dict(sorted(wit.items())), complete, "search", N, examined, last)


def sample_range(h, k, N, count, seed):
    """Sizes of ``count`` random normalized k-subsets of [0, N]; never complete.

    The k-term progression [0, k-1] is always included so the minimum is hit.
    """
    if N < k - 1:
        raise ValueError("need N >= k-1")
    rng = random.Random(seed)
    wit = {}
    candidates = [IntegerSet(range(k))]
    for _ in range(count):
        candidates.append(IntegerSet([0] + rng.sample(range(1, N + 1), k - 1)))
    for A in candidates:
        t = sumset_size(A, h)
        if _better(A, wit.get(t)):
            wit[t] = A
    return RangeResult(h, k, dict(sorted(wit.items())), False, "sample", N, len(candidates))


def closed_form_sizes(h, k):
    """R(h, k) where it is known in closed form, else None."""
    if h < 1 or k < 1:
        raise ValueError("h and k must be positive")
    if k == 1:
        return [1]
    if k == 2:
        return [h + 1]
    if h == 1:
        return [k]
    if h == 2:
        return list(range(2 * k - 1, math.comb(k + 1, 2) + 1))
    if k == 3:
        top = math.comb(h + 2, 2)
        return sorted({top - math.comb(ell, 2) for ell in range(1, h + 1)})
    return None


def closed_form_range(h, k, search_witnesses=False):
    """Complete RangeResult from the known formulas, or None for h >= 3, k >= 4.

    Witnesses come from the explicit families; with ``search_witnesses`` the
    remaining ones are filled in by a saturating search within the
    completeness bound.
    """
    sizes = closed_form_sizes(h, k)
    if sizes is None:
        return None
    wanted = set(sizes)
    wit = {}
    if k == 1:
        wit[1] = IntegerSet([0])
    elif k == 2 or h == 1:
        wit[sizes[0]] = IntegerSet(range(k))
    else:
        for mem in family_members(h, k):
            if mem.size not in wanted:
                raise InconsistencyError(f"family size {mem.size} not in closed form R({h},{k})")
            if _better(mem.witness, wit.get(mem.size)):
                wit[mem.size] = mem.witness
    if search_witnesses and len(wit) < len(wanted):
        found = search_range(SearchConfig(h, k, completeness_bound(h, k))).witnesses
        _merge_witnesses(wit, {t: w for t, w in found.items() if t in wanted})
    extra = frozenset(wanted - set(wit))
    return RangeResult(h, k, dict(sorted(wit.items())), True, "closed-form", None,
                       extra_sizes=extra)


@dataclass
class Check:
    name: str
    status: str  # "pass" | "fail" | "skip"
    detail: str = ""


@dataclass
class StructureReport:
    h: int
    k: int
    checks: list
    missing: list

    @property
    def ok(self):
        return all(c.status != "fail" for c in self.checks)

    def failures(self):
        return [c for c in self.checks if c.status == "fail"]

    def summary(self):
        return {c.name: c.status for c in self.checks}


def verify_structure(result):
    """Check a result against the proven structural facts about R(h, k)."""
    h, k = result.h, result.k
    sizes = result.sizes
    if not sizes:
        raise ValueError("empty result")
    present = set(sizes)
    lo, hi = min_size(h, k), max_size(h, k)
    general = h >= 3 and k >= 3
    checks = []

    def add(name, cond, detail, applies=True):
        if not applies:
            checks.append(Check(name, "skip", detail))
        else:
            checks.append(Check(name, "pass" if cond else "fail", detail))

    add("min", sizes[0] == lo, f"min {sizes[0]}, expected {lo}")
    add("max", sizes[-1] == hi, f"max {sizes[-1]}, expected {hi}", applies=result.complete)
    add("bounds", lo <= sizes[0] and sizes[-1] <= hi, f"sizes within [{lo},{hi}]")
    gap = [t for t in range(h * k - h + 2, h * k) if t in present]
    add("gap-empty", not gap, f"sizes in [{h * k - h + 2},{h * k - 1}]: {gap}", applies=general)
    add("hk-present", h * k in present, f"hk = {h * k}", applies=h >= 2 and k >= 3)
    add("first-missing", h * k - h + 2 not in present, f"hk-h+2 = {h * k - h + 2}",
        applies=general)
    return StructureReport(h, k, checks, result.missing())


def merge(closed, searched, constructed=()):
    """Union of a closed form, a search result and family members."""
    parts = [r for r in (closed, searched) if r is not None]
    if not parts:
        raise ValueError("nothing to merge")
    h, k = parts[0].h, parts[0].k
    for r in parts:
        if (r.h, r.k) != (h, k):
            raise ValueError("merge inputs disagree on (h, k)")
    complete_sets = [set(r.sizes) for r in parts if r.complete]
    for s in complete_sets[1:]:
        if s != complete_sets[0]:
            raise InconsistencyError(
                f"complete results for h={h} k={k} disagree: {sorted(complete_sets[0] ^ s)}"
            )
    wit = {}
    extra = set()
    for r in parts:
        _merge_witnesses(wit, r.witnesses)
        extra |= set(r.extra_sizes)
    for mem in constructed:
        if (mem.h, mem.k) != (h, k):
            raise ValueError("family member for a different (h, k)")
        if complete_sets and mem.size not in complete_sets[0]:
            raise InconsistencyError(f"family size {mem.size} missing from complete R({h},{k})")
        _merge_witnesses(wit, {mem.size: mem.witness})
    extra -= set(wit)
    if len(parts) == 1 and not constructed:
        return parts[0]
    bound = searched.search_bound if searched is not None else None
    return RangeResult(
        h, k, dict(sorted(wit.items())), bool(complete_sets), "merged", bound,
        searched.examined if searched is not None else 0,
        searched.last_shard if searched is not None else None,
        frozenset(extra),
    )
