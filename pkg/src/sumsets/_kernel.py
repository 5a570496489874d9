"""Compiled inner loop of the exhaustive search.

One call scans a single shard: every canonical k-set with minimum 0 and
maximum ``m``.  Per set, |hA| is taken either from a word-level shift-or
bit-vector (cheap when h*m is small) or from the sorted list of all
composition sums (cheap when there are few compositions); the caller picks.
"""

import numpy as np
from numba import njit

DENSE = 0
SPARSE = 1


@njit(cache=True, inline="always")
def _popcount(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return (x * np.uint64(0x0101010101010101)) >> np.uint64(56)


@njit(cache=True)
def dense_size(A, h, S, T):
    """|hA| by shift-or on uint64 words; S, T are scratch of >= h*max/64+1 words."""
    k = A.shape[0]
    m = A[k - 1]
    nw = (h * m) // 64 + 1
    for w in range(nw):
        S[w] = 0
    for j in range(k):
        a = A[j]
        S[a >> 6] |= np.uint64(1) << np.uint64(a & 63)
    for i in range(1, h):
        span = (i * m) // 64 + 1
        top = ((i + 1) * m) // 64 + 1
        for w in range(span):
            T[w] = S[w]
        for w in range(span, top):
            T[w] = 0
        for j in range(1, k):
            a = A[j]
            q = a >> 6
            r = np.uint64(a & 63)
            if r == 0:
                for w in range(span):
                    T[w + q] |= S[w]
            else:
                rr = np.uint64(64) - r
                for w in range(span):
                    v = S[w]
                    if v != 0:
                        T[w + q] |= v << r
                        if w + q + 1 < top:
                            T[w + q + 1] |= v >> rr
        for w in range(top):
            S[w] = T[w]
    total = 0
    for w in range(nw):
        total += _popcount(S[w])
    return int(total)


@njit(cache=True)
def sparse_size(A, X, buf):
    """|hA| as the number of distinct values x . a over the composition rows X."""
    n = X.shape[0]
    k = A.shape[0]
    for i in range(n):
        s = 0
        for j in range(k):
            s += X[i, j] * A[j]
        buf[i] = s
    v = np.sort(buf[:n])
    count = 1
    for i in range(1, n):
        if v[i] != v[i - 1]:
            count += 1
    return count


@njit(cache=True)
def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@njit(cache=True, nogil=True)
def scan_shard(h, k, m, X, method, maxsize):
    """Scan canonical sets {0 < c_1 < ... < c_{k-2} < m} U {0, m}.

    Canonical: gcd of all elements is 1 and the gap sequence is <= its
    reversal.  Returns (first witness per size, sets examined); rows of the
    witness array are -1 where a size was not seen.  Sets are visited in
    lexicographic order so the first witness is the smallest one.
    """
    wit = np.full((maxsize + 1, k), -1, dtype=np.int64)
    A = np.zeros(k, dtype=np.int64)
    A[k - 1] = m
    nw = (h * m) // 64 + 2
    S = np.zeros(nw, dtype=np.uint64)
    T = np.zeros(nw, dtype=np.uint64)
    buf = np.zeros(X.shape[0], dtype=np.int64)
    r = k - 2
    if r > m - 1:
        return wit, 0
    c = np.arange(1, r + 1)
    examined = 0
    while True:
        for j in range(r):
            A[j + 1] = c[j]
        g = m
        for j in range(r):
            g = _gcd(c[j], g)
        ok = g == 1
        if ok:
            for j in range((k - 1) // 2):
                lo = A[j + 1] - A[j]
                hi = A[k - 1 - j] - A[k - 2 - j]
                if lo < hi:
                    break
                if lo > hi:
                    ok = False
                    break
        if ok:
            examined += 1
            if method == DENSE:
                s = dense_size(A, h, S, T)
            else:
                s = sparse_size(A, X, buf)
            if wit[s, 0] < 0:
                for j in range(k):
                    wit[s, j] = A[j]
        i = r - 1
        while i >= 0 and c[i] == m - r + i:
            i -= 1
        if i < 0:
            break
        c[i] += 1
        for j in range(i + 1, r):
            c[j] = c[j - 1] + 1
    return wit, examined


@njit(cache=True)
def sizes_of(sets, h, X, method):
    """|hA| for each row of an int64 array of sorted sets with min 0."""
    n, k = sets.shape
    out = np.empty(n, dtype=np.int64)
    mmax = 0
    for i in range(n):
        if sets[i, k - 1] > mmax:
            mmax = sets[i, k - 1]
    nw = (h * mmax) // 64 + 2
    S = np.zeros(nw, dtype=np.uint64)
    T = np.zeros(nw, dtype=np.uint64)
    buf = np.zeros(X.shape[0], dtype=np.int64)
    for i in range(n):
        if method == DENSE:
            out[i] = dense_size(sets[i], h, S, T)
        else:
            out[i] = sparse_size(sets[i], X, buf)
    return out
