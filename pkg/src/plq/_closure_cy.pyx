# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled congruence closure kernel.

Contract is identical to ``_closure_py.closure_reps``; see there for the
semantics.  This version keeps the union-find and the factor scan in C,
which matters because the word set grows as n**cap.
"""

from libc.stdlib cimport free, malloc

from array import array


cdef inline int _find(int* parent, int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef inline void _union(int* parent, int* size, int x, int y) noexcept nogil:
    cdef int rx = _find(parent, x)
    cdef int ry = _find(parent, y)
    cdef int t
    if rx == ry:
        return
    if size[rx] < size[ry]:
        t = rx
        rx = ry
        ry = t
    parent[ry] = rx
    size[rx] += size[ry]


def closure_reps(int n, int cap, rules, bint front_transposition=False):
    """Least-index component representative for every word of length <= cap."""
    cdef long long i, total, value, count
    cdef int length, j, p, k, q, maxk, x, y
    cdef long long f, high, idx, idx2, l2, rv
    cdef int rl

    # word index offsets and powers of n
    cdef long long* off = <long long*> malloc((cap + 2) * sizeof(long long))
    cdef long long* pw = <long long*> malloc((cap + 2) * sizeof(long long))
    if off == NULL or pw == NULL:
        raise MemoryError()
    off[0] = 0
    pw[0] = 1
    for length in range(1, cap + 2):
        pw[length] = pw[length - 1] * n
        off[length] = off[length - 1] + pw[length - 1]
    total = off[cap + 1]
    if total > 2147483000:
        free(off)
        free(pw)
        raise MemoryError(f"word set too large: {total}")

    # rule tables: per factor length, a sorted array of factor values with
    # contiguous (replacement value, replacement length) entry ranges
    groups = {}
    maxk = 0
    for lhs, rhs in rules:
        if len(lhs) < len(rhs):
            lhs, rhs = rhs, lhs
        k = len(lhs)
        if k > maxk:
            maxk = k
        f = 0
        for d in lhs:
            f = f * n + d
        rv = 0
        for d in rhs:
            rv = rv * n + d
        groups.setdefault(k, {}).setdefault(f, []).append((rv, len(rhs)))

    kv_off_py = [0] * (maxk + 2)
    vals_py = []
    ent_idx_py = [0]
    ent_rv_py = []
    ent_rl_py = []
    for k in range(1, maxk + 1):
        kv_off_py[k] = len(vals_py)
        for f in sorted(groups.get(k, ())):
            vals_py.append(f)
            for rv, rl in groups[k][f]:
                ent_rv_py.append(rv)
                ent_rl_py.append(rl)
            ent_idx_py.append(len(ent_rv_py))
    kv_off_py[maxk + 1] = len(vals_py)

    vals_arr = array("q", vals_py or [0])
    ent_idx_arr = array("q", ent_idx_py)
    ent_rv_arr = array("q", ent_rv_py or [0])
    ent_rl_arr = array("q", ent_rl_py or [0])
    kv_off_arr = array("q", kv_off_py)
    cdef long long[::1] vals = vals_arr
    cdef long long[::1] ent_idx = ent_idx_arr
    cdef long long[::1] ent_rv = ent_rv_arr
    cdef long long[::1] ent_rl = ent_rl_arr
    cdef long long[::1] kv_off = kv_off_arr
    cdef long long lo, hi, mid, vbase, ventry

    cdef int* parent = <int*> malloc(total * sizeof(int))
    cdef int* size = <int*> malloc(total * sizeof(int))
    cdef int* digits = <int*> malloc((cap + 1) * sizeof(int))
    cdef long long* suffix = <long long*> malloc((cap + 2) * sizeof(long long))
    if parent == NULL or size == NULL or digits == NULL or suffix == NULL:
        free(off); free(pw); free(parent); free(size); free(digits); free(suffix)
        raise MemoryError()
    for i in range(total):
        parent[i] = <int> i
        size[i] = 1

    cdef int kmax_here
    try:
        with nogil:
            for length in range(1, cap + 1):
                for j in range(length):
                    digits[j] = 0
                suffix[length] = 0
                count = pw[length]
                for value in range(count):
                    idx = off[length] + value
                    for j in range(length - 1, -1, -1):
                        suffix[j] = suffix[j + 1] + digits[j] * pw[length - 1 - j]
                    high = 0
                    for p in range(length):
                        f = 0
                        kmax_here = maxk
                        if length - p < kmax_here:
                            kmax_here = length - p
                        for k in range(1, kmax_here + 1):
                            f = f * n + digits[p + k - 1]
                            lo = kv_off[k]
                            hi = kv_off[k + 1]
                            vbase = -1
                            while lo < hi:
                                mid = (lo + hi) >> 1
                                if vals[mid] < f:
                                    lo = mid + 1
                                elif vals[mid] > f:
                                    hi = mid
                                else:
                                    vbase = mid
                                    break
                            if vbase < 0:
                                continue
                            for ventry in range(ent_idx[vbase], ent_idx[vbase + 1]):
                                rv = ent_rv[ventry]
                                rl = <int> ent_rl[ventry]
                                l2 = length - k + rl
                                if l2 <= cap:
                                    idx2 = (
                                        off[l2]
                                        + (high * pw[rl] + rv) * pw[length - p - k]
                                        + suffix[p + k]
                                    )
                                    _union(parent, size, <int> idx, <int> idx2)
                        if front_transposition and p + 2 < length:
                            x = digits[p]
                            y = digits[p + 1]
                            if y > x:
                                for q in range(p + 2, length):
                                    if x <= digits[q] and digits[q] < y:
                                        idx2 = idx + (y - x) * (
                                            pw[length - 1 - p] - pw[length - 2 - p]
                                        )
                                        _union(parent, size, <int> idx, <int> idx2)
                                        break
                        high = high * n + digits[p]
                    j = length - 1
                    while j >= 0:
                        digits[j] += 1
                        if digits[j] < n:
                            break
                        digits[j] = 0
                        j -= 1

        reps_arr = array("i", bytes(4 * total)) if total else array("i")
        _collect(parent, total, reps_arr)
        return reps_arr
    finally:
        free(off)
        free(pw)
        free(parent)
        free(size)
        free(digits)
        free(suffix)


cdef void _collect(int* parent, long long total, reps_arr):
    cdef int[::1] reps = reps_arr
    cdef long long i
    cdef int r
    # roots are visited before their members in increasing index order,
    # so stamping the first-seen member per root yields the least index
    cdef int* least = <int*> malloc(total * sizeof(int))
    if least == NULL:
        raise MemoryError()
    try:
        with nogil:
            for i in range(total):
                least[i] = -1
            for i in range(total):
                r = _find(parent, <int> i)
                if least[r] < 0:
                    least[r] = <int> i
                reps[i] = least[r]
    finally:
        free(least)
