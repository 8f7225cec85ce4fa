# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; same contracts as ``_pykernels``."""

from libc.stdlib cimport malloc, calloc, free
from libc.stdint cimport int64_t, int32_t

from math import comb

cdef int64_t INT64_CAP = 1 << 62


def taylor_at_one(coeffs):
    cdef Py_ssize_t n = len(coeffs), i, j
    cdef int64_t *cs = <int64_t *> malloc(n * sizeof(int64_t))
    if cs == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            cs[i] = coeffs[i]
        _taylor(cs, n)
        return [cs[i] for i in range(n)]
    finally:
        free(cs)


cdef inline void _taylor(int64_t *cs, Py_ssize_t n) nogil:
    cdef Py_ssize_t i, j
    for i in range(n):
        j = n - 2
        while j >= i:
            cs[j] += cs[j + 1]
            j -= 1


cdef inline int _root_order(int64_t *cs, Py_ssize_t n) nogil:
    # destroys cs
    cdef int k = 0
    cdef int64_t acc
    cdef Py_ssize_t i, start = 0
    while True:
        acc = 0
        i = n - 1
        while i >= start:
            acc += cs[i]
            cs[i] = acc
            i -= 1
        if acc != 0:
            return k
        k += 1
        start += 1


def root_order(coeffs):
    cdef Py_ssize_t n = len(coeffs), i
    cdef int64_t *cs = <int64_t *> malloc(n * sizeof(int64_t))
    if cs == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            cs[i] = coeffs[i]
        return _root_order(cs, n)
    finally:
        free(cs)


def order_scan(int N, int W):
    cdef int base = 2 * W + 1
    cdef int d, i, k, best, carry, lead, maxk = 0
    cdef int64_t total
    cdef int *digits = <int *> malloc((N + 1) * sizeof(int))
    cdef int64_t *work = <int64_t *> malloc((N + 1) * sizeof(int64_t))
    cdef int64_t *hist = <int64_t *> calloc(N + 2, sizeof(int64_t))
    if digits == NULL or work == NULL or hist == NULL:
        free(digits); free(work); free(hist)
        raise MemoryError()
    max_by_degree = [0] * (N + 1)
    try:
        with nogil:
            for d in range(N + 1):
                best = 0
                for lead in range(-W, W + 1):
                    if lead == 0:
                        continue
                    for i in range(d):
                        digits[i] = 0
                    while True:
                        total = lead
                        for i in range(d):
                            total += digits[i] - W
                        if total != 0:
                            k = 0
                        else:
                            for i in range(d):
                                work[i] = digits[i] - W
                            work[d] = lead
                            k = _root_order(work, d + 1)
                        hist[k] += 1
                        if k > best:
                            best = k
                        if k > maxk:
                            maxk = k
                        # odometer over the d low coefficients, a_0 fastest
                        carry = 1
                        i = 0
                        while carry and i < d:
                            digits[i] += 1
                            if digits[i] == base:
                                digits[i] = 0
                                i += 1
                            else:
                                carry = 0
                        if carry:
                            break
                with gil:
                    max_by_degree[d] = best
        return max_by_degree, [hist[k] for k in range(maxk + 1)]
    finally:
        free(digits); free(work); free(hist)


def family_size(N, W):
    return W * (2 * W + 1) ** N


def decode_family(index, N, W):
    base = 2 * W + 1
    cs = []
    for _ in range(N):
        index, r = divmod(index, base)
        cs.append(r - W)
    cs.append(index + 1)
    return cs


def gap_screen(int N, int W, q):
    """Indices failing ``sum_{j>k} |t_j| < |t_k| * q``; q is clamped to 2**62."""
    cdef int64_t qq = q if q < INT64_CAP else INT64_CAP
    cdef int base = 2 * W + 1
    cdef int64_t idx = 0, count = family_size(N, W)
    cdef int i, k, carry
    cdef int64_t s, tk
    cdef int *digits = <int *> calloc(N + 1, sizeof(int))
    cdef int64_t *t = <int64_t *> malloc((N + 1) * sizeof(int64_t))
    if digits == NULL or t == NULL:
        free(digits); free(t)
        raise MemoryError()
    out = []
    try:
        # digits[N] holds lead - 1; a_0 varies fastest, matching decode_family
        while idx < count:
            for i in range(N):
                t[i] = digits[i] - W
            t[N] = digits[N] + 1
            _taylor(t, N + 1)
            k = 0
            while t[k] == 0:
                k += 1
            s = 0
            for i in range(k + 1, N + 1):
                s += t[i] if t[i] >= 0 else -t[i]
            tk = t[k] if t[k] >= 0 else -t[k]
            # s < tk * qq without overflow: s and tk are far below 2**62
            if not (qq >= INT64_CAP // tk or s < tk * qq):
                out.append(idx)
            idx += 1
            carry = 1
            i = 0
            while carry and i < N:
                digits[i] += 1
                if digits[i] == base:
                    digits[i] = 0
                    i += 1
                else:
                    carry = 0
            if carry:
                digits[N] += 1
        return out
    finally:
        free(digits); free(t)


def pigeonhole_collision(int N, int k):
    """Gray-code pigeonhole search; falls back to a dict when the table is large."""
    cdef int i, j, bit
    cdef int64_t s, limit = (<int64_t> 1) << (N + 1), slot, size = 1
    radix = [comb(N + 1, j + 1) + 1 for j in range(k)]
    for r in radix:
        size *= r
        if size > (1 << 24):
            from ._pykernels import pigeonhole_collision as py_search
            return py_search(N, k)
    cdef int64_t *binom = <int64_t *> malloc((N + 1) * k * sizeof(int64_t))
    cdef int64_t *stride = <int64_t *> malloc(k * sizeof(int64_t))
    cdef int32_t *table = <int32_t *> malloc(size * sizeof(int32_t))
    cdef int64_t mask = 0
    if binom == NULL or stride == NULL or table == NULL:
        free(binom); free(stride); free(table)
        raise MemoryError()
    try:
        for i in range(N + 1):
            for j in range(k):
                binom[i * k + j] = comb(i, j)
        acc = 1
        for j in range(k):
            stride[j] = acc
            acc *= radix[j]
        for s in range(size):
            table[s] = -1
        table[0] = 0
        slot = 0
        with nogil:
            for s in range(1, limit):
                bit = 0
                while not (s >> bit) & 1:
                    bit += 1
                mask ^= (<int64_t> 1) << bit
                if (mask >> bit) & 1:
                    for j in range(k):
                        slot += binom[bit * k + j] * stride[j]
                else:
                    for j in range(k):
                        slot -= binom[bit * k + j] * stride[j]
                if table[slot] >= 0:
                    break
                table[slot] = <int32_t> mask
            else:
                slot = -1
        if slot < 0:
            return None
        return int(table[slot]), int(mask)
    finally:
        free(binom); free(stride); free(table)
