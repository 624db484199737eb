# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels. Same API as ``_purepy``; machine-width fast paths with
big-integer fallbacks."""

from libc.math cimport sqrt
from libc.stdlib cimport calloc, free

BACKEND = "cython"

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_ctzll(unsigned long long x)
    int __builtin_clzll(unsigned long long x)


def bits_of(n):
    cdef u64 x
    cdef list out
    if n < 0:
        raise ValueError("negative code")
    if n < (1 << 64):
        x = n
        out = []
        while x:
            out.append(__builtin_ctzll(x))
            x &= x - 1
        return out
    digits = bin(n)[:1:-1]
    return [i for i, c in enumerate(digits) if c == "1"]


def from_bits(elems):
    cdef u64 acc = 0
    cdef long long e
    elems = list(elems)
    if not elems:
        return 0
    top = max(elems)
    if top < 64:
        for e in elems:
            acc |= (<u64>1) << e
        return acc
    buf = bytearray(top // 8 + 1)
    for pos in elems:
        buf[pos >> 3] |= 1 << (pos & 7)
    return int.from_bytes(buf, "little")


cdef inline u64 _pair_index(u64 a, u64 b) nogil:
    cdef u64 m = a if a > b else b
    if b == m and a < m:
        return m * m + a
    return m * m + m + b


cdef inline u64 _isqrt(u64 n) nogil:
    cdef u64 r = <u64>sqrt(<double>n)
    while r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r


def pair_index(a, b):
    if 0 <= a < (1 << 31) and 0 <= b < (1 << 31):
        return _pair_index(a, b)
    m = a if a > b else b
    if b == m and a < m:
        return m * m + a
    return m * m + m + b


def unpair(n):
    cdef u64 x, m, r
    if 0 <= n < (1 << 60):
        x = n
        m = _isqrt(x)
        r = x - m * m
        if r < m:
            return r, m
        return m, r - m
    from math import isqrt
    big_m = isqrt(n)
    big_r = n - big_m * big_m
    if big_r < big_m:
        return big_r, big_m
    return big_m, big_r - big_m


def unpair_roundtrip_failure(long long limit):
    cdef u64 n, m, r, a, b
    for n in range(<u64>limit):
        m = _isqrt(n)
        r = n - m * m
        if r < m:
            a = r
            b = m
        else:
            a = m
            b = r - m
        if _pair_index(a, b) != n:
            return n
    return -1


def pair_grid_failure(long long size):
    cdef u64 total = size * size
    cdef u64 a, b, i
    cdef unsigned char *seen = <unsigned char *>calloc(total + 1, 1)
    if seen == NULL:
        raise MemoryError()
    try:
        for a in range(<u64>size):
            for b in range(<u64>size):
                i = _pair_index(a, b)
                if i >= total or seen[i]:
                    return a, b
                seen[i] = 1
    finally:
        free(seen)
    return None


def order_preservation_failure(long long limit):
    cdef u64 n, m, diff
    cdef int top
    if limit > (1 << 62):
        raise OverflowError("limit too large for the machine-width sweep")
    for n in range(1, <u64>limit):
        for m in range(n):
            diff = m ^ n
            top = 63 - __builtin_clzll(diff)
            if not ((n >> top) & 1):
                return m, n
    return None
