"""Pure-Python kernels. Same API as the compiled ``_speedups`` module."""

from math import isqrt

import numpy as np

BACKEND = "python"


def bits_of(n):
    """Ascending positions of the set bits of ``n``."""
    if n < 0:
        raise ValueError("negative code")
    if n < 1 << 64:
        out = []
        while n:
            low = n & -n
            out.append(low.bit_length() - 1)
            n ^= low
        return out
    digits = bin(n)[:1:-1]
    return [i for i, c in enumerate(digits) if c == "1"]


def from_bits(elems):
    """Integer with exactly the given bits set; duplicates are OR-ed together."""
    elems = list(elems)
    if not elems:
        return 0
    top = max(elems)
    if top < 64 or len(elems) < 32:
        r = 0
        for e in elems:
            r |= 1 << e
        return r
    buf = bytearray(top // 8 + 1)
    for e in elems:
        buf[e >> 3] |= 1 << (e & 7)
    return int.from_bytes(buf, "little")


def pair_index(a, b):
    m = a if a > b else b
    if b == m and a < m:
        return m * m + a
    return m * m + m + b


def unpair(n):
    m = isqrt(n)
    r = n - m * m
    if r < m:
        return r, m
    return m, r - m


def unpair_roundtrip_failure(limit):
    """First ``n < limit`` with ``pair_index(*unpair(n)) != n``, or -1."""
    for n in range(limit):
        a, b = unpair(n)
        if pair_index(a, b) != n:
            return n
    return -1


def pair_grid_failure(size):
    """First (a, b) in [0,size)^2 that breaks bijectivity onto [0,size^2), or None."""
    total = size * size
    seen = bytearray(total)
    for a in range(size):
        for b in range(size):
            i = pair_index(a, b)
            if i >= total or seen[i]:
                return a, b
            seen[i] = 1
    return None


def order_preservation_failure(limit):
    """First (m, n), m < n < limit, whose top differing bit is not a bit of n.

    The top differing bit of m and n is the largest code in the symmetric
    difference of their Ackermann decodings.
    """
    for n in range(1, limit):
        m = np.arange(n, dtype=np.int64)
        diff = m ^ n
        top = np.frexp(diff.astype(np.float64))[1] - 1
        bad = ((n >> top) & 1) == 0
        if bad.any():
            return int(np.argmax(bad)), n
    return None
