"""Finite cardinality, injection existence and Cantor's diagonal."""

from __future__ import annotations

from typing import Mapping

from relaxkit.domain import BinFn, FinDomain
from relaxkit.errors import ShapeMismatch


def inj_exists(A: FinDomain, B: FinDomain) -> bool:
    """Whether some injection A -> B exists; for finite domains, |A| <= |B|."""
    return len(A) <= len(B)


def card(A: FinDomain) -> int:
    """Least well-order class that ``A`` injects into: its size."""
    n = 0
    while not inj_exists(A, FinDomain(tuple(str(i) for i in range(n)))):
        n += 1
    return n


def injection(A: FinDomain, B: FinDomain) -> dict[str, str] | None:
    """A witness injection A -> B (order-preserving on label order), if any."""
    if not inj_exists(A, B):
        return None
    return dict(zip(A.labels, B.labels))


def cantor_diagonal(A: FinDomain, p: Mapping[str, BinFn]) -> BinFn:
    """h[a] = not p[a][a]; h differs from every p[a] at a, so p is not onto."""
    mask = 0
    for i, a in enumerate(A.labels):
        if a not in p:
            raise ShapeMismatch(a, "p has no value here")
        pa = p[a]
        if pa.domain != A:
            raise ShapeMismatch(a, "p[a] is not a function on A")
        if not pa.mask >> i & 1:
            mask |= 1 << i
    return BinFn(A, mask)
