"""Independent reference implementations used by the tests.

None of these import the code under test for the thing they check; they
recompute from definitions, usually by brute force.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


# Cantor-Bernstein: forward images J^n[k] - J^n[j].

def cb_oracle(A, f, g):
    """Bijection A -> B from the set-image description, iterating forwards."""
    J = {a: g[f[a]] for a in A}
    j = set(J.values())
    k = set(g.values())
    fixed = set()
    cur_k, cur_j = set(k), set(j)
    for _ in range(len(A) + 1):
        fixed |= cur_k - cur_j
        cur_k = {J[x] for x in cur_k}
        cur_j = {J[x] for x in cur_j}
    g_inv = {a: b for b, a in g.items()}
    return {a: (g_inv[a] if a in fixed else g_inv[J[a]]) for a in A}, fixed


def is_bijection(mapping, A, B):
    return set(mapping) == set(A) and sorted(mapping.values()) == sorted(B)


# Ordinals below omega^3 as triples (i, j, k) = w^2*i + w*j + k. Addition
# and multiplication come from the definitions (successor steps, sups at
# limits), using only associativity of + and left distributivity of * to
# split the right operand into w^2*i + w*j + k.

class TooBig(Exception):
    pass


# every sequence below has coordinates affine in n from n = 1 on, so a
# coordinate that moves between these samples is unbounded
SAMPLES = (5, 10)


def _sup(seq):
    """Sup of a strictly increasing sequence n -> triple."""
    lo, hi = (seq(n) for n in SAMPLES)
    if lo[0] != hi[0]:
        raise TooBig("sup reaches omega^3")
    if lo[1] != hi[1]:
        return (lo[0] + 1, 0, 0)
    if lo[2] != hi[2]:
        return (lo[0], lo[1] + 1, 0)
    raise AssertionError("sequence is not increasing")


def _plus_nat(x, n):
    i, j, k = x
    return (i, j, k + n)


def _plus_w(x):
    return _sup(lambda n: _plus_nat(x, n))


def _iterate(step, x, n):
    for _ in range(n):
        x = step(x)
    return x


def _plus_w2(x):
    return _sup(lambda n: _iterate(_plus_w, x, n))


def o_add(a, b):
    i, j, k = b
    x = _iterate(_plus_w2, a, i)
    x = _iterate(_plus_w, x, j)
    return _plus_nat(x, k)


def _times_nat(a, n):
    return _iterate(lambda x: o_add(x, a), (0, 0, 0), n)


def o_mul(a, b):
    i, j, k = b
    if a == (0, 0, 0):
        return a
    out = (0, 0, 0)
    if i or j:
        a_w = _sup(lambda n: _times_nat(a, n))
        if i:
            out = _times_nat(_sup(lambda n: _times_nat(a_w, n)), i)
        out = o_add(out, _times_nat(a_w, j))
    return o_add(out, _times_nat(a, k))


def o_cmp(a, b):
    return "lt" if a < b else "gt" if a > b else "eq"


# Hereditarily finite sets as nested frozensets.

def tree_of(n):
    return frozenset(tree_of(i) for i, c in enumerate(bin(n)[:1:-1]) if c == "1")


def code_of(tree):
    return sum(2 ** code_of(t) for t in tree)


def closure_fixpoint(n):
    def elems(x):
        return {i for i, c in enumerate(bin(x)[:1:-1]) if c == "1"}

    S = elems(n)
    while True:
        bigger = S.union(*(elems(x) for x in S)) if S else S
        if bigger == S:
            return S
        S = bigger


# Directed acyclic graphs.

def all_dags(labels):
    """Every acyclic edge set on ``labels``, each once."""
    n = len(labels)
    seen = set()
    for perm in itertools.permutations(labels):
        pairs = [(perm[a], perm[b]) for a in range(n) for b in range(a + 1, n)]
        for mask in range(1 << len(pairs)):
            edges = frozenset(p for t, p in enumerate(pairs) if mask >> t & 1)
            if edges not in seen:
                seen.add(edges)
                yield sorted(edges)


def collapse_oracle(labels, edges):
    elems = {v: [x for x, y in edges if y == v] for v in labels}

    @lru_cache(maxsize=None)
    def code(v):
        return sum(2 ** c for c in {code(x) for x in elems[v]})

    return {v: code(v) for v in labels}


def extensional_oracle(labels, edges):
    keys = [frozenset(x for x, y in edges if y == v) for v in labels]
    return len(set(keys)) == len(keys)
