import random

import pytest
from hypothesis import given, strategies as st

from oracles import TooBig, o_add, o_cmp, o_mul
from relaxkit.errors import EmptyList, MalformedCNF, ParseError
from relaxkit.ordinal import (
    OMEGA,
    ONE,
    ZERO,
    OrdCNF,
    classify,
    format_ordinal,
    omega_pow,
    ord_add,
    ord_cmp,
    ord_mul,
    ord_sup,
    pair_index,
    parse_ordinal,
    unpair,
)

P = parse_ordinal


def from_triple(t):
    i, j, k = t
    terms = [(e, c) for e, c in ((OrdCNF.nat(2), i), (ONE, j), (ZERO, k)) if c]
    return OrdCNF(terms)


def to_triple(a):
    out = [0, 0, 0]
    for e, c in a.terms:
        out[2 - int(e)] = c
    return tuple(out)


triple = st.tuples(st.integers(0, 19), st.integers(0, 19), st.integers(0, 19))


@pytest.mark.parametrize(
    "a, b, want",
    [("w*2+3", "w^2", "lt"), ("w", "w", "eq"), ("w^w", "w^5*9", "gt"), ("1+w", "w", "eq")],
)
def test_cmp(a, b, want):
    assert ord_cmp(P(a), P(b)) == want


@pytest.mark.parametrize(
    "a, b, s, p",
    [
        ("1", "w", "w", "w"),
        ("w", "1", "w+1", "w"),
        ("w+1", "w+1", "w*2+1", "w^2+w+1"),
        ("2", "w", "w", "w"),
        ("w", "2", "w+2", "w*2"),
        ("w^w", "w^w", "w^w*2", "w^(w*2)"),
        ("w^2+3", "w^(w+1)", "w^(w+1)", "w^(w+1)"),
        ("0", "w", "w", "0"),
    ],
)
def test_add_mul(a, b, s, p):
    assert format_ordinal(ord_add(P(a), P(b))) == s
    assert format_ordinal(ord_mul(P(a), P(b))) == p


def test_sup_classify_pow():
    assert ord_sup([P("3"), P("w"), P("w+1")]) == P("w+1")
    with pytest.raises(EmptyList):
        ord_sup([])
    assert [classify(P(x)) for x in ("0", "5", "w", "w^2+w+1", "w^w")] == [
        "zero", "successor", "limit", "successor", "limit"]
    assert omega_pow(ONE) == OMEGA and omega_pow(ZERO) == ONE


@pytest.mark.parametrize(
    "text", ["0", "7", "w", "w*3", "w^2*3+w+5", "w^w", "w^(w+1)*2+w^w+4", "w^w^w", "w^(w*2)"]
)
def test_print_parse_roundtrip(text):
    assert format_ordinal(P(text)) == text


@pytest.mark.parametrize("text", ["", "w^", "w*", "w+", "x", "w^(w", "3 4", "w*w"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        P(text)


def test_malformed_cnf():
    with pytest.raises(MalformedCNF):
        OrdCNF([(ZERO, 1), (ONE, 1)])
    with pytest.raises(MalformedCNF):
        OrdCNF([(ONE, 0)])


@given(triple, triple)
def test_against_oracle(a, b):
    A, B = from_triple(a), from_triple(b)
    assert ord_cmp(A, B) == o_cmp(a, b)
    assert to_triple(ord_add(A, B)) == o_add(a, b)
    try:
        want = o_mul(a, b)
    except TooBig:
        assert ord_mul(A, B).degree >= OrdCNF.nat(3)
    else:
        assert to_triple(ord_mul(A, B)) == want


@given(triple, triple, triple)
def test_algebra(a, b, c):
    A, B, C = map(from_triple, (a, b, c))
    assert (A + B) + C == A + (B + C)
    assert (A * B) * C == A * (B * C)
    assert A * (B + C) == A * B + A * C
    assert A + B >= B and (not B or A + B > A)


@given(st.integers(0, 400), st.integers(0, 400))
def test_pair_roundtrip(a, b):
    assert unpair(pair_index(a, b)) == (a, b)


def test_pair_examples():
    assert [unpair(n) for n in range(9)] == [
        (0, 0), (0, 1), (1, 0), (1, 1), (0, 2), (1, 2), (2, 0), (2, 1), (2, 2)]
    with pytest.raises(ValueError):
        pair_index(-1, 0)
    with pytest.raises(ValueError):
        unpair(-1)
    big = 10**40
    assert unpair(pair_index(big, big + 3)) == (big, big + 3)


def cnf(height):
    """CNF values whose exponents nest at most ``height`` levels."""
    if height == 0:
        return st.integers(0, 5).map(OrdCNF.nat)
    term = st.tuples(cnf(height - 1), st.integers(1, 4))

    def build(terms):
        out = ZERO
        for e, c in terms:
            out = ord_add(out, OrdCNF([(e, c)]))
        return out

    return st.lists(term, max_size=3).map(build)


@given(cnf(3), cnf(3), cnf(3))
def test_algebra_nested(a, b, c):
    assert ord_add(ord_add(a, b), c) == ord_add(a, ord_add(b, c))
    assert ord_mul(a, ord_add(b, c)) == ord_add(ord_mul(a, b), ord_mul(a, c))
    assert a <= ord_add(a, b)
    assert P(format_ordinal(a)) == a


def test_documented_examples():
    assert ord_cmp(ZERO, ZERO) == "eq" and ord_cmp(OMEGA, OrdCNF.nat(5)) == "gt"
    assert ord_mul(OMEGA, OrdCNF.nat(2)) == P("w*2") and ord_mul(OrdCNF.nat(2), OMEGA) == OMEGA
    assert ord_sup([ZERO]) == ZERO
    assert [pair_index(*p) for p in [(0, 0), (0, 1), (1, 0), (1, 1), (2, 1)]] == [0, 1, 2, 3, 7]


def test_pair_roundtrip_million():
    from relaxkit import kernels

    for name in kernels.available_backends():
        assert kernels.backend(name).unpair_roundtrip_failure(10**6) == -1
