"""Ordinals below epsilon_0 in Cantor normal form, and the Cantor pairing
of N x N along the canonical product order.

Literal grammar (``w`` stands for omega)::

    ord  := term ('+' term)*
    term := 'w' ('^' atom)? ('*' nat)? | nat
    atom := nat | 'w' ('^' atom)? | '(' ord ')'

Terms are summed with ordinal addition, so ``1+w`` reads as ``w``.
Printing is canonical, e.g. ``w^2*3+w+5``, with parentheses only around
exponents that are not a bare natural or a single power of omega.
"""

from __future__ import annotations

import re
from functools import total_ordering
from typing import Iterable

from relaxkit import kernels
from relaxkit.errors import EmptyList, MalformedCNF, ParseError


@total_ordering
class OrdCNF:
    """omega^e1*c1 + ... + omega^ek*ck with e1 > ... > ek and every ci >= 1."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Iterable[tuple[OrdCNF, int]] = ()):
        terms = tuple((e, c) for e, c in terms)
        for i, (e, c) in enumerate(terms):
            if not isinstance(e, OrdCNF):
                raise MalformedCNF(f"exponent {e!r} is not an ordinal")
            if not isinstance(c, int) or isinstance(c, bool) or c < 1:
                raise MalformedCNF(f"coefficient {c!r} must be a positive integer")
            if i and _cmp(terms[i - 1][0], e) <= 0:
                raise MalformedCNF("exponents must be strictly decreasing")
        self.terms = terms
        self._hash = None

    @classmethod
    def nat(cls, n: int) -> OrdCNF:
        if n < 0:
            raise MalformedCNF("negative natural")
        return ZERO if n == 0 else cls(((ZERO, n),))

    def __eq__(self, other):
        if isinstance(other, int):
            other = OrdCNF.nat(other) if other >= 0 else None
        if not isinstance(other, OrdCNF):
            return NotImplemented
        return self.terms == other.terms

    def __lt__(self, other):
        if isinstance(other, int):
            other = OrdCNF.nat(other)
        if not isinstance(other, OrdCNF):
            return NotImplemented
        return _cmp(self, other) < 0

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __add__(self, other):
        return ord_add(self, _coerce(other))

    def __mul__(self, other):
        return ord_mul(self, _coerce(other))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"OrdCNF({format_ordinal(self)!r})"

    def __str__(self):
        return format_ordinal(self)

    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not self.terms[0][0].terms)

    def __int__(self):
        if not self.is_finite():
            raise ValueError("infinite ordinal")
        return self.terms[0][1] if self.terms else 0

    @property
    def degree(self) -> OrdCNF:
        """Leading exponent (0 for the ordinal 0)."""
        return self.terms[0][0] if self.terms else ZERO


ZERO = OrdCNF()
ONE = OrdCNF(((ZERO, 1),))
OMEGA = OrdCNF(((ONE, 1),))


def _coerce(x) -> OrdCNF:
    if isinstance(x, OrdCNF):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return OrdCNF.nat(x)
    raise MalformedCNF(f"not an ordinal: {x!r}")


def _cmp(a: OrdCNF, b: OrdCNF) -> int:
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = _cmp(ea, eb)
        if c:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    la, lb = len(a.terms), len(b.terms)
    return (la > lb) - (la < lb)


def ord_cmp(a: OrdCNF, b: OrdCNF) -> str:
    """'lt', 'eq' or 'gt'."""
    c = _cmp(_coerce(a), _coerce(b))
    return "lt" if c < 0 else "gt" if c > 0 else "eq"


def ord_add(a: OrdCNF, b: OrdCNF) -> OrdCNF:
    a, b = _coerce(a), _coerce(b)
    if not b.terms:
        return a
    lead, coeff = b.terms[0]
    kept = []
    for e, c in a.terms:
        order = _cmp(e, lead)
        if order > 0:
            kept.append((e, c))
        elif order == 0:
            coeff += c
            break
        else:
            break
    return OrdCNF(kept + [(lead, coeff)] + list(b.terms[1:]))


def ord_mul(a: OrdCNF, b: OrdCNF) -> OrdCNF:
    a, b = _coerce(a), _coerce(b)
    if not a.terms or not b.terms:
        return ZERO
    lead, lead_coeff = a.terms[0]
    result = ZERO
    for e, c in b.terms:
        if e.terms:
            # a * omega^e = omega^(lead + e) for e >= 1
            piece = OrdCNF(((ord_add(lead, e), c),))
        else:
            piece = OrdCNF(((lead, lead_coeff * c),) + a.terms[1:])
        result = ord_add(result, piece)
    return result


def omega_pow(a: OrdCNF) -> OrdCNF:
    return OrdCNF(((_coerce(a), 1),))


def ord_sup(xs: Iterable[OrdCNF]) -> OrdCNF:
    """Least upper bound of a finite nonempty list, i.e. its maximum."""
    xs = [_coerce(x) for x in xs]
    if not xs:
        raise EmptyList("sup of an empty list")
    best = xs[0]
    for x in xs[1:]:
        if _cmp(x, best) > 0:
            best = x
    return best


def classify(a: OrdCNF) -> str:
    """'zero', 'successor' or 'limit'."""
    a = _coerce(a)
    if not a.terms:
        return "zero"
    return "limit" if a.terms[-1][0].terms else "successor"


# Pairing along the canonical order on N x N.

def pair_index(a: int, b: int) -> int:
    """Position of (a, b) in the canonical order: max first, then lexicographic."""
    if a < 0 or b < 0:
        raise ValueError("pair_index takes naturals")
    return kernels.pair_index(a, b)


def unpair(n: int) -> tuple[int, int]:
    if n < 0:
        raise ValueError("unpair takes a natural")
    return kernels.unpair(n)


# Literals.

_TOKEN = re.compile(r"\s*(?:(\d+)|(.))")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        tokens.append(m.group(1) or m.group(2))
        pos = m.end()
    return [t for t in tokens if not t.isspace()]


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ParseError(f"expected {expected or 'a token'} at token {self.i}, got {tok!r}")
        self.i += 1
        return tok

    def nat(self):
        tok = self.take()
        if not tok.isdigit():
            raise ParseError(f"expected a natural number, got {tok!r}")
        return int(tok)

    def ordinal(self):
        value = self.term()
        while self.peek() == "+":
            self.take("+")
            value = ord_add(value, self.term())
        return value

    def power(self):
        self.take("w")
        exponent = ONE
        if self.peek() == "^":
            self.take("^")
            exponent = self.atom()
        return exponent

    def term(self):
        tok = self.peek()
        if tok is not None and tok.isdigit():
            return OrdCNF.nat(self.nat())
        if tok != "w":
            raise ParseError(f"expected 'w' or a natural, got {tok!r}")
        exponent = self.power()
        coeff = 1
        if self.peek() == "*":
            self.take("*")
            coeff = self.nat()
        return OrdCNF(((exponent, coeff),)) if coeff else ZERO

    def atom(self):
        tok = self.peek()
        if tok is not None and tok.isdigit():
            return OrdCNF.nat(self.nat())
        if tok == "(":
            self.take("(")
            value = self.ordinal()
            self.take(")")
            return value
        if tok == "w":
            return omega_pow(self.power())
        raise ParseError(f"unexpected token {tok!r}")


def parse_ordinal(text: str) -> OrdCNF:
    parser = _Parser(text)
    if not parser.tokens:
        raise ParseError("empty ordinal literal")
    value = parser.ordinal()
    if parser.peek() is not None:
        raise ParseError(f"trailing input at token {parser.i}: {parser.peek()!r}")
    return value


def _format_exponent(e: OrdCNF) -> str:
    text = format_ordinal(e)
    bare = e.is_finite() or (len(e.terms) == 1 and e.terms[0][1] == 1)
    return text if bare else f"({text})"


def format_ordinal(a: OrdCNF) -> str:
    if not a.terms:
        return "0"
    parts = []
    for e, c in a.terms:
        if not e.terms:
            parts.append(str(c))
            continue
        text = "w" if e == ONE else f"w^{_format_exponent(e)}"
        parts.append(text if c == 1 else f"{text}*{c}")
    return "+".join(parts)
