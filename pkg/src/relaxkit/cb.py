"""Explicit Cantor-Bernstein bijections.

Given injections f: A -> B and g: B -> A, put J = g o f, let j be the
image of J and k the image of g. The modified map

    Jhat[a] = a       if a lies in J^n[k] - J^n[j] for some n >= 0
    Jhat[a] = J[a]    otherwise

is a bijection A -> k, and g^-1 o Jhat is a bijection A -> B. An element
is in some J^n[k - j] exactly when walking back along J from it ends in k
outside j; that walk is what :func:`cantor_bernstein` does. It visits each
element once, so the search for n never runs past |A| steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from relaxkit.domain import FinDomain, make_domain
from relaxkit.errors import NotInjective, ParseError, ShapeMismatch, UnknownLabel


@dataclass(frozen=True)
class InjectionTable:
    source: FinDomain
    target: FinDomain
    mapping: Mapping[str, str]
    name: str = "f"

    def __post_init__(self):
        mapping = dict(self.mapping)
        for x in mapping:
            if x not in self.source:
                raise UnknownLabel(x)
        seen: dict[str, str] = {}
        for x in self.source:
            if x not in mapping:
                raise ShapeMismatch(x, f"{self.name} has no value here")
            y = mapping[x]
            if y not in self.target:
                raise UnknownLabel(y)
            if y in seen:
                raise NotInjective(self.name, (seen[y], x))
            seen[y] = x
        object.__setattr__(self, "mapping", mapping)

    def __call__(self, x: str) -> str:
        return self.mapping[x]

    def image(self) -> set[str]:
        return set(self.mapping.values())

    def inverse(self) -> dict[str, str]:
        return {y: x for x, y in self.mapping.items()}


@dataclass(frozen=True)
class CBResult:
    bijection: dict[str, str]
    cases: dict[str, str]  # "fixed" | "shifted"


def cantor_bernstein(f: InjectionTable, g: InjectionTable) -> CBResult:
    if f.source != g.target or f.target != g.source:
        raise ShapeMismatch("f/g", "f must map A -> B and g must map B -> A")
    A = f.source
    J = {a: g(f(a)) for a in A}
    J_inv = {v: a for a, v in J.items()}
    k = g.image()
    g_inv = g.inverse()

    # Walk back along J; memoize verdicts so every element is visited once.
    verdict: dict[str, bool] = {}
    for a in A:
        if a in verdict:
            continue
        chain = []
        on_chain = set()
        x = a
        while x not in verdict:
            if x not in J_inv:
                # x is outside j: it starts a chain, fixed iff it is in k
                verdict[x] = x in k
                break
            if x in on_chain:
                # a cycle of J never meets k - j
                verdict[x] = False
                break
            chain.append(x)
            on_chain.add(x)
            x = J_inv[x]
        result = verdict[x]
        for y in chain:
            verdict[y] = result

    bijection = {}
    cases = {}
    for a in A:
        if verdict[a]:
            bijection[a] = g_inv[a]
            cases[a] = "fixed"
        else:
            bijection[a] = g_inv[J[a]]
            cases[a] = "shifted"
    return CBResult(bijection, cases)


def from_json(doc) -> tuple[InjectionTable, InjectionTable]:
    try:
        A = make_domain(doc["A"]["labels"])
        B = make_domain(doc["B"]["labels"])
        f = InjectionTable(A, B, doc["f"], name="f")
        g = InjectionTable(B, A, doc["g"], name="g")
    except (KeyError, TypeError):
        raise ParseError('expected {"A": {...}, "B": {...}, "f": {...}, "g": {...}}') from None
    return f, g
