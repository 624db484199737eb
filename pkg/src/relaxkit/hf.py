"""Hereditarily finite sets under Ackermann coding.

A natural number ``n`` codes the set of codes ``m`` whose bit ``m`` is set in
``n``; every natural is a valid code, and membership is a bit test. Codes
are plain ints. Operations that could produce enormous codes take a
``budget`` in bits and raise :class:`CodeTooLarge` rather than truncate.

Set literals: ``set := '{' (set (',' set)*)? '}'``, whitespace ignored.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable

from relaxkit import kernels
from relaxkit.config import DEFAULT_BETH_BASE, DEFAULT_BIT_BUDGET, DEFAULT_POWERSET_BOUND
from relaxkit.errors import (
    BudgetExceeded,
    CodeTooLarge,
    DomainTooLarge,
    DuplicateElement,
    ParseError,
)

HFCode = int


def _check_code(n):
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"not a code: {n!r}")


def mem(m: HFCode, n: HFCode) -> bool:
    """m is an element of n: bit m of n is set."""
    _check_code(m)
    _check_code(n)
    return bool(n >> m & 1)


def decode(n: HFCode) -> list[HFCode]:
    """Elements of n, ascending."""
    _check_code(n)
    return kernels.bits_of(n)


def encode(elements: Iterable[HFCode], budget: int = DEFAULT_BIT_BUDGET) -> HFCode:
    elements = list(elements)
    seen = set()
    for e in elements:
        _check_code(e)
        if e in seen:
            raise DuplicateElement(e)
        seen.add(e)
    if elements:
        top = max(elements)
        if top + 1 > budget:
            raise CodeTooLarge(top + 1, budget)
    return kernels.from_bits(elements)


def hf_union(n: HFCode) -> HFCode:
    """Code of the union of the elements of n."""
    out = 0
    for e in decode(n):
        out |= e
    return out


def hf_powerset(
    n: HFCode, bound: int = DEFAULT_POWERSET_BOUND, budget: int = DEFAULT_BIT_BUDGET
) -> HFCode:
    """Code of the set of all subsets of n."""
    elems = decode(n)
    if len(elems) > bound:
        raise DomainTooLarge(len(elems), bound)
    # n itself is the largest subset code
    if n + 1 > budget:
        raise CodeTooLarge(n + 1, budget)
    subsets = [0]
    for e in elems:
        bit = 1 << e
        subsets += [s | bit for s in subsets]
    return kernels.from_bits(subsets)


def hf_separation(n: HFCode, pred: Callable[[HFCode], bool]) -> HFCode:
    """Code of the elements of n satisfying ``pred``."""
    return kernels.from_bits([e for e in decode(n) if pred(e)])


def hf_replacement(
    n: HFCode, f: Callable[[HFCode], HFCode], budget: int = DEFAULT_BIT_BUDGET
) -> HFCode:
    """Code of the image of n under ``f``; repeated values merge."""
    image = {f(e) for e in decode(n)}
    for v in image:
        _check_code(v)
    if image and max(image) + 1 > budget:
        raise CodeTooLarge(max(image) + 1, budget)
    return kernels.from_bits(image)


def hf_choice(n: HFCode) -> HFCode:
    """Least code that is not an element of n."""
    _check_code(n)
    return (~n & (n + 1)).bit_length() - 1


def transitive_closure(n: HFCode) -> HFCode:
    """Code of every code reachable from n by repeatedly taking elements."""
    seen = set()
    stack = decode(n)
    while stack:
        e = stack.pop()
        if e not in seen:
            seen.add(e)
            stack.extend(decode(e))
    return kernels.from_bits(seen)


def is_transitive(n: HFCode) -> bool:
    members = set(decode(n))
    return all(x in members for e in members for x in decode(e))


# Beth miniature and rank.

@lru_cache(maxsize=None)
def _beth(base: int, budget: int, k: int) -> int:
    if k == 0:
        return base
    prev = _beth(base, budget, k - 1)
    if prev + 1 > budget:
        raise BudgetExceeded(k, budget)
    return 1 << prev


@dataclass(frozen=True)
class BethTower:
    """B[0] = base, B[k+1] = 2**B[k], refusing values wider than ``bit_budget``."""

    base: int = DEFAULT_BETH_BASE
    bit_budget: int = DEFAULT_BIT_BUDGET

    def __post_init__(self):
        if self.base < 1 or self.bit_budget < 1:
            raise ValueError("base and bit_budget must be positive")

    def __getitem__(self, k: int) -> int:
        if k < 0:
            raise IndexError(k)
        return _beth(self.base, self.bit_budget, k)

    def values(self) -> list[int]:
        """Every representable value, in order."""
        out = []
        for k in itertools.count():
            try:
                out.append(self[k])
            except BudgetExceeded:
                return out


DEFAULT_TOWER = BethTower()


def beth_mini(k: int, tower: BethTower = DEFAULT_TOWER) -> int:
    return tower[k]


def rank(n: HFCode, tower: BethTower = DEFAULT_TOWER) -> int:
    """Least k with n < B[k]."""
    _check_code(n)
    for k in itertools.count():
        if n < tower[k]:
            return k


def rank_fn(n: HFCode, tower: BethTower = DEFAULT_TOWER) -> int:
    """Rank of n read as a bounded binary function: the max rank of its elements, 0 if empty."""
    best = 0
    for e in decode(n):
        r = rank(e, tower)
        if r > best:
            best = r
    return best


# Literals.

def parse_set(text: str, budget: int = DEFAULT_BIT_BUDGET) -> HFCode:
    s = "".join(text.split())
    pos = 0

    def parse():
        nonlocal pos
        if pos >= len(s) or s[pos] != "{":
            raise ParseError(f"expected '{{' at position {pos}")
        pos += 1
        elems = []
        if pos < len(s) and s[pos] == "}":
            pos += 1
            return 0
        while True:
            elems.append(parse())
            if pos < len(s) and s[pos] == ",":
                pos += 1
                continue
            if pos < len(s) and s[pos] == "}":
                pos += 1
                return encode(elems, budget)
            raise ParseError(f"expected ',' or '}}' at position {pos}")

    code = parse()
    if pos != len(s):
        raise ParseError(f"trailing input at position {pos}")
    return code


def format_set(n: HFCode) -> str:
    return "{" + ",".join(format_set(e) for e in decode(n)) + "}"


# ZFC-1 battery.

@dataclass
class AxiomResult:
    name: str
    status: str  # "pass" | "fail" | "skipped"
    detail: str = ""


@dataclass
class ZFCReport:
    bound: int
    results: list[AxiomResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.status != "fail" for r in self.results)

    def __getitem__(self, name: str) -> AxiomResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def lines(self) -> list[str]:
        out = []
        for r in self.results:
            out.append(f"{r.name}={r.status}" + (f" ({r.detail})" if r.detail else ""))
        return out


def _check_well_founded(bound, tower):
    for n in range(bound):
        rn = rank(n, tower)
        for m in decode(n):
            if rank(m, tower) >= rn:
                return f"witness m={m} n={n}"
    return None


def _check_extensionality(bound):
    for n in range(bound):
        if encode(decode(n)) != n:
            return f"witness n={n}"
    return None


def _check_union(bound):
    for a in range(bound):
        u = hf_union(a)
        members = decode(a)
        for x in decode(u):
            if not any(mem(x, b) for b in members):
                return f"witness a={a} x={x} has no element b of a containing it"
        for b in members:
            for x in decode(b):
                if not mem(x, u):
                    return f"witness a={a} x={x} missing from the union"
    return None


def _check_powerset(bound, powerset_bound, budget):
    skipped = 0
    for a in range(bound):
        elems = decode(a)
        if len(elems) > powerset_bound or a + 1 > budget:
            skipped += 1
            continue
        expected = set()
        for r in range(len(elems) + 1):
            for subset in itertools.combinations(elems, r):
                expected.add(sum(1 << e for e in subset))
        got = hf_powerset(a, powerset_bound, budget)
        if got != kernels.from_bits(expected):
            return f"witness a={a}", skipped
    return None, skipped


def _random_predicates(rng, bound, trials):
    width = max(bound.bit_length(), 1)
    preds = [
        ("nonempty", lambda e: e != 0),
        ("contains-empty", lambda e: bool(e & 1)),
    ]
    for t in range(trials):
        mask = rng.getrandbits(width)
        preds.append((f"random-{t}", lambda e, mask=mask: bool(mask >> e & 1)))
    return preds


def _random_maps(rng, bound, trials):
    width = max(bound.bit_length(), 1)
    maps = [
        ("singleton", lambda e: 1 << e),
        ("union", hf_union),
        ("closure", transitive_closure),
        ("powerset", lambda e: hf_powerset(e)),
    ]
    for t in range(trials):
        table = [rng.randrange(bound) for _ in range(width)]
        maps.append((f"random-{t}", lambda e, table=table: table[e]))
    return maps


def _check_separation(bound, preds):
    for a in range(bound):
        members = decode(a)
        for name, pred in preds:
            got = set(decode(hf_separation(a, pred)))
            if got != {e for e in members if pred(e)} or not got <= set(members):
                return f"witness a={a} predicate={name}"
    return None


def _check_replacement(bound, maps, budget):
    for a in range(bound):
        members = decode(a)
        for name, f in maps:
            got = decode(hf_replacement(a, f, budget))
            if got != sorted({f(e) for e in members}):
                return f"witness a={a} map={name}"
    return None


def _check_choice(bound):
    for a in range(bound):
        if mem(hf_choice(a), a):
            return f"witness a={a}"
    return None


def zfc_check(
    bound: int,
    seed: int = 0,
    trials: int = 3,
    powerset_bound: int = DEFAULT_POWERSET_BOUND,
    budget: int = DEFAULT_BIT_BUDGET,
) -> ZFCReport:
    """Run the translated ZFC-1 axioms over every code below ``bound``.

    Well-foundedness is checked as "membership lowers the base-1 rank".
    Separation and Replacement run fixed structural rules plus ``trials``
    random ones drawn from ``seed``. Infinity has no finite model and is
    always reported as skipped.
    """
    if bound < 2:
        raise ValueError("bound must be at least 2")
    rng = random.Random(seed)
    tower = BethTower(1, budget)
    report = ZFCReport(bound)

    def record(name, witness, extra=""):
        if witness is None:
            report.results.append(AxiomResult(name, "pass", extra))
        else:
            report.results.append(AxiomResult(name, "fail", witness))

    record("well-founded", _check_well_founded(bound, tower))
    record("extensionality", _check_extensionality(bound))
    record("union", _check_union(bound))
    witness, skipped = _check_powerset(bound, powerset_bound, budget)
    record("powerset", witness, f"{skipped} codes over the powerset bound" if skipped else "")
    record("separation", _check_separation(bound, _random_predicates(rng, bound, trials)))
    record("replacement", _check_replacement(bound, _random_maps(rng, bound, trials), budget))
    record("choice", _check_choice(bound))
    report.results.append(AxiomResult("infinity", "skipped", "no finite model"))
    return report
