"""Finite well-orders and recursion along them.

A recursion rule is any callable ``rule(f, a)`` where ``f`` is the partial
function built so far restricted to the elements below ``a``; it returns the
value at ``a`` or :data:`UNDEFINED`. Rules must be deterministic; the engine
never inspects them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Any, Callable, Mapping, Sequence

from relaxkit.domain import BinFn, FinDomain, make_domain, pair_label
from relaxkit.errors import (
    BadBound,
    BadChoice,
    NonTransitiveSeed,
    NotLinear,
    ParseError,
    ShapeMismatch,
    UnknownLabel,
)


class _Undefined:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNDEFINED"

    def __reduce__(self):
        return (_Undefined, ())


UNDEFINED = _Undefined()

RecursionRule = Callable[["PartialFn", str], Any]


@dataclass(frozen=True)
class WellOrder:
    domain: FinDomain
    position: tuple[int, ...]

    def __post_init__(self):
        position = tuple(self.position)
        if sorted(position) != list(range(len(self.domain))):
            raise ShapeMismatch("position", "must be a permutation of 0..n-1")
        object.__setattr__(self, "position", position)
        ordered = [None] * len(position)
        for label, p in zip(self.domain.labels, position):
            ordered[p] = label
        object.__setattr__(self, "_ordered", tuple(ordered))

    @classmethod
    def from_sequence(cls, labels: Sequence[str]) -> WellOrder:
        """The order in which ``labels`` are listed."""
        return cls(make_domain(labels), tuple(range(len(labels))))

    def __len__(self):
        return len(self.position)

    def elements(self) -> tuple[str, ...]:
        """Labels from least to greatest."""
        return self._ordered

    def rank(self, label: str) -> int:
        return self.position[self.domain.index(label)]

    def leq(self, x: str, y: str) -> bool:
        return self.rank(x) <= self.rank(y)

    def below(self, a: str) -> tuple[str, ...]:
        """The initial segment (#<a)."""
        return self._ordered[: self.rank(a)]

    def initial(self, size: int) -> tuple[str, ...]:
        return self._ordered[:size]

    def to_json(self) -> dict:
        return {"labels": list(self.domain.labels), "position": list(self.position)}

    @classmethod
    def from_json(cls, doc) -> WellOrder:
        try:
            return cls(make_domain(doc["labels"]), tuple(doc["position"]))
        except (KeyError, TypeError):
            raise ParseError('expected {"labels": [...], "position": [...]}') from None


class PartialFn(Mapping):
    """A partial function on a well-order whose domain is an initial segment."""

    def __init__(self, order: WellOrder, values: Mapping[str, Any] | None = None):
        values = dict(values or {})
        for x in values:
            if x not in order.domain:
                raise UnknownLabel(x)
        elements = order.elements()
        n = len(values)
        missing = [x for x in elements[:n] if x not in values]
        if missing:
            raise NonTransitiveSeed(missing[0])
        self.order = order
        self._values = {x: values[x] for x in elements[:n]}

    def __getitem__(self, label):
        return self._values[label]

    def __iter__(self):
        return iter(self._values)

    def __len__(self):
        return len(self._values)

    def __eq__(self, other):
        if isinstance(other, PartialFn):
            return self.order == other.order and self._values == other._values
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._values.items()))

    def __repr__(self):
        return f"PartialFn({self._values!r})"

    def dom(self) -> tuple[str, ...]:
        return tuple(self._values)

    def is_total(self) -> bool:
        return len(self._values) == len(self.order)

    def restrict_below(self, a: str) -> PartialFn:
        """f restricted to dom(f) intersected with (#<a)."""
        keep = self.order.below(a)
        return PartialFn(self.order, {x: self._values[x] for x in keep if x in self._values})

    def image(self) -> list:
        return list(self._values.values())

    def values_list(self) -> list:
        return list(self._values.values())


def check_well_order(A: FinDomain, leq: Sequence[Sequence[bool]]) -> WellOrder:
    """Validate a comparison table as a linear order and return its ranks.

    On a finite domain every linear order is a well-order.
    """
    n = len(A)
    table = [[bool(v) for v in row] for row in leq]
    if len(table) != n or any(len(row) != n for row in table):
        raise ShapeMismatch("leq", f"expected a {n}x{n} table")
    labels = A.labels
    for i in range(n):
        for j in range(i, n):
            if not (table[i][j] or table[j][i]):
                raise NotLinear("totality", (labels[i], labels[j]))
    for i in range(n):
        for j in range(n):
            if i != j and table[i][j] and table[j][i]:
                raise NotLinear("antisymmetry", (labels[i], labels[j]))
    for i in range(n):
        for j in range(n):
            if not table[i][j]:
                continue
            for k in range(n):
                if table[j][k] and not table[i][k]:
                    raise NotLinear("transitivity", (labels[i], labels[j], labels[k]))
    position = tuple(sum(1 for j in range(n) if j != i and table[j][i]) for i in range(n))
    return WellOrder(A, position)


def recursive_extension(A: WellOrder, rule: RecursionRule, seed: Mapping[str, Any]) -> PartialFn:
    """The unique maximal recursive extension of ``seed``.

    Agrees with ``seed`` on its domain and applies ``rule`` at each later
    element in order, stopping at the first element where it is undefined.
    """
    f = seed if isinstance(seed, PartialFn) and seed.order == A else PartialFn(A, seed)
    values = dict(f)
    for a in A.elements()[len(values):]:
        v = rule(PartialFn(A, values), a)
        if v is UNDEFINED:
            break
        values[a] = v
    return PartialFn(A, values)


def recursion(A: WellOrder, rule: RecursionRule) -> PartialFn:
    """The unique maximal ``rule``-recursive function on ``A``."""
    return recursive_extension(A, rule, {})


def is_recursive(f: PartialFn, rule: RecursionRule) -> bool:
    """Whether f[c] = rule(f restricted below c, c) for every c in dom(f)."""
    return all(f[c] == rule(f.restrict_below(c), c) for c in f.dom())


def is_maximal(f: PartialFn, rule: RecursionRule) -> bool:
    """Full domain, or the rule is undefined at the least element outside it."""
    if f.is_total():
        return True
    a = f.order.elements()[len(f)]
    return rule(f, a) is UNDEFINED


def order_isomorphism(A: WellOrder, B: WellOrder) -> PartialFn:
    """Maximal order-isomorphism from an initial segment of A onto one of B.

    Runs the recursion rule "least element of B outside the image so far".
    """
    b_elements = B.elements()

    def least_unused(f: PartialFn, a: str):
        used = set(f.image())
        for b in b_elements:
            if b not in used:
                return b
        return UNDEFINED

    return recursion(A, least_unused)


def order_type(A: WellOrder) -> int:
    """Class of ``A`` in the universal well-order; for finite orders, the size."""
    return len(A)


def well_order_via_choice(A: FinDomain, choose: Callable[[BinFn], str]) -> WellOrder:
    """Enumerate ``A`` by repeatedly choosing outside what is already chosen.

    ``choose`` receives the characteristic function of the image so far and
    must return a label outside it.
    """
    steps = WellOrder.from_sequence([str(i) for i in range(len(A))])

    def rule(f: PartialFn, step: str):
        taken = BinFn.from_support(A, f.image())
        if taken.mask == (1 << len(A)) - 1:
            return UNDEFINED
        label = choose(taken)
        if label not in A or taken(label):
            raise BadChoice(int(step), label)
        return label

    enumeration = recursion(steps, rule).values_list()
    position = [0] * len(A)
    for p, label in enumerate(enumeration):
        position[A.index(label)] = p
    return WellOrder(A, tuple(position))


def least_unused_choice(taken: BinFn) -> str:
    """Choice rule: the first label, in domain order, outside ``taken``."""
    for i, label in enumerate(taken.domain.labels):
        if not taken.mask >> i & 1:
            return label
    raise ValueError("no unused label")


def canonical_compare(p: tuple[int, int], q: tuple[int, int]) -> int:
    """Canonical product comparison on rank pairs: max first, then lexicographic."""
    (a1, b1), (a2, b2) = p, q
    m1, m2 = max(a1, b1), max(a2, b2)
    if m1 != m2:
        return -1 if m1 < m2 else 1
    if (a1, b1) == (a2, b2):
        return 0
    return -1 if (a1 < a2 or (a1 == a2 and b1 < b2)) else 1


def canonical_product(A: WellOrder, d: int) -> WellOrder:
    """Canonical order on A x (first d elements of A).

    Labels are ``pair_label(x, y)``, listed x-major in A-order.
    """
    if not 0 <= d <= len(A):
        raise BadBound(d, len(A))
    elems = A.elements()
    pairs = [(i, j) for i in range(len(elems)) for j in range(d)]
    ranked = sorted(pairs, key=cmp_to_key(canonical_compare))
    where = {p: r for r, p in enumerate(ranked)}
    labels = [pair_label(elems[i], elems[j]) for i, j in pairs]
    return WellOrder(make_domain(labels), tuple(where[p] for p in pairs))

