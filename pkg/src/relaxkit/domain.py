"""Finite logical domains, binary functions, quotients and fiber unions."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from relaxkit.config import DEFAULT_POWERSET_BOUND
from relaxkit.errors import (
    DomainTooLarge,
    DuplicateLabel,
    NotEquivalence,
    ParseError,
    ShapeMismatch,
    UnknownLabel,
)


@dataclass(frozen=True)
class FinDomain:
    """Ordered, pairwise distinct labels; equality is string equality."""

    labels: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        labels = tuple(self.labels)
        index = {}
        for i, label in enumerate(labels):
            if not isinstance(label, str):
                raise ShapeMismatch(label, "labels must be strings")
            if label in index:
                raise DuplicateLabel(label)
            index[label] = i
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_index", index)

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __contains__(self, label):
        return label in self._index

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(label) from None

    def to_json(self) -> dict:
        return {"labels": list(self.labels)}

    @classmethod
    def from_json(cls, doc) -> FinDomain:
        if not isinstance(doc, dict) or not isinstance(doc.get("labels"), list):
            raise ParseError('expected {"labels": [...]}')
        return make_domain(doc["labels"])


def make_domain(labels: Iterable[str]) -> FinDomain:
    return FinDomain(tuple(labels))


@dataclass(frozen=True)
class BinFn:
    """A y/n function on a domain, kept as a bit vector (bit i = element i)."""

    domain: FinDomain
    mask: int = 0

    def __post_init__(self):
        if self.mask < 0 or self.mask >> len(self.domain):
            raise ShapeMismatch("mask", f"does not fit a domain of size {len(self.domain)}")

    @classmethod
    def from_bits(cls, domain: FinDomain, bits: Sequence[bool]) -> BinFn:
        if len(bits) != len(domain):
            raise ShapeMismatch("bits", f"expected {len(domain)} values, got {len(bits)}")
        return cls(domain, sum(1 << i for i, b in enumerate(bits) if b))

    @classmethod
    def from_support(cls, domain: FinDomain, support: Iterable[str]) -> BinFn:
        return cls(domain, sum(1 << domain.index(x) for x in set(support)))

    @property
    def bits(self) -> tuple[bool, ...]:
        return tuple(bool(self.mask >> i & 1) for i in range(len(self.domain)))

    def __call__(self, label: str) -> bool:
        return bool(self.mask >> self.domain.index(label) & 1)

    def support(self) -> list[str]:
        return [x for i, x in enumerate(self.domain.labels) if self.mask >> i & 1]

    def negate(self) -> BinFn:
        return BinFn(self.domain, ~self.mask & ((1 << len(self.domain)) - 1))

    def bitstring(self) -> str:
        return "".join("1" if b else "0" for b in self.bits)


def is_empty(h: BinFn) -> bool:
    """Detects the empty function."""
    return h.mask == 0


def powerset(A: FinDomain, bound: int = DEFAULT_POWERSET_BOUND) -> list[BinFn]:
    """All binary functions on ``A`` in binary-counter order (element 0 lowest)."""
    if len(A) > bound:
        raise DomainTooLarge(len(A), bound)
    return [BinFn(A, m) for m in range(1 << len(A))]


@dataclass(frozen=True)
class EqvTable:
    domain: FinDomain
    pairs: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        n = len(self.domain)
        rows = tuple(tuple(bool(v) for v in row) for row in self.pairs)
        if len(rows) != n or any(len(row) != n for row in rows):
            raise ShapeMismatch("pairs", f"expected a {n}x{n} table")
        object.__setattr__(self, "pairs", rows)

    def __call__(self, x: str, y: str) -> bool:
        return self.pairs[self.domain.index(x)][self.domain.index(y)]

    def validate(self) -> None:
        """Raise :class:`NotEquivalence` with the first failing witness."""
        labels, p = self.domain.labels, self.pairs
        n = len(labels)
        for i in range(n):
            if not p[i][i]:
                raise NotEquivalence("reflexive", (labels[i],))
        for i in range(n):
            for j in range(n):
                if p[i][j] and not p[j][i]:
                    raise NotEquivalence("symmetric", (labels[i], labels[j]))
        for i in range(n):
            for j in range(n):
                if not p[i][j]:
                    continue
                for k in range(n):
                    if p[j][k] and not p[i][k]:
                        raise NotEquivalence("transitive", (labels[i], labels[j], labels[k]))

    @classmethod
    def from_json(cls, doc) -> EqvTable:
        try:
            return cls(make_domain(doc["labels"]), doc["pairs"])
        except (KeyError, TypeError):
            raise ParseError('expected {"labels": [...], "pairs": [[...], ...]}') from None

    @classmethod
    def from_predicate(cls, A: FinDomain, pred) -> EqvTable:
        return cls(A, tuple(tuple(bool(pred(x, y)) for y in A) for x in A))


def quotient(eqv: EqvTable) -> tuple[FinDomain, dict[str, str]]:
    """Domain of equivalence classes and the projection onto it.

    Each class is labelled by its lexicographically least member; classes are
    listed in order of their first member in the domain.
    """
    eqv.validate()
    labels, p = eqv.domain.labels, eqv.pairs
    projection: dict[str, str] = {}
    classes: list[str] = []
    for i, x in enumerate(labels):
        if x in projection:
            continue
        members = [labels[j] for j in range(len(labels)) if p[i][j]]
        name = min(members)
        classes.append(name)
        for y in members:
            projection[y] = name
    return make_domain(classes), projection


def _escape(label: str) -> str:
    return (
        label.replace("\\", "\\\\").replace(",", "\\,").replace("(", "\\(").replace(")", "\\)")
    )


def pair_label(b: str, x: str) -> str:
    """Injective string encoding of the pair (b, x)."""
    return f"({_escape(b)},{_escape(x)})"


def union_of_fibers(
    B: FinDomain, fibers: Mapping[str, FinDomain]
) -> tuple[FinDomain, dict[str, tuple[str, str]]]:
    """Disjoint union of the fibers over ``B`` and its projection.

    The projection maps each union label to the pair (b, fiber label), so two
    elements are equal exactly when both components are equal.
    """
    if set(fibers) - set(B.labels):
        raise UnknownLabel(sorted(set(fibers) - set(B.labels))[0])
    labels = []
    projection = {}
    for b in B:
        for x in fibers.get(b, FinDomain(())):
            label = pair_label(b, x)
            labels.append(label)
            projection[label] = (b, x)
    return make_domain(labels), projection


def fiber_equal(projection: Mapping[str, tuple[str, str]], x: str, y: str) -> bool:
    """Equality on a fiber union from the base equality and the fiber equality."""
    (bx, ux), (by, uy) = projection[x], projection[y]
    return bx == by and ux == uy


def product(A: FinDomain, B: FinDomain) -> FinDomain:
    """A x B as the fiber union with constant fiber ``B``."""
    return union_of_fibers(A, {a: B for a in A})[0]


def load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
