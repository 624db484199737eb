"""Coherent families of functions on initial segments and their diagonal limits.

A family assigns to each position ``a`` a function ``f_a`` on positions
``0..a`` such that ``f_a`` restricted to ``0..b`` is ``f_b`` whenever
``b <= a``. Its limit is the diagonal ``F[a] = f_a[a]``. Finite families
always have the top function as limit. Families indexed by the naturals
are given by finite descriptions, and a sub-theory is given as a pair of
predicates: one on eventually-constant sequences, one on finite stages.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Sequence

from relaxkit.config import DEFAULT_PROBE_BOUND
from relaxkit.errors import NotCoherent, ParseError, ShapeMismatch, Unclassifiable
from relaxkit.order import WellOrder


@dataclass(frozen=True)
class FiniteCoherentFamily:
    order: WellOrder
    funcs: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        funcs = tuple(tuple(f) for f in self.funcs)
        if len(funcs) != len(self.order):
            raise ShapeMismatch("funcs", f"expected {len(self.order)} functions")
        for a, f in enumerate(funcs):
            if len(f) != a + 1:
                raise ShapeMismatch(a, f"function at position {a} needs {a + 1} values")
        object.__setattr__(self, "funcs", funcs)

    @classmethod
    def from_funcs(cls, funcs: Sequence[Sequence[int]]) -> FiniteCoherentFamily:
        order = WellOrder.from_sequence([str(i) for i in range(len(funcs))])
        return cls(order, tuple(tuple(f) for f in funcs))

    @classmethod
    def from_json(cls, doc) -> FiniteCoherentFamily:
        try:
            funcs = doc["funcs"]
            if "order" in doc:
                return cls(WellOrder.from_json(doc["order"]), tuple(tuple(f) for f in funcs))
            return cls.from_funcs(funcs)
        except (KeyError, TypeError):
            raise ParseError('expected {"order": {...}, "funcs": [[...], ...]}') from None


def check_coherent(fam: FiniteCoherentFamily) -> tuple[int, int, int] | None:
    """None if coherent, else the least violation (a, b, position), b < a."""
    funcs = fam.funcs
    for a in range(len(funcs)):
        for b in range(a):
            for p in range(b + 1):
                if funcs[a][p] != funcs[b][p]:
                    return a, b, p
    return None


def limit(fam: FiniteCoherentFamily) -> list[int]:
    violation = check_coherent(fam)
    if violation is not None:
        raise NotCoherent(violation)
    F = [f[a] for a, f in enumerate(fam.funcs)]
    assert not F or F == list(fam.funcs[-1]), "diagonal of a coherent family must be its top function"
    return F


@dataclass(frozen=True)
class EvConstSeq:
    """prefix followed by the tail value forever; prefix never ends in the tail."""

    prefix: tuple[int, ...]
    tail: int

    def __post_init__(self):
        prefix = tuple(self.prefix)
        if prefix and prefix[-1] == self.tail:
            raise ShapeMismatch("prefix", "must not end in the tail value")
        object.__setattr__(self, "prefix", prefix)

    @classmethod
    def normalized(cls, prefix: Sequence[int], tail: int) -> EvConstSeq:
        prefix = list(prefix)
        while prefix and prefix[-1] == tail:
            prefix.pop()
        return cls(tuple(prefix), tail)

    def __getitem__(self, n: int) -> int:
        return self.prefix[n] if n < len(self.prefix) else self.tail

    def head(self, length: int) -> tuple[int, ...]:
        """The first ``length`` values."""
        p = self.prefix[:length]
        return p + (self.tail,) * (length - len(p))

    def __str__(self):
        return "".join(map(str, self.prefix)) + f"({self.tail})"


_EVCONST = re.compile(r"([01]*)\(([01])\)")


def parse_evconst(text: str) -> EvConstSeq:
    """Parse ``10(0)``: prefix bits, then the repeated bit in parentheses."""
    m = _EVCONST.fullmatch(text.strip())
    if m is None:
        raise ParseError(f"expected bits followed by '(bit)', got {text!r}")
    return EvConstSeq.normalized([int(c) for c in m.group(1)], int(m.group(2)))


@dataclass(frozen=True)
class OmegaFamily:
    """A coherent family indexed by the naturals.

    ``constant``: every f_n is constantly ``value``. ``step``: every f_n is 1
    on positions <= n (the cumulative indicator). ``explicit``: f_n is the
    restriction of ``stages[min(n, len(stages) - 1)]`` to positions <= n.
    """

    kind: str
    value: int = 0
    stages: tuple[EvConstSeq, ...] = ()

    def __post_init__(self):
        if self.kind not in ("constant", "step", "explicit"):
            raise ShapeMismatch("kind", f"unknown family kind {self.kind!r}")
        if self.kind == "explicit":
            if not self.stages:
                raise ShapeMismatch("stages", "explicit family needs at least one stage")
            object.__setattr__(self, "stages", tuple(self.stages))

    @classmethod
    def constant(cls, c: int) -> OmegaFamily:
        return cls("constant", value=c)

    @classmethod
    def step(cls) -> OmegaFamily:
        return cls("step")

    @classmethod
    def explicit(cls, stages: Sequence[EvConstSeq], probe_bound: int = DEFAULT_PROBE_BOUND) -> OmegaFamily:
        fam = cls("explicit", stages=tuple(stages))
        if len(fam.stages) > probe_bound:
            raise Unclassifiable(probe_bound)
        violation = fam.first_violation()
        if violation is not None:
            raise NotCoherent(violation)
        return fam

    def _seq(self, n: int) -> EvConstSeq:
        return self.stages[min(n, len(self.stages) - 1)]

    def stage(self, n: int) -> tuple[int, ...]:
        """f_n on positions 0..n."""
        if self.kind == "constant":
            return (self.value,) * (n + 1)
        if self.kind == "step":
            return (1,) * (n + 1)
        return self._seq(n).head(n + 1)

    def diagonal(self, n: int) -> int:
        if self.kind == "constant":
            return self.value
        if self.kind == "step":
            return 1
        return self._seq(n)[n]

    def first_violation(self) -> tuple[int, int, int] | None:
        """Coherence of consecutive stages; past the last explicit stage f_n is fixed."""
        if self.kind != "explicit":
            return None
        for a in range(1, len(self.stages)):
            cur, prev = self.stage(a), self.stage(a - 1)
            for p in range(a):
                if cur[p] != prev[p]:
                    return a, a - 1, p
        return None


def omega_limit(fam: OmegaFamily, probe_bound: int = DEFAULT_PROBE_BOUND) -> EvConstSeq:
    """The diagonal F[n] = f_n[n] as an eventually constant sequence."""
    if fam.kind == "constant":
        return EvConstSeq((), fam.value)
    if fam.kind == "step":
        return EvConstSeq((), 1)
    last = fam.stages[-1]
    # from here on every diagonal entry comes from the tail of the last stage
    settle = max(len(fam.stages) - 1, len(last.prefix))
    if settle >= probe_bound:
        raise Unclassifiable(probe_bound)
    return EvConstSeq.normalized([fam.diagonal(n) for n in range(settle)], last.tail)


LambdaPred = Callable[[EvConstSeq], bool]
StagePred = Callable[[Sequence[int]], bool]


def extendable(lambda_pred: LambdaPred) -> StagePred:
    """Stage predicate: the finite list extends to some admissible sequence."""
    return lambda bits: any(lambda_pred(EvConstSeq.normalized(bits, t)) for t in (0, 1))


BUILTIN_LAMBDAS: dict[str, LambdaPred] = {
    "eventually-zero": lambda s: s.tail == 0,
    "eventually-constant": lambda s: True,
    "all": lambda s: True,
}


@dataclass(frozen=True)
class LambdaVerdict:
    stages_admissible: bool
    first_rejected_stage: int | None
    limit: EvConstSeq
    limit_admissible: bool

    @property
    def counterexample(self) -> bool:
        return self.stages_admissible and not self.limit_admissible

    @property
    def verdict(self) -> str:
        return "counterexample" if self.counterexample else "no counterexample"


def lambda_check(
    fam: OmegaFamily,
    lambda_pred: LambdaPred,
    restriction_pred: StagePred | None = None,
    probe_bound: int = DEFAULT_PROBE_BOUND,
) -> LambdaVerdict:
    """Test the coherent limit condition for a sub-theory on one family.

    Every stage f_n, n < ``probe_bound``, goes through ``restriction_pred``
    (default: extendable to a ``lambda_pred`` sequence); the limit goes
    through ``lambda_pred``. A counterexample is all stages admitted and the
    limit rejected.
    """
    if restriction_pred is None:
        restriction_pred = extendable(lambda_pred)
    lim = omega_limit(fam, probe_bound)
    rejected = None
    for n in range(probe_bound):
        if not restriction_pred(fam.stage(n)):
            rejected = n
            break
    return LambdaVerdict(rejected is None, rejected, lim, bool(lambda_pred(lim)))
