"""Finite membership-like relations: well-foundedness, extensionality,
well-founded recursion and the Mostowski collapse into Ackermann codes.

An edge ``(x, y)`` means "x is an element of y".
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Any, Callable, Iterable, Mapping, Sequence

from relaxkit import hf
from relaxkit.config import DEFAULT_BIT_BUDGET
from relaxkit.domain import FinDomain, make_domain
from relaxkit.errors import NotWellFounded, ParseError, ShapeMismatch, UnknownLabel
from relaxkit.order import UNDEFINED


@dataclass(frozen=True)
class WFGraph:
    nodes: FinDomain
    edges: tuple[tuple[str, str], ...]

    def __post_init__(self):
        edges = tuple((x, y) for x, y in self.edges)
        if len(set(edges)) != len(edges):
            raise ShapeMismatch("edges", "duplicate edge")
        for x, y in edges:
            for v in (x, y):
                if v not in self.nodes:
                    raise UnknownLabel(v)
        object.__setattr__(self, "edges", edges)
        preds: dict[str, list[str]] = {v: [] for v in self.nodes}
        succs: dict[str, list[str]] = {v: [] for v in self.nodes}
        for x, y in edges:
            preds[y].append(x)
            succs[x].append(y)
        # predecessor lists in canonical node order
        for v in preds:
            preds[v].sort(key=self.nodes.index)
            succs[v].sort(key=self.nodes.index)
        object.__setattr__(self, "_preds", {v: tuple(p) for v, p in preds.items()})
        object.__setattr__(self, "_succs", {v: tuple(s) for v, s in succs.items()})

    @classmethod
    def build(cls, nodes: Sequence[str], edges: Iterable[tuple[str, str]]) -> WFGraph:
        return cls(make_domain(nodes), tuple(edges))

    def predecessors(self, y: str) -> tuple[str, ...]:
        """The elements of y: {x : (x, y) is an edge}."""
        return self._preds[y]

    def successors(self, x: str) -> tuple[str, ...]:
        return self._succs[x]

    def to_json(self) -> dict:
        return {"nodes": list(self.nodes.labels), "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, doc) -> WFGraph:
        try:
            return cls.build(doc["nodes"], [tuple(e) for e in doc["edges"]])
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, (UnknownLabel, ShapeMismatch)):
                raise
            raise ParseError('expected {"nodes": [...], "edges": [[x, y], ...]}') from None


def check_well_founded(G: WFGraph) -> list[str] | None:
    """None when the relation is acyclic, otherwise a cycle as a node list.

    On a finite relation acyclicity is the same as every nonempty set of
    nodes having a minimal element.
    """
    WHITE, GREY, BLACK = 0, 1, 2
    color = {v: WHITE for v in G.nodes}
    for root in G.nodes:
        if color[root] != WHITE:
            continue
        path = [root]
        color[root] = GREY
        iters = [iter(G.successors(root))]
        while iters:
            nxt = next(iters[-1], None)
            if nxt is None:
                color[path.pop()] = BLACK
                iters.pop()
            elif color[nxt] == GREY:
                return path[path.index(nxt):]
            elif color[nxt] == WHITE:
                color[nxt] = GREY
                path.append(nxt)
                iters.append(iter(G.successors(nxt)))
    return None


def check_extensional(G: WFGraph) -> tuple[str, str] | None:
    """None when distinct nodes have distinct element sets, else the first clash."""
    seen: dict[frozenset, str] = {}
    for v in G.nodes:
        key = frozenset(G.predecessors(v))
        if key in seen:
            return seen[key], v
        seen[key] = v
    return None


def topological_order(G: WFGraph) -> list[str]:
    """Elements before the sets containing them; ties broken by node order."""
    cycle = check_well_founded(G)
    if cycle is not None:
        raise NotWellFounded(cycle)
    indegree = {v: len(G.predecessors(v)) for v in G.nodes}
    ready = [v for v in G.nodes if indegree[v] == 0]
    out = []
    while ready:
        v = ready.pop(0)
        out.append(v)
        for w in G.successors(v):
            indegree[w] -= 1
            if indegree[w] == 0:
                ready.append(w)
        ready.sort(key=G.nodes.index)
    return out


def ancestors(G: WFGraph, a: str) -> set[str]:
    """tcl[a]: everything reachable from a by stepping to elements."""
    seen = set()
    stack = list(G.predecessors(a))
    while stack:
        x = stack.pop()
        if x not in seen:
            seen.add(x)
            stack.extend(G.predecessors(x))
    return seen


def wf_recursion(
    G: WFGraph,
    rule: Callable[[Mapping[str, Any], str], Any],
    order: Sequence[str] | None = None,
) -> dict[str, Any]:
    """The unique maximal rule-recursive partial map on a well-founded graph.

    ``rule(f, a)`` sees ``f`` restricted to the transitive closure of ``a``
    (``a`` itself excluded) and returns a value or ``UNDEFINED``. A node
    whose closure is not fully defined stays undefined, keeping the domain
    transitive. ``order`` may name any topological order; the result does
    not depend on it.
    """
    if order is None:
        order = topological_order(G)
    else:
        cycle = check_well_founded(G)
        if cycle is not None:
            raise NotWellFounded(cycle)
        _check_topological(G, order)
    values: dict[str, Any] = {}
    for a in order:
        below = ancestors(G, a)
        if not below <= values.keys():
            continue
        v = rule(MappingProxyType({x: values[x] for x in below}), a)
        if v is not UNDEFINED:
            values[a] = v
    return {v: values[v] for v in G.nodes if v in values}


def _check_topological(G, order):
    if sorted(order, key=G.nodes.index) != list(G.nodes.labels) or len(order) != len(G.nodes):
        raise ShapeMismatch("order", "must list every node once")
    pos = {v: i for i, v in enumerate(order)}
    for x, y in G.edges:
        if pos[x] >= pos[y]:
            raise ShapeMismatch("order", f"{x!r} must come before {y!r}")


@dataclass(frozen=True)
class Collapse:
    codes: dict[str, int]
    injective: bool
    clash: tuple[str, str] | None = None


def collapse(
    G: WFGraph, order: Sequence[str] | None = None, budget: int = DEFAULT_BIT_BUDGET
) -> Collapse:
    """Send each node to the Ackermann code of the set of its elements' codes.

    Edges become memberships whenever G is extensional, and then the map is
    injective with a transitive image. Non-extensional graphs still collapse;
    the lost injectivity is reported in ``clash``.
    """

    def rule(f, a):
        return hf.encode({f[x] for x in G.predecessors(a)}, budget)

    codes = wf_recursion(G, rule, order)
    first: dict[int, str] = {}
    clash = None
    for v in G.nodes:
        c = codes[v]
        if c in first:
            clash = (first[c], v)
            break
        first[c] = v
    return Collapse(codes, clash is None, clash)


def membership_graph(n: int) -> WFGraph:
    """Nodes: the transitive closure of n plus n itself, labelled by code."""
    codes = sorted(set(hf.decode(hf.transitive_closure(n))) | {n})
    edges = [(str(m), str(k)) for k in codes for m in hf.decode(k)]
    return WFGraph.build([str(c) for c in codes], edges)


def height_rule(G: WFGraph):
    """Rule for the epsilon-height: 0 at empty nodes, else 1 + max over elements."""

    def rule(f, a):
        preds = G.predecessors(a)
        return 1 + max(f[x] for x in preds) if preds else 0

    return rule
