"""Exception hierarchy.

Every validation failure raised by the library derives from
:class:`RelaxkitError` and carries its witness as attributes, so the CLI can
print it without parsing the message.
"""


class RelaxkitError(ValueError):
    """Base class for all library errors."""


class ParseError(RelaxkitError):
    """Malformed literal or JSON document."""


class DuplicateLabel(RelaxkitError):
    def __init__(self, label):
        self.label = label
        super().__init__(f"duplicate label {label!r}")


class UnknownLabel(RelaxkitError):
    def __init__(self, label):
        self.label = label
        super().__init__(f"unknown label {label!r}")


class ShapeMismatch(RelaxkitError):
    def __init__(self, what, detail=""):
        self.what = what
        super().__init__(f"shape mismatch at {what!r}" + (f": {detail}" if detail else ""))


class NotEquivalence(RelaxkitError):
    def __init__(self, axiom, witness):
        self.axiom = axiom
        self.witness = tuple(witness)
        super().__init__(f"not an equivalence relation: {axiom} fails at {self.witness}")


class DomainTooLarge(RelaxkitError):
    def __init__(self, size, bound):
        self.size = size
        self.bound = bound
        super().__init__(f"domain of size {size} exceeds powerset bound {bound}")


class NotInjective(RelaxkitError):
    def __init__(self, which, witness):
        self.which = which
        self.witness = tuple(witness)
        super().__init__(f"{which} is not injective: {self.witness[0]!r} and {self.witness[1]!r} share a target")


class NotLinear(RelaxkitError):
    def __init__(self, axiom, witness):
        self.axiom = axiom
        self.witness = tuple(witness)
        super().__init__(f"not a linear order: {axiom} fails at {self.witness}")


class NonTransitiveSeed(RelaxkitError):
    def __init__(self, missing):
        self.missing = missing
        super().__init__(f"seed domain is not an initial segment: {missing!r} is undefined below a defined element")


class BadChoice(RelaxkitError):
    def __init__(self, step, label):
        self.step = step
        self.label = label
        super().__init__(f"choice function returned {label!r} at step {step}, which is not in the complement")


class BadBound(RelaxkitError):
    def __init__(self, d, size):
        self.d = d
        self.size = size
        super().__init__(f"second factor size {d} must lie in 0..{size}")


class MalformedCNF(RelaxkitError):
    pass


class EmptyList(RelaxkitError):
    pass


class DuplicateElement(RelaxkitError):
    def __init__(self, element):
        self.element = element
        super().__init__(f"duplicate element {element}")


class CodeTooLarge(RelaxkitError):
    def __init__(self, bits, budget):
        self.bits = bits
        self.budget = budget
        super().__init__(f"code needs {bits} bits, budget is {budget}")


class BudgetExceeded(RelaxkitError):
    def __init__(self, k, budget=None):
        self.k = k
        self.budget = budget
        super().__init__(f"Beth value B[{k}] exceeds the bit budget" + (f" of {budget}" if budget else ""))


class NotWellFounded(RelaxkitError):
    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__("not well-founded: cycle " + ",".join(self.cycle))


class NotCoherent(RelaxkitError):
    def __init__(self, violation):
        self.violation = tuple(violation)
        super().__init__("family is not coherent: violation (a, b, position) = %s" % (self.violation,))


class Unclassifiable(RelaxkitError):
    def __init__(self, probe_bound):
        self.probe_bound = probe_bound
        super().__init__(f"diagonal does not stabilize within probe bound {probe_bound}")
