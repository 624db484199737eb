from dataclasses import dataclass

DEFAULT_POWERSET_BOUND = 20
DEFAULT_BIT_BUDGET = 2**20
DEFAULT_BETH_BASE = 1
DEFAULT_PROBE_BOUND = 10**4


@dataclass(frozen=True)
class Config:
    """Bounds shared by the brute-force routines and the CLI."""

    powerset_bound: int = DEFAULT_POWERSET_BOUND
    bit_budget: int = DEFAULT_BIT_BUDGET
    beth_base: int = DEFAULT_BETH_BASE
    probe_bound: int = DEFAULT_PROBE_BOUND
    seed: int = 0

    def __post_init__(self):
        for name in ("powerset_bound", "bit_budget", "beth_base", "probe_bound"):
            value = getattr(self, name)
            if not isinstance(value, int) or value <= 0:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")
        if not isinstance(self.seed, int) or self.seed < 0:
            raise ValueError(f"seed must be a non-negative integer, got {self.seed!r}")
