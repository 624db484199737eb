"""Hot integer kernels, backed by the compiled extension when it is importable.

The selection happens once at import. ``backend(name)`` hands out either
implementation explicitly, which the equivalence tests and the benchmark use.
"""

from relaxkit import _purepy

try:
    from relaxkit import _speedups as _active
except ImportError:  # extension not built
    _active = _purepy

BACKEND = _active.BACKEND

bits_of = _active.bits_of
from_bits = _active.from_bits
pair_index = _active.pair_index
unpair = _active.unpair
unpair_roundtrip_failure = _active.unpair_roundtrip_failure
pair_grid_failure = _active.pair_grid_failure
order_preservation_failure = _active.order_preservation_failure


def available_backends():
    names = ["python"]
    if _active is not _purepy:
        names.insert(0, _active.BACKEND)
    return names


def backend(name):
    if name == "python":
        return _purepy
    if name == BACKEND:
        return _active
    raise LookupError(f"kernel backend {name!r} is not available")
