"""Backend selection for the table kernels.

The compiled extension is used when it imports; set ``SPANBICAT_PURE_PYTHON=1``
to force the fallback (the test-suite runs both).
"""

import os

from . import _purepy

_NAMES = (
    "check_table",
    "compose_tables",
    "pullback_pairs",
    "equalizer_indices",
    "pair_index",
    "lookup_pairs",
    "is_injective",
    "invert_bijection",
    "count_two_cells",
    "two_cell_tables",
    "fiber_bijection",
)


def _load(pure=False):
    if not pure:
        try:
            from . import _speedups
        except ImportError:
            pass
        else:
            return _speedups, "cython"
    return _purepy, "python"


_impl, BACKEND = _load(os.environ.get("SPANBICAT_PURE_PYTHON", "") not in ("", "0"))

check_table = _impl.check_table
compose_tables = _impl.compose_tables
pullback_pairs = _impl.pullback_pairs
equalizer_indices = _impl.equalizer_indices
pair_index = _impl.pair_index
lookup_pairs = _impl.lookup_pairs
is_injective = _impl.is_injective
invert_bijection = _impl.invert_bijection
count_two_cells = _impl.count_two_cells
two_cell_tables = _impl.two_cell_tables
fiber_bijection = _impl.fiber_bijection


def backends():
    """Both kernel modules that are importable, keyed by name."""
    out = {"python": _purepy}
    impl, name = _load()
    if name == "cython":
        out["cython"] = impl
    return out
