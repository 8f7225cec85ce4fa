"""Hot enumeration kernels, compiled when possible.

The Cython build is used when it imports; otherwise, or when the environment
variable ``DISCGAMES_PURE_PYTHON=1`` is set, the pure-Python versions are
used.  Both expose the same functions with identical results.
"""

import os

from . import _pykernels as pure

KERNEL_NAMES = (
    "taylor_at_one",
    "root_order",
    "order_scan",
    "family_size",
    "decode_family",
    "gap_screen",
    "pigeonhole_collision",
)

compiled = None
if os.environ.get("DISCGAMES_PURE_PYTHON") != "1":
    try:
        from . import _ckernels as compiled
    except ImportError:
        compiled = None

active = compiled if compiled is not None else pure
BACKEND = "cython" if compiled is not None else "python"

taylor_at_one = active.taylor_at_one
root_order = active.root_order
order_scan = active.order_scan
family_size = active.family_size
decode_family = active.decode_family
gap_screen = active.gap_screen
pigeonhole_collision = active.pigeonhole_collision


def backends():
    """Mapping from backend name to module, for tests and benchmarks."""
    out = {"python": pure}
    if compiled is not None:
        out["cython"] = compiled
    return out
