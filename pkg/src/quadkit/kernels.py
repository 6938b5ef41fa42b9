"""Kernel selection: compiled extension when available, pure Python otherwise.

The compiled kernels (``_kernels_c``, built from Cython) cover the common
case of machine-sized integer coordinates; coordinates beyond their exact
range overflow cleanly and are retried on the pure-Python kernel, so
results are identical either way.  Set ``QUADKIT_PURE_KERNELS=1`` to force
the fallback, e.g. for benchmarking or debugging.
"""

from __future__ import annotations

import os

from . import _kernels_py

_compiled = None
if not os.environ.get("QUADKIT_PURE_KERNELS"):
    try:
        from . import _kernels_c as _compiled
    except ImportError:
        _compiled = None

_impl = _compiled if _compiled is not None else _kernels_py
IMPLEMENTATION = "compiled" if _compiled is not None else "pure"


def check_quad_ints(ax, ay, bx, by, cx, cy, dx, dy):
    """Exact doubled-area check of one integer quadruple; see
    ``_kernels_py.check_quad_ints`` for the tuple layout."""
    try:
        return _impl.check_quad_ints(ax, ay, bx, by, cx, cy, dx, dy)
    except OverflowError:
        return _kernels_py.check_quad_ints(ax, ay, bx, by, cx, cy, dx, dy)


def check_quad_floats(ax, ay, bx, by, cx, cy, dx, dy):
    """Float check of one quadruple with tolerance scales; see
    ``_kernels_py.check_quad_floats`` for the tuple layout."""
    return _impl.check_quad_floats(ax, ay, bx, by, cx, cy, dx, dy)


def implementations() -> dict:
    """Importable kernel modules by name, for tests and benchmarks."""
    modules = {"pure": _kernels_py}
    if _compiled is not None:
        modules["compiled"] = _compiled
    return modules
