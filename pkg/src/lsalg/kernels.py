"""Backend selection for the integer enumeration kernels.

The compiled extension ``lsalg._ckernels`` is used when it is importable and
``LSALG_PURE_PYTHON`` is unset; otherwise the pure-Python module is used.
Inputs that could overflow 64-bit arithmetic always take the Python path.
"""

import os
from math import comb

from . import _kernels_py as python_impl

compiled_impl = None
if not os.environ.get("LSALG_PURE_PYTHON"):
    try:
        from . import _ckernels as compiled_impl
    except ImportError:  # extension not built
        compiled_impl = None

BACKEND = "cython" if compiled_impl is not None else "python"

_LIMIT = 1 << 62


def enumerate_cumulative(mults, total):
    if compiled_impl is not None and total < _LIMIT:
        return compiled_impl.enumerate_cumulative(mults, total)
    return python_impl.enumerate_cumulative(mults, total)


def count_cumulative(mults, total):
    if compiled_impl is not None and mults:
        bound = comb(total // min(mults) + len(mults), len(mults))
        if bound < _LIMIT:
            return compiled_impl.count_cumulative(mults, total)
    return python_impl.count_cumulative(mults, total)


def graded_lattice_points(basis, weights, total):
    if compiled_impl is not None:
        biggest = max((abs(x) for row in basis for x in row), default=1)
        if len(basis) * (total + 1) * (biggest + 1) * max(weights, default=1) < _LIMIT:
            return compiled_impl.graded_lattice_points(basis, weights, total)
    return python_impl.graded_lattice_points(basis, weights, total)
