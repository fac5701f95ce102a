"""Edit-distance kernels with a compiled fast path.

Importing this package picks the Cython extension when it was built and
falls back to the pure-Python implementation otherwise.  Both expose the
same functions with identical semantics; `BACKEND` reports which one is
active ("c" or "python").
"""

try:
    from ._speedups import BACKEND, edit_distance, shifted_edit_search

    USING_COMPILED = True
except ImportError:  # extension not built
    from ._pure import BACKEND, edit_distance, shifted_edit_search

    USING_COMPILED = False

__all__ = ["BACKEND", "USING_COMPILED", "edit_distance", "shifted_edit_search"]
