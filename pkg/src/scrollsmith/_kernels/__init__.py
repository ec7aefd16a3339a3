"""Polynomial kernels over GF(p) with a compiled fast path.

The Cython extension ``_ckernel`` is used when it was built; otherwise the
pure-Python ``_pykernel`` provides identical results.  Setting the
environment variable ``SCROLLSMITH_PURE=1`` forces the fallback.
"""

import os

from ._pykernel import poly_add, poly_monic, poly_scale, poly_sub, trim

BACKEND = "python"
if os.environ.get("SCROLLSMITH_PURE", "") not in ("1", "true", "yes"):
    try:
        from ._ckernel import (  # noqa: F401
            pivot_product,
            poly_divmod,
            poly_eval,
            poly_gcd,
            poly_mul,
            poly_powmod,
        )

        BACKEND = "cython"
    except ImportError:
        pass

if BACKEND == "python":
    from ._pykernel import (  # noqa: F401
        pivot_product,
        poly_divmod,
        poly_eval,
        poly_gcd,
        poly_mul,
        poly_powmod,
    )

__all__ = [
    "BACKEND",
    "pivot_product",
    "poly_add",
    "poly_divmod",
    "poly_eval",
    "poly_gcd",
    "poly_monic",
    "poly_mul",
    "poly_powmod",
    "poly_scale",
    "poly_sub",
    "trim",
]
