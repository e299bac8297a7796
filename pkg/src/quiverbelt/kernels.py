"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; the pure
Python module is the fallback.  QUIVERBELT_PURE=1 forces the fallback,
which the benchmark and the backend parity tests use to compare the two.
"""

import os

if os.environ.get("QUIVERBELT_PURE") == "1":
    from quiverbelt import _kernels_py as _impl

    BACKEND = "pure"
else:
    try:
        from quiverbelt import _kernels_c as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from quiverbelt import _kernels_py as _impl  # type: ignore[no-redef]

        BACKEND = "pure"

poly_mul = _impl.poly_mul
reduce_tail = _impl.reduce_tail
mul_reduce = _impl.mul_reduce
content = _impl.content
