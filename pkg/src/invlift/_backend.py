"""Select the multiplication kernel at import time.

The compiled extension is preferred when present; setting INVLIFT_PURE=1
in the environment forces the pure-Python kernel (used by the benchmark
and by tests that compare the two).
"""

import os

if os.environ.get("INVLIFT_PURE"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

mul_terms = _impl.mul_terms
KERNEL_IMPLEMENTATION = _impl.IMPLEMENTATION
