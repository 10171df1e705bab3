"""Kernel backend selection.

The compiled extension is preferred when importable; set LINFISO_PURE=1
to force the pure Python implementation.  Both expose det_bareiss,
pivot, and normalize with identical semantics.
"""

import os

from . import pure

_impl = pure
if not os.environ.get("LINFISO_PURE"):
    try:
        from . import fast as _impl  # type: ignore[no-redef]
    except ImportError:
        pass

BACKEND = _impl.BACKEND_NAME
normalize = _impl.normalize
det_bareiss = _impl.det_bareiss
pivot = _impl.pivot


def available():
    """Map of backend name to kernel module, for benchmarks and tests."""
    out = {"python": pure}
    try:
        from . import fast

        out["cython"] = fast
    except ImportError:
        pass
    return out
