"""Numeric kernels with a compiled core and a pure-numpy fallback.

The Cython extension is picked at import time when present; set
``NFWPT_PURE_PYTHON=1`` to force the numpy implementation. Both backends
produce the same values to floating-point round-off and the same API.
"""

import os

from . import _reference
from ._reference import PATTERN_COSINE_POWER, PATTERN_ISOTROPIC

_impl = _reference
if not os.environ.get("NFWPT_PURE_PYTHON"):
    try:
        from . import _fastcore
        _impl = _fastcore
    except ImportError:
        pass

superpose_field = _impl.superpose_field
coherent_gain = _impl.coherent_gain


def backend_name() -> str:
    """Which kernel implementation is active: 'compiled' or 'python'."""
    return "compiled" if _impl is not _reference else "python"


def reference_backend():
    """The numpy implementation, regardless of the active backend."""
    return _reference
