"""Kernel dispatch: the compiled extension when importable, else pure Python.

Set ``PBALGEBRA_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

if os.environ.get("PBALGEBRA_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

assoc_violations = _impl.assoc_violations
bilinear = _impl.bilinear
