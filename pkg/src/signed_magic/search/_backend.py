"""Pick the compiled kernels when available, else the pure-Python ones.

Set ``SIGNED_MAGIC_PURE_PYTHON=1`` to force the pure-Python kernels.
"""

from __future__ import annotations

import os

from . import _kernels_py

kernels = _kernels_py
BACKEND = "python"

if not os.environ.get("SIGNED_MAGIC_PURE_PYTHON"):
    try:
        from . import _kernels as _compiled
    except ImportError:
        pass
    else:
        kernels = _compiled
        BACKEND = "compiled"
