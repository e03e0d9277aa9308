"""Kernel selection: compiled extension if available, else pure Python.

Set TETRAFORGE_KERNEL=python to force the fallback (used by the parity
test and the benchmark).
"""

import os

from . import _kernel_py

if os.environ.get("TETRAFORGE_KERNEL", "").lower() == "python":
    _impl = _kernel_py
    BACKEND = "python"
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
        BACKEND = "compiled"
    except ImportError:
        _impl = _kernel_py
        BACKEND = "python"

refine = _impl.refine
compose = _impl.compose
invert = _impl.invert
orbit_partition = _impl.orbit_partition
cert_bytes = _impl.cert_bytes
