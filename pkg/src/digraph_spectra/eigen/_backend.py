"""Pick the compiled kernels when available, the pure-Python ones otherwise.

Set ``DIGRAPH_SPECTRA_PURE=1`` to force the fallback.
"""

import os

from . import _fallback

compiled = None
try:
    from . import _kernels as compiled
except ImportError:  # extension not built
    compiled = None

if compiled is not None and os.environ.get("DIGRAPH_SPECTRA_PURE", "") not in ("1", "true", "yes"):
    kernels = compiled
    BACKEND = "compiled"
else:
    kernels = _fallback
    BACKEND = "python"


def get(name: str):
    """Kernel module by name: ``"compiled"`` or ``"python"``."""
    if name == "python":
        return _fallback
    if name == "compiled":
        if compiled is None:
            raise ImportError("compiled kernels are not built")
        return compiled
    raise ValueError(f"unknown backend {name!r}")
