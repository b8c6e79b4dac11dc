"""Backend selection for the hot kernels.

The compiled extension is used when importable; set ``MLA_PURE_PYTHON=1``
to force the fallback.
"""
import os

from . import _pykernels

if os.environ.get("MLA_PURE_PYTHON", "") not in ("", "0"):
    backend = _pykernels
else:
    try:
        from . import _ckernels as backend
    except ImportError:  # extension not built
        backend = _pykernels

BACKEND = backend.NAME


def backends():
    """All importable backends, fallback first."""
    out = [_pykernels]
    try:
        from . import _ckernels

        out.append(_ckernels)
    except ImportError:
        pass
    return out


def workers() -> int:
    """Worker cap from ``MLA_THREADS`` (default 1)."""
    try:
        return max(1, int(os.environ.get("MLA_THREADS", "1")))
    except ValueError:
        return 1
