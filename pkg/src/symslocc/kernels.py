"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` module. Set ``SYMSLOCC_PURE_PYTHON=1`` to force
the fallback.
"""

import os

from . import _pykernels

if os.environ.get("SYMSLOCC_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"

aberth = _impl.aberth
spinor_product = _impl.spinor_product
taylor_shift = _impl.taylor_shift


def available_backends():
    """Mapping of backend name to kernel module, for tests and benchmarks."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        out["cython"] = _ckernels
    return out
