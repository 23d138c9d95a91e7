"""Kernel selection: compiled extension when available, pure Python otherwise.

Set POLYRED_KERNEL=pure (or =compiled) to force a choice; forcing the
compiled kernel when the extension is missing raises ImportError so
benchmarks cannot silently compare a kernel against itself.
"""

from __future__ import annotations

import os

from . import pure

_forced = os.environ.get("POLYRED_KERNEL", "").strip().lower()

if _forced == "pure":
    _impl = pure
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]
    except ImportError:
        if _forced == "compiled":
            raise
        _impl = pure

lp_phase1 = _impl.lp_phase1
rref = _impl.rref
KERNEL_NAME = _impl.KERNEL_NAME


def kernel_name() -> str:
    """Name of the kernel selected at import: 'compiled' or 'pure'."""
    return KERNEL_NAME
