"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``BINOIDTOP_PURE=1`` to force the pure kernel (used by the benchmark
and by the pure/compiled equivalence tests).
"""

import os

from . import _kernel_py

if os.environ.get("BINOIDTOP_PURE") == "1":
    RuleKernel = _kernel_py.RuleKernel
    KERNEL_BACKEND = "pure"
else:
    try:
        from ._ckernel import RuleKernel  # type: ignore[attr-defined]

        KERNEL_BACKEND = "compiled"
    except ImportError:
        RuleKernel = _kernel_py.RuleKernel
        KERNEL_BACKEND = "pure"
