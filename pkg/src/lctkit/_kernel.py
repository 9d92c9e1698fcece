"""Kernel selection: compiled extension if available, pure Python otherwise.

Set LCTKIT_BACKEND=py to force the fallback (used by the benchmark and the
backend-parity tests), or LCTKIT_BACKEND=c to fail loudly when the compiled
module is missing.
"""

import os

_choice = os.environ.get("LCTKIT_BACKEND", "").lower()
if _choice not in ("", "c", "py"):
    raise RuntimeError(f"LCTKIT_BACKEND must be 'c' or 'py', got {_choice!r}")

if _choice == "py":
    from lctkit._purepoly import axpy_terms, mul_terms, strip_int_content

    BACKEND = "py"
else:
    try:
        from lctkit._speedups import axpy_terms, mul_terms, strip_int_content

        BACKEND = "c"
    except ImportError:
        if _choice == "c":
            raise
        from lctkit._purepoly import axpy_terms, mul_terms, strip_int_content

        BACKEND = "py"

__all__ = ["BACKEND", "axpy_terms", "mul_terms", "strip_int_content"]
