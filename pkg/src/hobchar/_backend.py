"""Kernel selection: compiled fold when available and exact, else pure Python.

Set ``HOBCHAR_BACKEND=python`` to force the interpreted kernels, or
``HOBCHAR_BACKEND=c`` to require the compiled ones (ImportError if they are
missing).  The compiled kernels are exact only while every intermediate fits
in a signed 64-bit integer, so inputs beyond that window always take the
pure path regardless of the setting.
"""

import os

from hobchar import _kernels as _pure

_choice = os.environ.get("HOBCHAR_BACKEND", "auto")
if _choice not in ("auto", "c", "python"):
    raise ValueError(f"HOBCHAR_BACKEND must be auto, c or python, not {_choice!r}")

_fast = None
if _choice in ("auto", "c"):
    try:
        from hobchar import _speedups as _fast
    except ImportError:
        _fast = None
    if _choice == "c" and _fast is None:
        raise ImportError("HOBCHAR_BACKEND=c but the compiled kernels are unavailable")

BACKEND = "c" if _fast is not None else "python"

# Largest total weights whose character values provably fit in int64.
SYM_FAST_MAX = 20
HOB_FAST_MAX = 16


def sym_char_value(exponents, parts):
    if _fast is not None and sum(parts) <= SYM_FAST_MAX:
        return _fast.sym_char_value(exponents, parts)
    return _pure.sym_char_value(exponents, parts)


def hob_char_value(pos, neg, parts, mask):
    if _fast is not None and sum(parts) <= HOB_FAST_MAX:
        return _fast.hob_char_value(pos, neg, parts, mask)
    return _pure.hob_char_value(pos, neg, parts, mask)
