"""Select the integer polynomial kernel backend at import time.

The compiled ``_ckernels`` extension is used when it has been built;
otherwise the pure-Python ``_pykernels`` module is used.  Setting
``MULTVAL_PURE_PYTHON=1`` forces the fallback.
"""
import os

if os.environ.get("MULTVAL_PURE_PYTHON", "") not in ("", "0"):
    from . import _pykernels as backend
else:
    try:
        from . import _ckernels as backend
    except ImportError:
        from . import _pykernels as backend

IMPLEMENTATION = backend.IMPLEMENTATION

strip = backend.strip
add = backend.add
sub = backend.sub
mul = backend.mul
scale = backend.scale
content = backend.content
primitive = backend.primitive
pseudo_rem = backend.pseudo_rem
exact_quo = backend.exact_quo
gcd = backend.gcd
sign_at_rational = backend.sign_at_rational
interval_sign = backend.interval_sign
bisect_root = backend.bisect_root
sign_at_root = backend.sign_at_root

__all__ = [
    "IMPLEMENTATION", "strip", "add", "sub", "mul", "scale", "content",
    "primitive", "pseudo_rem", "exact_quo", "gcd", "sign_at_rational",
    "interval_sign", "bisect_root", "sign_at_root",
]
