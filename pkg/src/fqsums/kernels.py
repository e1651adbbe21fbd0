"""Backend selection for the arithmetic kernels.

The compiled module ``fqsums._ckernels`` is used when it was built; otherwise
the pure-Python twin ``fqsums._pykernels`` is used.  Set
``FQSUMS_BACKEND=python`` to force the fallback (``cython`` to require the
compiled one).  Both backends produce identical results.
"""

from __future__ import annotations

import importlib
import os

from fqsums import _pykernels


def _load(name: str):
    if name == "python":
        return _pykernels
    if name == "cython":
        return importlib.import_module("fqsums._ckernels")
    raise ImportError(f"unknown kernel backend {name!r}")


def available_backends() -> list[str]:
    out = []
    for name in ("cython", "python"):
        try:
            _load(name)
        except ImportError:
            continue
        out.append(name)
    return out


_requested = os.environ.get("FQSUMS_BACKEND", "").strip().lower()
if _requested:
    impl = _load(_requested)
else:
    try:
        impl = _load("cython")
    except ImportError:
        impl = _pykernels

BACKEND: str = impl.BACKEND


def make_ctx(F, module=None):
    """Kernel context for field F (tables are pulled from F for extensions)."""
    module = module or impl
    if F.e == 1:
        return module.make_ctx(F.p, F.q)
    exp, log, zech = F.tables
    return module.make_ctx(F.p, F.q, exp, log, zech)


poly_add = impl.poly_add
poly_sub = impl.poly_sub
poly_scale = impl.poly_scale
poly_mul = impl.poly_mul
poly_divmod = impl.poly_divmod
poly_rem = impl.poly_rem
poly_mulmod = impl.poly_mulmod
poly_powmod = impl.poly_powmod
poly_monic = impl.poly_monic
poly_gcd = impl.poly_gcd
is_irreducible = impl.is_irreducible
series_mul = impl.series_mul
series_div = impl.series_div
series_pow = impl.series_pow
