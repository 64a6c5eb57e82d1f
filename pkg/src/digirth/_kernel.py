"""Select the homomorphism search kernel.

Prefers the compiled extension; falls back to the pure-Python twin when the
extension is missing (e.g. no compiler at install time). Set the environment
variable ``DIGIRTH_PURE=1`` to force the fallback.
"""

import os

from . import _mapcore_py

_impl = _mapcore_py
if not os.environ.get("DIGIRTH_PURE"):
    try:
        from . import _mapcore_c as _impl  # type: ignore[no-redef]
    except ImportError:
        pass

iter_homomorphisms = _impl.iter_homomorphisms
count_homomorphisms = _impl.count_homomorphisms
USING_COMPILED = _impl is not _mapcore_py
