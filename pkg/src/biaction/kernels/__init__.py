"""Contraction kernel backend selection.

Uses the compiled extension when it imported cleanly, the numpy fallback
otherwise.  Set BIACTION_PURE_PYTHON=1 to force the fallback (useful for
benchmarking and for debugging the extension).
"""

import os

from . import _pure

_impl = _pure
BACKEND = "python"

if os.environ.get("BIACTION_PURE_PYTHON", "").lower() not in ("1", "true", "yes"):
    try:
        from . import _quartic as _compiled

        _impl = _compiled
        BACKEND = "compiled"
    except ImportError:
        pass

quartic_trace = _impl.quartic_trace
quartic_plain = _impl.quartic_plain
quartic_series_trace = _impl.quartic_series_trace
triple_free = _impl.triple_free


def available_backends():
    """Importable backends keyed by name; always contains 'python'."""
    out = {"python": _pure}
    try:
        from . import _quartic

        out["compiled"] = _quartic
    except ImportError:
        pass
    return out
