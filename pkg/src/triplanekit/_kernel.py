"""Kernel selection: compiled extension when built, pure Python otherwise.

Set ``TPK_PURE=1`` in the environment to force the pure backend (used by the
benchmark and by tests that compare the two implementations).
"""

from __future__ import annotations

import os

from . import _colorops_py

if os.environ.get("TPK_PURE"):
    _impl = _colorops_py
    BACKEND = "pure"
else:
    try:
        from . import _colorops_c as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        _impl = _colorops_py
        BACKEND = "pure"

propagate = _impl.propagate
count_plat_colorings = _impl.count_plat_colorings
enum_plat_colorings = _impl.enum_plat_colorings
count_triplane_colorings = _impl.count_triplane_colorings
enum_triplane_colorings = _impl.enum_triplane_colorings
