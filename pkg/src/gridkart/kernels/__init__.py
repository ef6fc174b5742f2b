"""Hot numeric kernels: compiled core with a numpy fallback.

The compiled extension ``gridkart.kernels._native`` (built from
``_native.pyx``) is preferred at import time; the numpy implementations in
``gridkart.kernels.fallback`` are used when the extension is missing. Set
``GRIDKART_KERNELS=native`` or ``=fallback`` to force a backend (forcing
``native`` raises ImportError when the extension is not built).

Three operations live here because they dominate the simulation tick:
separable Gaussian convolution over the grid, LiDAR ray casting against
cone cylinders, and plane-candidate inlier scoring. The planner's row scan
touches a few hundred cells per call and stays in plain Python.
"""

import os

from . import fallback

_native = None
_choice = os.environ.get("GRIDKART_KERNELS", "auto").lower()
if _choice not in ("auto", "native", "fallback"):
    raise ImportError(
        f"GRIDKART_KERNELS must be 'auto', 'native' or 'fallback', not {_choice!r}"
    )
if _choice in ("auto", "native"):
    try:
        from . import _native  # type: ignore[no-redef]
    except ImportError:
        if _choice == "native":
            raise
        _native = None

_active = _native if _native is not None else fallback

BACKEND = "native" if _native is not None else "fallback"

convolve_separable = _active.convolve_separable
cast_rays = _active.cast_rays
plane_inlier_stats = _active.plane_inlier_stats


def get_backend(name):
    """Return the named kernel module, for equivalence tests and benchmarks.

    Raises ImportError for "native" when the extension was not built.
    """
    if name == "fallback":
        return fallback
    if name == "native":
        if _native is None:
            raise ImportError("gridkart.kernels._native is not built")
        return _native
    raise ValueError(f"unknown backend {name!r}")
