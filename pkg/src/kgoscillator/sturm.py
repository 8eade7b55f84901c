"""Eigenvalue kernels for symmetric tridiagonal matrices.

The compiled ``_sturm`` extension is used when it was built; otherwise the
pure-Python twin is loaded. Setting ``KGOSC_PURE_PYTHON=1`` forces the
fallback. ``BACKEND`` records which one is active.
"""

import os

import numpy as np

from . import _sturm_py

if os.environ.get("KGOSC_PURE_PYTHON", "") not in ("", "0"):
    _impl = _sturm_py
    BACKEND = "python"
else:
    try:
        from . import _sturm as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _sturm_py
        BACKEND = "python"

__all__ = ["BACKEND", "lowest_eigenvalues", "sturm_count"]

_TINY = np.finfo(float).tiny


def _prepare(diag, off):
    diag = np.ascontiguousarray(diag, dtype=float)
    offsq = np.ascontiguousarray(np.asarray(off, dtype=float) ** 2)
    if offsq.shape[0] != diag.shape[0] - 1:
        raise ValueError("off-diagonal must have one fewer entry than the diagonal")
    pivmin = _TINY * max(1.0, float(offsq.max()) if offsq.size else 1.0)
    return diag, offsq, pivmin


def sturm_count(diag, off, x, impl=None) -> int:
    """Number of eigenvalues below ``x`` of the matrix with ``diag`` and ``off``."""
    impl = impl or _impl
    diag, offsq, pivmin = _prepare(diag, off)
    return int(impl.sturm_count(diag, offsq, float(x), pivmin))


def gershgorin(diag, off):
    diag = np.asarray(diag, dtype=float)
    radius = np.zeros_like(diag)
    absoff = np.abs(np.asarray(off, dtype=float))
    radius[:-1] += absoff
    radius[1:] += absoff
    return float((diag - radius).min()), float((diag + radius).max())


def lowest_eigenvalues(diag, off, count: int, impl=None) -> np.ndarray:
    """The ``count`` smallest eigenvalues, ascending, by Sturm bisection."""
    impl = impl or _impl
    if not 1 <= count <= len(diag):
        raise ValueError(f"count must lie in [1, {len(diag)}], got {count}")
    diag, offsq, pivmin = _prepare(diag, off)
    lo, hi = gershgorin(diag, np.sqrt(offsq))
    pad = 2.0 * np.finfo(float).eps * max(abs(lo), abs(hi)) + pivmin
    return np.asarray(impl.bisect_lowest(diag, offsq, count, lo - pad, hi + pad, pivmin))
