"""Kernel selection: compiled box-minimization core with pure-Python fallback.

The compiled extension (``_boxmin``, built from Cython) is used whenever
it imported successfully and the instance provably fits in signed 64-bit
arithmetic; otherwise the arbitrary-precision Python implementation in
``_boxmin_py`` takes over.  Set ``PLUMBLAT_PURE=1`` to force the pure
path (used by the benchmark and the equivalence tests).
"""

import os

from . import _boxmin_py

try:
    from . import _boxmin  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - build-environment dependent
    _boxmin = None

_INT64_SAFE = 1 << 61


def _force_pure():
    return os.environ.get("PLUMBLAT_PURE", "") not in ("", "0")


def backend_name():
    if _boxmin is not None and not _force_pure():
        return "cython"
    return "python"


def _magnitude_bound(P, q, lo, hi):
    """Upper bound on |l^T P l + q.l| and every intermediate over the box."""
    m = [max(abs(a), abs(b)) for a, b in zip(lo, hi)]
    n = len(m)
    total = 0
    for i in range(n):
        total += abs(q[i]) * m[i]
        for j in range(n):
            total += abs(P[i][j]) * m[i] * m[j]
    return total


def _impl(P, q, lo, hi):
    if (
        _boxmin is not None
        and not _force_pure()
        and _magnitude_bound(P, q, lo, hi) < _INT64_SAFE
    ):
        return _boxmin
    return _boxmin_py


def box_size(lo, hi):
    size = 1
    for a, b in zip(lo, hi):
        size *= b - a + 1
    return size


def min_quadratic_box(P, q, lo, hi):
    """Exact min and lexicographically smallest argmin over the integer box."""
    return _impl(P, q, lo, hi).min_quadratic_box(P, q, lo, hi)


def box_values(P, q, lo, hi):
    """All objective values over the box, points in lexicographic order."""
    return _impl(P, q, lo, hi).box_values(P, q, lo, hi)


def iter_box(lo, hi):
    """Integer points of the box in the same lexicographic order."""
    n = len(lo)
    point = list(lo)
    while True:
        yield tuple(point)
        k = n - 1
        while k >= 0:
            if point[k] < hi[k]:
                point[k] += 1
                break
            point[k] = lo[k]
            k -= 1
        if k < 0:
            return
