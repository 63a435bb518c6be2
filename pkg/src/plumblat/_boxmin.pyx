# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled box-minimization kernel for integer quadratics.

Mirrors ``_boxmin_py`` exactly but runs on C 64-bit integers; callers
must pre-check the magnitude bound (see ``kernels.py``) so that no
intermediate value overflows.
"""

from libc.stdlib cimport malloc, free


cdef long long _floordiv(long long a, long long b) noexcept:
    # C division truncates toward zero; we need floor division (b > 0 here)
    cdef long long q = a / b
    if a % b != 0 and (a < 0) != (b < 0):
        q -= 1
    return q


def min_quadratic_box(P, q, lo, hi):
    """Minimize l^T P l + q.l over the box; returns (value, argmin tuple)."""
    cdef Py_ssize_t n = len(lo)
    cdef Py_ssize_t i, j, k, last
    if n == 0 or len(hi) != n:
        raise ValueError("bad box")
    cdef long long *cp = <long long *> malloc(n * n * sizeof(long long))
    cdef long long *cq = <long long *> malloc(n * sizeof(long long))
    cdef long long *clo = <long long *> malloc(n * sizeof(long long))
    cdef long long *chi = <long long *> malloc(n * sizeof(long long))
    cdef long long *pt = <long long *> malloc(n * sizeof(long long))
    if cp == NULL or cq == NULL or clo == NULL or chi == NULL or pt == NULL:
        free(cp); free(cq); free(clo); free(chi); free(pt)
        raise MemoryError()
    cdef long long A, B, C, t, t0, inner, val, best_val
    cdef bint have_best = 0
    try:
        for i in range(n):
            cq[i] = q[i]
            clo[i] = lo[i]
            chi[i] = hi[i]
            if clo[i] > chi[i]:
                raise ValueError("empty box")
            row = P[i]
            for j in range(n):
                cp[i * n + j] = row[j]
        last = n - 1
        A = cp[last * n + last]
        for i in range(n):
            pt[i] = clo[i]
        best_val = 0
        best = None
        while True:
            C = 0
            B = cq[last]
            for i in range(last):
                C += cq[i] * pt[i] + cp[i * n + i] * pt[i] * pt[i]
                for j in range(i + 1, last):
                    C += 2 * cp[i * n + j] * pt[i] * pt[j]
                B += 2 * cp[last * n + i] * pt[i]
            t = _floordiv(-B, 2 * A)
            if t < clo[last]:
                t = clo[last]
            elif t >= chi[last]:
                t = chi[last]
            elif A * (2 * t + 1) + B < 0:
                t += 1
            val = C + A * t * t + B * t
            if not have_best or val < best_val:
                have_best = 1
                best_val = val
                pt[last] = t
                best = tuple([pt[i] for i in range(n)])
            if last == 0:
                break
            k = last - 1
            while k >= 0:
                if pt[k] < chi[k]:
                    pt[k] += 1
                    break
                pt[k] = clo[k]
                k -= 1
            if k < 0:
                break
        return int(best_val), best
    finally:
        free(cp); free(cq); free(clo); free(chi); free(pt)


def box_values(P, q, lo, hi):
    """All values over the box, lexicographic point order, as a list."""
    cdef Py_ssize_t n = len(lo)
    cdef Py_ssize_t i, j, k
    if n == 0 or len(hi) != n:
        raise ValueError("bad box")
    cdef long long *cp = <long long *> malloc(n * n * sizeof(long long))
    cdef long long *cq = <long long *> malloc(n * sizeof(long long))
    cdef long long *clo = <long long *> malloc(n * sizeof(long long))
    cdef long long *chi = <long long *> malloc(n * sizeof(long long))
    cdef long long *pt = <long long *> malloc(n * sizeof(long long))
    if cp == NULL or cq == NULL or clo == NULL or chi == NULL or pt == NULL:
        free(cp); free(cq); free(clo); free(chi); free(pt)
        raise MemoryError()
    cdef long long v
    out = []
    try:
        for i in range(n):
            cq[i] = q[i]
            clo[i] = lo[i]
            chi[i] = hi[i]
            if clo[i] > chi[i]:
                raise ValueError("empty box")
            row = P[i]
            for j in range(n):
                cp[i * n + j] = row[j]
        for i in range(n):
            pt[i] = clo[i]
        while True:
            v = 0
            for i in range(n):
                v += cq[i] * pt[i] + cp[i * n + i] * pt[i] * pt[i]
                for j in range(i + 1, n):
                    v += 2 * cp[i * n + j] * pt[i] * pt[j]
            out.append(int(v))
            k = n - 1
            while k >= 0:
                if pt[k] < chi[k]:
                    pt[k] += 1
                    break
                pt[k] = clo[k]
                k -= 1
            if k < 0:
                break
        return out
    finally:
        free(cp); free(cq); free(clo); free(chi); free(pt)
