# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops.  Same signatures as ``_pykernels``."""

import numpy as np

from libc.stdint cimport int64_t


def assoc_violations(const int64_t[::1] ptr, const int64_t[::1] ks,
                     const int64_t[::1] vals, Py_ssize_t n, Py_ssize_t limit):
    """Count triples (i, j, l) with (a_i a_j) a_l != a_i (a_j a_l).

    ``ptr``/``ks``/``vals`` hold the structure constants in CSR form over the
    flattened pair index ``i*n + j``.  Values are scaled integers; the caller
    guarantees that no partial sum overflows int64.
    """
    cdef int64_t[::1] diff = np.zeros(n, dtype=np.int64)
    cdef Py_ssize_t i, j, l, a, b, k, p, m, row
    cdef int64_t g
    cdef bint bad
    cdef Py_ssize_t count = 0
    found = []
    for i in range(n):
        for j in range(n):
            row = i * n + j
            for l in range(n):
                for a in range(ptr[row], ptr[row + 1]):
                    k = ks[a]
                    g = vals[a]
                    for b in range(ptr[k * n + l], ptr[k * n + l + 1]):
                        diff[ks[b]] += g * vals[b]
                for a in range(ptr[j * n + l], ptr[j * n + l + 1]):
                    p = ks[a]
                    g = vals[a]
                    for b in range(ptr[i * n + p], ptr[i * n + p + 1]):
                        diff[ks[b]] -= g * vals[b]
                bad = False
                for a in range(ptr[row], ptr[row + 1]):
                    k = ks[a]
                    for b in range(ptr[k * n + l], ptr[k * n + l + 1]):
                        m = ks[b]
                        if diff[m] != 0:
                            bad = True
                            diff[m] = 0
                for a in range(ptr[j * n + l], ptr[j * n + l + 1]):
                    p = ks[a]
                    for b in range(ptr[i * n + p], ptr[i * n + p + 1]):
                        m = ks[b]
                        if diff[m] != 0:
                            bad = True
                            diff[m] = 0
                if bad:
                    if count < limit:
                        found.append((i, j, l))
                    count += 1
    return count, found


def bilinear(const int64_t[::1] ti, const int64_t[::1] tj, const int64_t[::1] tk,
             const double[::1] vals, const double[::1] x, const double[::1] y,
             Py_ssize_t n):
    """z_k = sum over triples of vals * x_i * y_j."""
    out = np.zeros(n, dtype=np.float64)
    cdef double[::1] z = out
    cdef Py_ssize_t t
    cdef double xi
    for t in range(ti.shape[0]):
        xi = x[ti[t]]
        if xi != 0.0:
            z[tk[t]] += vals[t] * xi * y[tj[t]]
    return out
