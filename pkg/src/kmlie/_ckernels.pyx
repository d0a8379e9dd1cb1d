# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernels; same contract as ``_pykernels``.

Inputs are int64 buffers (``array.array('q')`` or numpy).  Callers guarantee
that entries fit comfortably in 64 bits; ``kernels`` falls back to the
Python implementation otherwise.
"""

from libc.stdlib cimport malloc, free, calloc

NOT_ROOT = 0
REAL = 1
CHAMBER = 2


def descend(const long long[:] a_flat, Py_ssize_t n, const long long[:] v_in):
    cdef long long *v = <long long *> malloc(n * sizeof(long long))
    if v == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, hit
    cdef long long p, h, steps = 0
    cdef int status
    try:
        for i in range(n):
            v[i] = v_in[i]
        while True:
            h = 0
            for i in range(n):
                h += v[i]
            if h == 1:
                status = REAL
                break
            hit = -1
            for i in range(n):
                p = 0
                for j in range(n):
                    p += a_flat[i * n + j] * v[j]
                if p > 0:
                    hit = i
                    break
            if hit < 0:
                status = CHAMBER
                break
            v[hit] -= p
            steps += 1
            if v[hit] < 0:
                status = NOT_ROOT
                break
        return status, steps, [v[i] for i in range(n)]
    finally:
        free(v)


def jacobi_failures(const long long[:] ptr, const long long[:] idx,
                    const long long[:] val, Py_ssize_t dim,
                    const long long[:] triples):
    cdef long long *buf = <long long *> calloc(dim, sizeof(long long))
    cdef long long *touched
    cdef Py_ssize_t cap = 64, ntouched
    if buf == NULL:
        raise MemoryError()
    touched = <long long *> malloc(cap * sizeof(long long))
    if touched == NULL:
        free(buf)
        raise MemoryError()
    cdef Py_ssize_t ntrip = triples.shape[0] // 3
    cdef Py_ssize_t t, r, k, kk, p, q, j
    cdef long long a, b, c, coef, mid
    cdef long long x, y, z
    cdef long long fails = 0, first = -1
    cdef bint bad
    cdef long long *grow
    try:
        for t in range(ntrip):
            x = triples[3 * t]
            y = triples[3 * t + 1]
            z = triples[3 * t + 2]
            ntouched = 0
            for r in range(3):
                if r == 0:
                    a, b, c = x, y, z
                elif r == 1:
                    a, b, c = y, z, x
                else:
                    a, b, c = z, x, y
                p = b * dim + c
                for k in range(ptr[p], ptr[p + 1]):
                    mid = idx[k]
                    coef = val[k]
                    q = a * dim + mid
                    for kk in range(ptr[q], ptr[q + 1]):
                        buf[idx[kk]] += coef * val[kk]
                        if ntouched == cap:
                            grow = <long long *> malloc(2 * cap * sizeof(long long))
                            if grow == NULL:
                                raise MemoryError()
                            for j in range(cap):
                                grow[j] = touched[j]
                            free(touched)
                            touched = grow
                            cap *= 2
                        touched[ntouched] = idx[kk]
                        ntouched += 1
            bad = False
            for j in range(ntouched):
                if buf[touched[j]] != 0:
                    bad = True
                buf[touched[j]] = 0
            if bad:
                fails += 1
                if first < 0:
                    first = t
        return fails, first
    finally:
        free(buf)
        free(touched)
