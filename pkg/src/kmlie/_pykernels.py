"""Pure-Python reference implementation of the integer kernels.

Mirrors ``_ckernels.pyx`` call for call; used when the extension is not
built and as the comparison baseline in tests and benchmarks.
"""

NOT_ROOT = 0
REAL = 1
CHAMBER = 2


def descend(a_flat, n, v):
    """Height descent of a non-negative integer vector by simple reflections.

    ``a_flat`` is the GCM in row-major order.  Returns ``(status, steps, v)``:
    REAL when a simple root is reached, NOT_ROOT when a reflection produces a
    negative coordinate, CHAMBER when no reflection lowers the height.
    """
    v = list(v)
    steps = 0
    while True:
        if sum(v) == 1:
            return REAL, steps, v
        for i in range(n):
            base = i * n
            p = 0
            for j in range(n):
                p += a_flat[base + j] * v[j]
            if p > 0:
                break
        else:
            return CHAMBER, steps, v
        v[i] -= p
        steps += 1
        if v[i] < 0:
            return NOT_ROOT, steps, v


def jacobi_failures(ptr, idx, val, dim, triples):
    """Count basis triples violating the Jacobi identity.

    The structure constants are in CSR form: the bracket of basis elements
    ``a`` and ``b`` is ``sum(val[k] * e[idx[k]] for k in range(ptr[p], ptr[p+1]))``
    with ``p = a * dim + b``.  ``triples`` is a flat sequence ``a0, b0, c0, a1, ...``.
    Returns ``(failures, first_failing_triple_or_-1)``.
    """
    buf = [0] * dim
    fails = 0
    first = -1
    ntrip = len(triples) // 3
    for t in range(ntrip):
        x, y, z = triples[3 * t], triples[3 * t + 1], triples[3 * t + 2]
        touched = []
        for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
            p = b * dim + c
            for k in range(ptr[p], ptr[p + 1]):
                mid = idx[k]
                coef = val[k]
                q = a * dim + mid
                for kk in range(ptr[q], ptr[q + 1]):
                    buf[idx[kk]] += coef * val[kk]
                    touched.append(idx[kk])
        bad = False
        for j in touched:
            if buf[j] != 0:
                bad = True
            buf[j] = 0
        if bad:
            fails += 1
            if first < 0:
                first = t
    return fails, first
