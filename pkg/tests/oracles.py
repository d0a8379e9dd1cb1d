"""Independent reference computations used by the tests (sympy based)."""
import itertools

from sympy import QQ, divisors
from sympy.functions.combinatorial.numbers import mobius
from sympy.polys.matrices import DomainMatrix


def witt(n, d):
    return sum(mobius(d // e) * n ** e for e in divisors(d)) // d


def double_bracket_words(n, signs):
    # sum_i s_i [x_i, [x_i, x_j]] written out in the tensor algebra
    out = []
    for j in range(n):
        r = {}
        for i, s in enumerate(signs):
            for w, c in (((i, i, j), 1), ((i, j, i), -2), ((j, i, i), 1)):
                r[w] = r.get(w, 0) + s * c
        out.append({w: c for w, c in r.items() if c})
    return out


def enveloping_dims(n, relators, D):
    """Graded dims of T(V) modulo the two-sided ideal of homogeneous relators."""
    dims = [1]
    for d in range(1, D + 1):
        cols = {w: k for k, w in enumerate(itertools.product(range(n), repeat=d))}
        rows = []
        for r in relators:
            k = len(next(iter(r)))
            for a in range(d - k + 1):
                for u in itertools.product(range(n), repeat=a):
                    for v in itertools.product(range(n), repeat=d - k - a):
                        rows.append({cols[u + w + v]: QQ(c) for w, c in r.items()})
        rank = 0
        if rows:
            rank = DomainMatrix(dict(enumerate(rows)), (len(rows), len(cols)), QQ).rank()
        dims.append(n ** d - rank)
    return dims


def lie_dims_from_enveloping(u, D):
    """Invert PBW: prod_d (1 - t^d)^(-c_d) = sum_d u_d t^d."""
    c = []
    for d in range(1, D + 1):
        series = [1] + [0] * D
        for k, ck in enumerate(c, 1):
            for _ in range(ck):
                for m in range(k, D + 1):
                    series[m] += series[m - k]
        c.append(u[d] - series[d])
    return tuple(c)


def quotient_dims(n, signs, D, extra=()):
    return lie_dims_from_enveloping(enveloping_dims(n, double_bracket_words(n, signs) + list(extra), D), D)


# ---------------------------------------------------------------------------
# roots, by plain reflection orbits on integer vectors


def _reflect(a, v, i):
    c = sum(a[i][j] * v[j] for j in range(len(v)))
    w = list(v)
    w[i] -= c
    return tuple(w)


def root_orbit(a):
    """All roots of a finite-type GCM ``a`` (list of rows) as the Weyl orbit of the simple roots."""
    n = len(a)
    seen = {tuple(int(i == k) for k in range(n)) for i in range(n)}
    todo = list(seen)
    while todo:
        v = todo.pop()
        for i in range(n):
            w = _reflect(a, v, i)
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


def is_real_by_descent(a, v):
    """Reflect a positive vector to lower height until it is simple (real) or leaves the positive cone."""
    v = tuple(v)
    while sum(v) > 1:
        for i in range(len(v)):
            w = _reflect(a, v, i)
            if sum(w) < sum(v):
                v = w
                break
        else:
            return False
        if any(x < 0 for x in v):
            return False
    return sum(v) == 1 and all(x >= 0 for x in v)


def string_by_membership(roots, alpha, beta, bound=6):
    """``(p, q)`` of the alpha-string through beta inside an explicit root set."""
    def shift(k):
        return tuple(b + k * x for b, x in zip(beta, alpha))
    p = 0
    while shift(-(p + 1)) in roots and p < bound:
        p += 1
    q = 0
    while shift(q + 1) in roots and q < bound:
        q += 1
    return p, q


# ---------------------------------------------------------------------------
# matrix models of sl(n) with sympy


def matrix_unit(n, i, j):
    from sympy import zeros
    m = zeros(n, n)
    m[i, j] = 1
    return m


def closure_dimension(gens):
    """Dimension of the Lie algebra generated by sympy matrices under the commutator."""
    from sympy import Matrix
    basis, rows = [], Matrix.zeros(0, gens[0].rows * gens[0].cols)

    def add(m):
        nonlocal rows
        cand = rows.col_join(m.reshape(1, m.rows * m.cols))
        if cand.rank() > rows.rows:
            rows = cand
            basis.append(m)
            return True
        return False

    for g in gens:
        add(g)
    grew = True
    while grew:
        grew = False
        for x in list(basis):
            for y in list(basis):
                if add(x * y - y * x):
                    grew = True
    return len(basis)


def fixed_subalgebra_inertia(n, d):
    """Dimension and Killing inertia of ``{X in sl(n) : X = -D X^T D}`` for diagonal ``D = diag(d)``."""
    from sympy import Matrix, diag, symbols
    D = diag(*d)
    xs = symbols(f"x0:{n * n}")
    X = Matrix(n, n, xs)
    eqs = list(X + D * X.T * D) + [X.trace()]
    from sympy import linear_eq_to_matrix
    A, _ = linear_eq_to_matrix(eqs, xs)
    basis = [Matrix(n, n, list(v)) for v in A.nullspace()]
    gram = Matrix(len(basis), len(basis), lambda i, j: 2 * n * (basis[i] * basis[j]).trace())
    eig = gram.eigenvals()
    pos = sum(m for e, m in eig.items() if e > 0)
    zero = sum(m for e, m in eig.items() if e == 0)
    neg = sum(m for e, m in eig.items() if e < 0)
    return len(basis), (pos, zero, neg)
