"""Exact linear algebra: over F_q, over a generic field, and over F_q[t].

Three tiers:

* int matrices over F_q (fast path for the big endomorphism searches);
* element matrices over any field object (small systems over K or F_q(t));
* fqpoly-tuple matrices over F_q[t]: Smith normal form with transforms,
  kernels, and elementary divisors (the PID workhorse for module equality,
  saturation certificates, and Galois invariants).
"""

from . import fqpoly as fp


# -- matrices over F_q ---------------------------------------------------------


def fq_rref(fq, rows):
    """Row-reduce in place; returns (rows, pivot_columns)."""
    rows = [list(r) for r in rows]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = fq.inv(rows[r][c])
        if inv != 1:
            rows[r] = [fq.mul(inv, v) for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [fq.sub(v, fq.mul(f, w)) for v, w in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def fq_kernel(fq, rows, ncols):
    """Basis of the right kernel {x : A x = 0}; canonical (RREF-derived)."""
    rref, pivots = fq_rref(fq, rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [0] * ncols
        v[fcol] = 1
        for i, pc in enumerate(pivots):
            v[pc] = fq.neg(rref[i][fcol])
        basis.append(tuple(v))
    return basis


def fq_solve(fq, rows, b):
    """One solution of A x = b, or None.  rows: the matrix A by rows."""
    aug = [list(r) + [bv] for r, bv in zip(rows, b)]
    rref, pivots = fq_rref(fq, aug)
    n = len(rows[0]) if rows else 0
    for row in rref:
        if all(v == 0 for v in row[:n]) and row[n] != 0:
            return None
    x = [0] * n
    for i, pc in enumerate(pivots):
        if pc == n:
            return None
        x[pc] = rref[i][n]
    return x


class FqSolver:
    """Repeated solves of sum_j x_j * col_j = b over F_q (cached columns)."""

    def __init__(self, fq, cols):
        self.fq = fq
        self.cols = [tuple(c) for c in cols]
        self.nrows = len(cols[0]) if cols else 0

    def solve(self, b):
        rows = [
            [self.cols[j][i] for j in range(len(self.cols))]
            for i in range(self.nrows)
        ]
        return fq_solve(self.fq, rows, list(b))


# -- matrices over a generic field ----------------------------------------------


def field_rref(K, rows):
    rows = [list(r) for r in rows]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c] != K.zero:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [inv * v for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != K.zero:
                f = rows[i][c]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def field_kernel(K, rows, ncols):
    rref, pivots = field_rref(K, rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [K.zero] * ncols
        v[fcol] = K.one
        for i, pc in enumerate(pivots):
            v[pc] = -rref[i][fcol]
        basis.append(v)
    return basis


def field_solve(K, rows, b):
    aug = [list(r) + [bv] for r, bv in zip(rows, b)]
    rref, pivots = field_rref(K, aug)
    n = len(rows[0]) if rows else 0
    for row in rref:
        if all(v == K.zero for v in row[:n]) and row[n] != K.zero:
            return None
    x = [K.zero] * n
    for i, pc in enumerate(pivots):
        if pc == n:
            return None
        x[pc] = rref[i][n]
    return x


class FieldEchelon:
    """Incremental echelon over a field, reporting the first dependency.

    ``insert`` reduces the vector against the stored rows; if it vanishes the
    return value is the dependency expressed in the inserted vectors'
    coefficients, otherwise None (vector stored).
    """

    def __init__(self, K, width):
        self.K = K
        self.width = width
        self.rows = []
        self.combos = []
        self.count = 0

    def insert(self, vec):
        K = self.K
        vec = list(vec)
        combo = [K.zero] * self.count + [K.one]
        for row, rcombo in zip(self.rows, self.combos):
            piv = next(i for i, v in enumerate(row) if v != K.zero)
            if vec[piv] != K.zero:
                f = vec[piv]
                vec = [a - f * b for a, b in zip(vec, row)]
                combo = [
                    a - f * b
                    for a, b in zip(combo, rcombo + [K.zero] * (len(combo) - len(rcombo)))
                ]
        self.count += 1
        if all(v == K.zero for v in vec):
            return combo
        piv = next(i for i, v in enumerate(vec) if v != K.zero)
        inv = vec[piv].inverse()
        vec = [inv * v for v in vec]
        combo = [inv * v for v in combo]
        self.rows.append(vec)
        self.combos.append(combo)
        return None


# -- matrices over F_q[t] (entries are fqpoly tuples) ---------------------------


def _eye(fq, n):
    return [
        [(1,) if i == j else fp.ZERO for j in range(n)] for i in range(n)
    ]


def smith_normal_form(fq, M):
    """U, D, V with U*M*V = D diagonal, divisibility chain, U/V unimodular.

    M is a list of rows of fqpoly tuples.  Returns (U, D, V, divisors) where
    divisors are the monic nonzero diagonal entries in chain order.
    """
    m = len(M)
    n = len(M[0]) if m else 0
    A = [list(r) for r in M]
    U = _eye(fq, m)
    V = _eye(fq, n)

    def row_op(i, j, c):  # row_i -= c * row_j  (on A and U)
        A[i] = [fp.sub(fq, a, fp.mul(fq, c, b)) for a, b in zip(A[i], A[j])]
        U[i] = [fp.sub(fq, a, fp.mul(fq, c, b)) for a, b in zip(U[i], U[j])]

    def col_op(i, j, c):  # col_i -= c * col_j  (on A and V)
        for r in range(m):
            A[r][i] = fp.sub(fq, A[r][i], fp.mul(fq, c, A[r][j]))
        for r in range(n):
            V[r][i] = fp.sub(fq, V[r][i], fp.mul(fq, c, V[r][j]))

    def row_swap(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def col_swap(i, j):
        for r in range(m):
            A[r][i], A[r][j] = A[r][j], A[r][i]
        for r in range(n):
            V[r][i], V[r][j] = V[r][j], V[r][i]

    k = 0
    while k < min(m, n):
        # locate the minimal-degree nonzero entry in the trailing block
        piv = None
        best = None
        for i in range(k, m):
            for j in range(k, n):
                if not fp.is_zero(A[i][j]):
                    d = fp.deg(A[i][j])
                    if best is None or d < best:
                        best = d
                        piv = (i, j)
        if piv is None:
            break
        i0, j0 = piv
        if i0 != k:
            row_swap(k, i0)
        if j0 != k:
            col_swap(k, j0)
        # clear row and column k with division steps; restart if remainders
        dirty = True
        while dirty:
            dirty = False
            for i in range(k + 1, m):
                if not fp.is_zero(A[i][k]):
                    q, r = fp.divmod_(fq, A[i][k], A[k][k])
                    row_op(i, k, q)
                    if not fp.is_zero(r):
                        row_swap(k, i)
                        dirty = True
            for j in range(k + 1, n):
                if not fp.is_zero(A[k][j]):
                    q, r = fp.divmod_(fq, A[k][j], A[k][k])
                    col_op(j, k, q)
                    if not fp.is_zero(r):
                        col_swap(k, j)
                        dirty = True
        # divisibility of the remaining block by the pivot
        fixed = True
        for i in range(k + 1, m):
            for j in range(k + 1, n):
                if not fp.is_zero(A[i][j]):
                    _, r = fp.divmod_(fq, A[i][j], A[k][k])
                    if not fp.is_zero(r):
                        # fold row i into row k and redo this pivot
                        row_op(k, i, fp.neg(fq, (1,)))
                        fixed = False
                        break
            if not fixed:
                break
        if not fixed:
            continue
        # normalize pivot monic
        lc = A[k][k][-1]
        if lc != 1:
            c = fq.inv(lc)
            A[k] = [fp.scal(fq, c, a) for a in A[k]]
            U[k] = [fp.scal(fq, c, a) for a in U[k]]
        k += 1
    divisors = [A[i][i] for i in range(min(m, n)) if not fp.is_zero(A[i][i])]
    return U, A, V, divisors


def poly_mat_kernel(fq, M):
    """Basis of the right kernel over F_q[t] (saturated automatically)."""
    m = len(M)
    n = len(M[0]) if m else 0
    if m == 0:
        return [
            tuple((1,) if i == j else fp.ZERO for i in range(n))
            for j in range(n)
        ]
    _, D, V, divisors = smith_normal_form(fq, M)
    rank = len(divisors)
    basis = []
    for j in range(rank, n):
        basis.append(tuple(V[i][j] for i in range(n)))
    return basis


def elementary_divisors(fq, M):
    _, _, _, divisors = smith_normal_form(fq, M)
    return divisors
