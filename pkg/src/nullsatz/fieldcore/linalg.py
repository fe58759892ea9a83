"""Exact dense linear algebra over any field in :mod:`nullsatz.fieldcore.fields`.

Matrices are lists of rows of raw field values.  ``ExactMatrix`` wraps a
matrix together with its field for the public API; the module-level helpers
with an explicit field argument are what the rest of the package uses.
"""

from ..errors import DimensionMismatch


def zeros(F, rows, cols):
    return [[F.zero] * cols for _ in range(rows)]


def identity(F, n):
    M = zeros(F, n, n)
    for i in range(n):
        M[i][i] = F.one
    return M


def transpose(M, cols=None):
    if not M:
        return [[] for _ in range(cols or 0)]
    return [list(col) for col in zip(*M)]


def matmul(F, A, B):
    if not A:
        return []
    if not B:
        return [[] for _ in A]
    n = len(B[0])
    out = []
    zero, add, mul, is_zero = F.zero, F.add, F.mul, F.is_zero
    for row in A:
        acc = [zero] * n
        for k, a in enumerate(row):
            if is_zero(a):
                continue
            brow = B[k]
            for j in range(n):
                b = brow[j]
                if not is_zero(b):
                    acc[j] = add(acc[j], mul(a, b))
        out.append(acc)
    return out


def matvec(F, A, v):
    out = []
    for row in A:
        acc = F.zero
        for a, b in zip(row, v):
            if not F.is_zero(a) and not F.is_zero(b):
                acc = F.add(acc, F.mul(a, b))
        out.append(acc)
    return out


def vecmat(F, v, A):
    if not A:
        return []
    acc = [F.zero] * len(A[0])
    for c, row in zip(v, A):
        if F.is_zero(c):
            continue
        for j, a in enumerate(row):
            if not F.is_zero(a):
                acc[j] = F.add(acc[j], F.mul(c, a))
    return acc


def vec_add(F, u, v):
    return [F.add(a, b) for a, b in zip(u, v)]


def vec_sub(F, u, v):
    return [F.sub(a, b) for a, b in zip(u, v)]


def vec_scale(F, c, v):
    return [F.mul(c, a) for a in v]


def is_zero_vec(F, v):
    return all(F.is_zero(a) for a in v)


def rref(F, M):
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    R = [list(r) for r in M]
    if not R:
        return [], []
    ncols = len(R[0])
    pivots = []
    r = 0
    zero, is_zero, sub, mul, inv = F.zero, F.is_zero, F.sub, F.mul, F.inv
    for c in range(ncols):
        p = None
        for i in range(r, len(R)):
            if not is_zero(R[i][c]):
                p = i
                break
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        piv = R[r]
        iv = inv(piv[c])
        if iv != F.one:
            piv = [mul(iv, a) if not is_zero(a) else zero for a in piv]
            R[r] = piv
        nz = [j for j in range(c, ncols) if not is_zero(piv[j])]
        for i in range(len(R)):
            if i == r:
                continue
            f = R[i][c]
            if is_zero(f):
                continue
            row = R[i]
            for j in nz:
                row[j] = sub(row[j], mul(f, piv[j]))
        pivots.append(c)
        r += 1
        if r == len(R):
            break
    return R[:r], pivots


def rank(F, M):
    return len(rref(F, M)[1])


def kernel_basis_raw(F, M, ncols=None):
    """Basis of the right null space {v : M v = 0}."""
    if ncols is None:
        ncols = len(M[0]) if M else 0
    R, pivots = rref(F, M) if M else ([], [])
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for fcol in free:
        v = [F.zero] * ncols
        v[fcol] = F.one
        for row, pc in zip(R, pivots):
            if not F.is_zero(row[fcol]):
                v[pc] = F.neg(row[fcol])
        basis.append(v)
    return basis


def solve(F, A, b):
    """One solution x of A x = b, or None if inconsistent."""
    ncols = len(A[0]) if A else 0
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = rref(F, aug)
    if ncols in pivots:
        return None
    x = [F.zero] * ncols
    for row, pc in zip(R, pivots):
        x[pc] = row[ncols]
    return x


def solve_many(F, A, B):
    """Solve A X = B column by column; B is a list of right-hand side vectors.

    Returns a list of solutions (None where inconsistent).  One elimination
    pass serves every right-hand side.
    """
    ncols = len(A[0]) if A else 0
    nrhs = len(B)
    aug = [list(row) + [B[k][i] for k in range(nrhs)] for i, row in enumerate(A)]
    R, pivots = rref(F, aug)
    out = []
    for k in range(nrhs):
        col = ncols + k
        if col in pivots:
            out.append(None)
            continue
        x = [F.zero] * ncols
        for row, pc in zip(R, pivots):
            if pc < ncols:
                x[pc] = row[col]
        out.append(x)
    return out


def inverse(F, M):
    n = len(M)
    aug = [list(row) + e for row, e in zip(M, identity(F, n))]
    R, pivots = rref(F, aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in R]


def row_basis(F, rows, ncols=None):
    return rref(F, rows)[0] if rows else []


def in_rowspace(F, R, pivots, v):
    """Membership of v in the span of an RREF basis R with given pivots."""
    w = list(v)
    for row, pc in zip(R, pivots):
        c = w[pc]
        if not F.is_zero(c):
            w = [F.sub(a, F.mul(c, b)) for a, b in zip(w, row)]
    return is_zero_vec(F, w)


def intersect_rowspaces_raw(F, spaces, ncols):
    """Basis (RREF) of the intersection of row spaces of the given matrices."""
    duals = []
    for S in spaces:
        if any(len(r) != ncols for r in S):
            raise DimensionMismatch("row length differs from column count",
                                    "fieldcore", "intersect_rowspaces")
        duals.extend(kernel_basis_raw(F, S, ncols) if S else
                     [row for row in identity(F, ncols)])
    if not duals:
        return identity(F, ncols)
    return row_basis(F, kernel_basis_raw(F, duals, ncols))


class IncrementalBasis:
    """Row echelon basis grown one vector at a time.

    ``add(v, tag)`` inserts v and returns None when v is independent of what
    was inserted before; otherwise it returns a dict ``{tag: coeff}`` with
    v equal to the corresponding combination of earlier inserted vectors.
    """

    def __init__(self, F, ncols):
        self.F = F
        self.ncols = ncols
        self.rows = []  # (pivot, row, combination)

    def __len__(self):
        return len(self.rows)

    def reduce(self, v):
        F = self.F
        w = list(v)
        comb = {}
        for pc, row, rc in self.rows:
            c = w[pc]
            if F.is_zero(c):
                continue
            for j in range(pc, self.ncols):
                if not F.is_zero(row[j]):
                    w[j] = F.sub(w[j], F.mul(c, row[j]))
            for tag, a in rc.items():
                comb[tag] = F.add(comb.get(tag, F.zero), F.mul(c, a))
        return w, comb

    def add(self, v, tag):
        F = self.F
        w, comb = self.reduce(v)
        for pc in range(self.ncols):
            if not F.is_zero(w[pc]):
                break
        else:
            return {t: c for t, c in comb.items() if not F.is_zero(c)}
        iv = F.inv(w[pc])
        row = [F.mul(iv, a) for a in w]
        rc = {t: F.neg(F.mul(iv, c)) for t, c in comb.items()}
        rc[tag] = F.add(rc.get(tag, F.zero), iv)
        # keep rows fully reduced against the new pivot
        new_rows = []
        for opc, orow, orc in self.rows:
            c = orow[pc]
            if not F.is_zero(c):
                orow = [F.sub(a, F.mul(c, b)) for a, b in zip(orow, row)]
                orc = dict(orc)
                for t, a in rc.items():
                    orc[t] = F.sub(orc.get(t, F.zero), F.mul(c, a))
            new_rows.append((opc, orow, orc))
        new_rows.append((pc, row, rc))
        new_rows.sort(key=lambda t: t[0])
        self.rows = new_rows
        return None

    def contains(self, v):
        w, _ = self.reduce(v)
        return is_zero_vec(self.F, w)


class Coordinatizer:
    """Coordinates of vectors with respect to a fixed independent list."""

    def __init__(self, F, vectors):
        self.F = F
        self.vectors = [list(v) for v in vectors]
        n = len(self.vectors)
        _, pivots = rref(F, self.vectors) if n else ([], [])
        if len(pivots) < n:
            raise ValueError("vectors are not independent")
        # the pivot columns give an invertible n x n minor
        self._cols = pivots
        minor = [[v[c] for c in pivots] for v in self.vectors]
        self._inv = inverse(F, minor) if n else []

    def coords(self, v, check=True):
        F = self.F
        if not self.vectors:
            if check and not is_zero_vec(F, v):
                raise ValueError("vector not in span")
            return []
        x = vecmat(F, [v[c] for c in self._cols], self._inv)
        if check and vecmat(F, x, self.vectors) != list(v):
            raise ValueError("vector not in span")
        return x


class ExactMatrix:
    """A matrix with entries in a single field."""

    def __init__(self, field, rows, ncols=None):
        self.field = field
        self.rows = [[field.convert(a) for a in r] for r in rows]
        self.nrows = len(self.rows)
        self.ncols = ncols if ncols is not None else (len(self.rows[0]) if self.rows else 0)
        if any(len(r) != self.ncols for r in self.rows):
            raise DimensionMismatch("ragged matrix", "fieldcore", "ExactMatrix")

    def __eq__(self, other):
        return (isinstance(other, ExactMatrix) and self.field == other.field
                and self.rows == other.rows and self.ncols == other.ncols)

    def __repr__(self):
        return f"ExactMatrix({self.field!r}, {self.rows!r})"

    def __matmul__(self, other):
        return ExactMatrix(self.field, matmul(self.field, self.rows, other.rows), other.ncols)

    def apply(self, v):
        return matvec(self.field, self.rows, v)


def rref_matrix(M):
    """rref(M) -> (ExactMatrix, pivot columns, rank)."""
    R, pivots = rref(M.field, M.rows) if M.rows else ([], [])
    return ExactMatrix(M.field, R, M.ncols), pivots, len(pivots)


def kernel_basis(M):
    return kernel_basis_raw(M.field, M.rows, M.ncols)


def intersect_rowspaces(Ms):
    if not Ms:
        raise DimensionMismatch("no spaces given", "fieldcore", "intersect_rowspaces")
    F, ncols = Ms[0].field, Ms[0].ncols
    if any(M.ncols != ncols for M in Ms):
        raise DimensionMismatch("column counts differ", "fieldcore", "intersect_rowspaces")
    return ExactMatrix(F, intersect_rowspaces_raw(F, [M.rows for M in Ms], ncols), ncols)
