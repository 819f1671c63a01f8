"""Dense exact linear algebra over a coefficient field.

Vectors are plain lists of field elements.  Pivoting is deterministic
(leftmost nonzero column, first usable row), so every basis produced here is
reproducible run to run.
"""

from __future__ import annotations


class Subspace:
    """Growable row-echelon span supporting membership tests and rank."""

    def __init__(self, field, dim: int):
        self.field = field
        self.dim = dim
        self.rows = []
        self.pivots = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec) -> list:
        """Residual of vec after elimination against the stored rows."""
        f = self.field
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if f.is_zero(c):
                continue
            for j in range(p, self.dim):
                v[j] = f.sub(v[j], f.mul(c, row[j]))
        return v

    def contains(self, vec) -> bool:
        f = self.field
        return all(f.is_zero(c) for c in self.reduce(vec))

    def add(self, vec) -> bool:
        """Insert vec into the span; True when the rank grew."""
        f = self.field
        v = self.reduce(vec)
        pivot = next((j for j in range(self.dim) if not f.is_zero(v[j])), None)
        if pivot is None:
            return False
        inv = f.inv(v[pivot])
        v = [f.mul(c, inv) for c in v]
        # keep earlier rows reduced against the new one
        for row in self.rows:
            c = row[pivot]
            if not f.is_zero(c):
                for j in range(pivot, self.dim):
                    row[j] = f.sub(row[j], f.mul(c, v[j]))
        at = next((k for k, p in enumerate(self.pivots) if p > pivot), len(self.pivots))
        self.rows.insert(at, v)
        self.pivots.insert(at, pivot)
        return True


def span_rank(vectors, dim: int, field) -> int:
    space = Subspace(field, dim)
    for v in vectors:
        space.add(v)
    return space.rank


def rref(rows, ncols: int, field):
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    mat = [list(r) for r in rows]
    pivots = []
    r = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(r, len(mat)) if not field.is_zero(mat[i][col])), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = field.inv(mat[r][col])
        mat[r] = [field.mul(c, inv) for c in mat[r]]
        for i in range(len(mat)):
            if i != r and not field.is_zero(mat[i][col]):
                c = mat[i][col]
                mat[i] = [field.sub(a, field.mul(c, b)) for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def matrix_rank(rows, ncols: int, field) -> int:
    return len(rref(rows, ncols, field)[1])


def kernel_basis(rows, ncols: int, field) -> list:
    """Basis of the right kernel {v : A v = 0}; A given as a list of rows."""
    echelon, pivots = rref(rows, ncols, field)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [field.zero] * ncols
        v[free] = field.one
        for row, p in zip(echelon, pivots):
            v[p] = field.neg(row[free])
        basis.append(v)
    return basis


def solve_columns(columns, target, field):
    """Coefficients x with sum x_i * columns[i] = target, or None.

    When the columns are dependent the particular solution with free
    coordinates zero is returned.
    """
    k = len(columns)
    n = len(target)
    rows = [[columns[j][i] for j in range(k)] + [target[i]] for i in range(n)]
    echelon, pivots = rref(rows, k + 1, field)
    if k in pivots:
        return None
    x = [field.zero] * k
    for row, p in zip(echelon, pivots):
        x[p] = row[k]
    return x
