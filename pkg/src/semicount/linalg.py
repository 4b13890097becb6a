"""Exact linear algebra over a finite field.

Vectors are plain tuples of element codes, always coordinates with respect
to one fixed ordered basis of the ambient space.  Matrices store a flat
row-major tuple of codes plus their field; all operations are pure and all
values immutable, so everything is safe to share between workers.

Gaussian elimination uses the leftmost-nonzero pivot convention scanning
rows top-down; the reduced row echelon form it produces is the unique
Schubert-style normal form of a row space, which is exactly what the
basis-adaptation machinery in `flags` relies on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf import FiniteField

Vector = tuple[int, ...]


@dataclass(frozen=True)
class Matrix:
    """Dense matrix over a finite field; entries row-major element codes."""

    ctx: FiniteField
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}")

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> Vector:
        return self.entries[j::self.cols]

    def row_list(self) -> list[list[int]]:
        """Mutable row-major copy for elimination routines."""
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))


def matrix_from_rows(ctx: FiniteField, rows, cols: int | None = None) -> Matrix:
    rows = [tuple(r) for r in rows]
    if cols is None:
        if not rows:
            raise ValueError("cols is required for a matrix with no rows")
        cols = len(rows[0])
    if any(len(r) != cols for r in rows):
        raise ValueError("ragged rows")
    flat = tuple(x for r in rows for x in r)
    if any(not 0 <= x < ctx.q for x in flat):
        raise ValueError("entry code out of field range")
    return Matrix(ctx, len(rows), cols, flat)


def matrix_from_cols(ctx: FiniteField, cols, rows: int | None = None) -> Matrix:
    return transpose(matrix_from_rows(ctx, cols, rows))


def identity_matrix(ctx: FiniteField, g: int) -> Matrix:
    return Matrix(ctx, g, g, tuple(1 if i == j else 0 for i in range(g) for j in range(g)))


def zero_matrix(ctx: FiniteField, rows: int, cols: int) -> Matrix:
    return Matrix(ctx, rows, cols, (0,) * (rows * cols))


def standard_basis(g: int) -> tuple[Vector, ...]:
    """Unit coordinate vectors; codes 0/1 are valid in every field."""
    return tuple(tuple(1 if i == j else 0 for j in range(g)) for i in range(g))


def transpose(A: Matrix) -> Matrix:
    e = A.entries
    c = A.cols
    return Matrix(A.ctx, c, A.rows, tuple(e[i * c + j] for j in range(c) for i in range(A.rows)))


def _require_same_field(a: FiniteField, b: FiniteField) -> None:
    if a is not b and a != b:
        raise ValueError("mixed field contexts")


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    _require_same_field(A.ctx, B.ctx)
    if A.cols != B.rows:
        raise ValueError(f"dimension mismatch: {A.rows}x{A.cols} times {B.rows}x{B.cols}")
    ctx = A.ctx
    q = ctx.q
    madd, mmul = ctx._add, ctx._mul
    a, b = A.entries, B.entries
    n, m, k = A.rows, A.cols, B.cols
    out = []
    if madd is not None:
        for i in range(n):
            base = i * m
            for j in range(k):
                s = 0
                for t in range(m):
                    x = a[base + t]
                    if x:
                        s = madd[s * q + mmul[x * q + b[t * k + j]]]
                out.append(s)
    else:
        for i in range(n):
            base = i * m
            for j in range(k):
                s = 0
                for t in range(m):
                    s = ctx.add(s, ctx.mul(a[base + t], b[t * k + j]))
                out.append(s)
    return Matrix(ctx, n, k, tuple(out))


def mat_apply(A: Matrix, v: Vector) -> Vector:
    """A·v for a coordinate column vector v."""
    if len(v) != A.cols:
        raise ValueError(f"vector length {len(v)} vs {A.rows}x{A.cols} matrix")
    ctx = A.ctx
    a = A.entries
    m = A.cols
    out = []
    for i in range(A.rows):
        s = 0
        base = i * m
        for t in range(m):
            x = a[base + t]
            if x:
                s = ctx.add(s, ctx.mul(x, v[t]))
        out.append(s)
    return tuple(out)


def map_entries(A: Matrix, exponent: int) -> Matrix:
    """Apply the Frobenius power a -> a^(p^exponent) to every entry."""
    if exponent % A.ctx.d == 0:
        return A
    table = A.ctx.frobenius_table(exponent)
    return Matrix(A.ctx, A.rows, A.cols, tuple(table[x] for x in A.entries))


def frobenius_vector(ctx: FiniteField, v: Vector, exponent: int) -> Vector:
    if exponent % ctx.d == 0:
        return tuple(v)
    table = ctx.frobenius_table(exponent)
    return tuple(table[x] for x in v)


def _eliminate(ctx: FiniteField, rows: list[list[int]], reduce_up: bool):
    """In-place Gaussian elimination; returns pivot column indices."""
    if not rows:
        return []
    n, m = len(rows), len(rows[0])
    pivots = []
    r = 0
    for col in range(m):
        pivot_row = None
        for i in range(r, n):
            if rows[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        lead = rows[r][col]
        if lead != 1:
            inv_lead = ctx.inv(lead)
            rows[r] = [ctx.mul(inv_lead, x) for x in rows[r]]
        span = range(n) if reduce_up else range(r + 1, n)
        for i in span:
            if i != r and rows[i][col]:
                factor = rows[i][col]
                src = rows[r]
                dst = rows[i]
                for j in range(col, m):
                    if src[j]:
                        dst[j] = ctx.sub(dst[j], ctx.mul(factor, src[j]))
        pivots.append(col)
        r += 1
        if r == n:
            break
    return pivots


def rank(A: Matrix) -> int:
    rows = A.row_list()
    return len(_eliminate(A.ctx, rows, reduce_up=False))


def rref(A: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and its pivot column indices (0-based).

    Unique normal form: pivot entries 1, pivot columns otherwise 0, pivot
    indices strictly increasing by row, zero rows last.
    """
    rows = A.row_list()
    pivots = _eliminate(A.ctx, rows, reduce_up=True)
    flat = tuple(x for row in rows for x in row)
    return Matrix(A.ctx, A.rows, A.cols, flat), tuple(pivots)


def rref_basis(ctx: FiniteField, vectors) -> tuple[Vector, ...]:
    """Canonical basis (nonzero rref rows) of the span of the given vectors.

    Representation-independent: any two spanning sets of the same subspace
    yield the same tuple, so this doubles as a subspace normal form.
    """
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        return ()
    R, pivots = rref(matrix_from_rows(ctx, vectors))
    return tuple(R.row(i) for i in range(len(pivots)))


def span_dim(ctx: FiniteField, vectors) -> int:
    """Dimension of the span of a sequence of coordinate vectors."""
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        return 0
    return rank(matrix_from_rows(ctx, vectors))


def in_span(ctx: FiniteField, vectors, v: Vector) -> bool:
    vectors = [tuple(v_) for v_ in vectors]
    if not vectors:
        return all(x == 0 for x in v)
    base = span_dim(ctx, vectors)
    return span_dim(ctx, vectors + [tuple(v)]) == base


def kernel_basis(A: Matrix) -> tuple[Vector, ...]:
    """Basis of the right null space {v : A·v = 0}; size cols - rank."""
    ctx = A.ctx
    R, pivots = rref(A)
    pivot_set = set(pivots)
    free = [j for j in range(A.cols) if j not in pivot_set]
    basis = []
    for f in free:
        v = [0] * A.cols
        v[f] = 1
        for i, pc in enumerate(pivots):
            # pivot row i reads: v[pc] + sum over free j of R[i,j]*v[j] = 0
            v[pc] = ctx.neg(R.at(i, f))
        basis.append(tuple(v))
    return tuple(basis)


def mat_inverse(A: Matrix) -> Matrix:
    if A.rows != A.cols:
        raise ValueError("only square matrices are invertible")
    ctx = A.ctx
    g = A.rows
    aug = [list(A.row(i)) + [1 if j == i else 0 for j in range(g)] for i in range(g)]
    pivots = _eliminate(ctx, aug, reduce_up=True)
    if len(pivots) != g or any(p >= g for p in pivots):
        raise ValueError("matrix is singular")
    flat = tuple(x for row in aug for x in row[g:])
    return Matrix(ctx, g, g, flat)


def column_space_basis(A: Matrix) -> tuple[Vector, ...]:
    """Canonical (rref) basis of the column space."""
    return rref_basis(A.ctx, [A.col(j) for j in range(A.cols)])
