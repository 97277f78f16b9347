"""Exact dense linear algebra over a FieldSpec.

Everything here is pure and deterministic: fraction-free (Bareiss-style)
forward elimination with first-nonzero pivoting in column order, so
nullspace bases, solutions, and inverses are reproducible run to run.
Matrices are immutable after construction; sizes stay small (dimension of
an algebra squared at worst), so storage is dense.
"""

from __future__ import annotations

from .scalars import FieldSpec, Scalar


class InconsistentSystemError(ValueError):
    """The linear system has no solution."""


class NonUniqueSolutionError(ValueError):
    """The linear system is underdetermined (solution space dim >= 1)."""


class SingularMatrixError(ValueError):
    """Inverse of a singular matrix requested."""


class Matrix:
    """Immutable dense matrix; rows is a tuple of tuples of Scalar."""

    __slots__ = ("field", "data", "_sparse_cols")

    def __init__(self, field: FieldSpec, rows):
        data = tuple(tuple(field.scalar(x) for x in row) for row in rows)
        if data:
            w = len(data[0])
            if any(len(r) != w for r in data):
                raise ValueError("ragged matrix rows")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "_sparse_cols", None)

    def __setattr__(self, *a):
        raise AttributeError("Matrix is immutable")

    @property
    def rows(self) -> int:
        return len(self.data)

    @property
    def cols(self) -> int:
        return len(self.data[0]) if self.data else 0

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        one, zero = field.one(), field.zero()
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, field: FieldSpec, rows: int, cols: int) -> "Matrix":
        z = field.zero()
        return cls(field, [[z] * cols for _ in range(rows)])

    @classmethod
    def from_columns(cls, field: FieldSpec, columns) -> "Matrix":
        cols = [list(c) for c in columns]
        n = len(cols[0])
        return cls(field, [[cols[j][i] for j in range(len(cols))] for i in range(n)])

    def column(self, j: int):
        return [row[j] for row in self.data]

    def transpose(self) -> "Matrix":
        return Matrix(self.field, list(zip(*self.data)) if self.data else [])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.data == other.data

    def __hash__(self):
        return hash((self.field, self.data))

    def __add__(self, other):
        return Matrix(
            self.field,
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)],
        )

    def __sub__(self, other):
        return Matrix(
            self.field,
            [[a - b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)],
        )

    def __neg__(self):
        return Matrix(self.field, [[-a for a in r] for r in self.data])

    def __mul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} * {other.rows}x{other.cols}")
        zero = self.field.zero()
        # sparse-aware: iterate only nonzero entries of self's rows
        out = []
        odata = other.data
        for row in self.data:
            acc = [zero] * other.cols
            for k, x in enumerate(row):
                if x.is_zero():
                    continue
                for j, y in enumerate(odata[k]):
                    if not y.is_zero():
                        acc[j] = acc[j] + x * y
            out.append(acc)
        return Matrix(self.field, out)

    def pow(self, n: int) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("matrix power needs a square matrix")
        result = Matrix.identity(self.field, self.rows)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def _columns_nonzero(self):
        cols = self._sparse_cols
        if cols is None:
            cols = tuple(
                tuple((i, row[j]) for i, row in enumerate(self.data) if not row[j].is_zero())
                for j in range(self.cols)
            )
            object.__setattr__(self, "_sparse_cols", cols)
        return cols

    def apply(self, column):
        """Matrix times coordinate column (list of Scalars)."""
        zero = self.field.zero()
        out = [zero] * self.rows
        cols = self._columns_nonzero()
        for j, c in enumerate(column):
            if c.is_zero():
                continue
            for i, v in cols[j]:
                out[i] = out[i] + v * c
        return out

    def apply_row(self, row_vec):
        """Row vector times matrix (functional composed with a map)."""
        zero = self.field.zero()
        out = [zero] * self.cols
        for i, c in enumerate(row_vec):
            if c.is_zero():
                continue
            for j, x in enumerate(self.data[i]):
                if not x.is_zero():
                    out[j] = out[j] + c * x
        return out

    def is_identity(self) -> bool:
        if self.rows != self.cols:
            return False
        for i, row in enumerate(self.data):
            for j, x in enumerate(row):
                if i == j:
                    if not x.is_one():
                        return False
                elif not x.is_zero():
                    return False
        return True

    def __str__(self):
        return "\n".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.data)

    def __repr__(self):
        return f"Matrix({self.field}, {self.rows}x{self.cols})"


class Tensor3:
    """Cubic array of scalars: structure constants of a bilinear map.

    entries[i][j][k] is the coefficient of basis element k in the product
    of basis elements i and j (or the coefficient of e_j (x) e_k in a
    coproduct, with the first index the input).
    """

    __slots__ = ("field", "dim", "entries")

    def __init__(self, field: FieldSpec, entries):
        n = len(entries)
        data = tuple(
            tuple(tuple(field.scalar(x) for x in row) for row in plane) for plane in entries
        )
        for plane in data:
            if len(plane) != n or any(len(row) != n for row in plane):
                raise ValueError("tensor must be cubic")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "dim", n)
        object.__setattr__(self, "entries", data)

    def __setattr__(self, *a):
        raise AttributeError("Tensor3 is immutable")

    @classmethod
    def from_dict(cls, field: FieldSpec, dim: int, triples) -> "Tensor3":
        z = field.zero()
        entries = [[[z] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j, k), value in triples.items():
            entries[i][j][k] = field.scalar(value)
        return cls(field, entries)

    def __getitem__(self, idx):
        return self.entries[idx]

    def __eq__(self, other):
        if not isinstance(other, Tensor3):
            return NotImplemented
        return self.field == other.field and self.entries == other.entries

    def nonzero(self):
        """Yield (i, j, k, value) over nonzero entries in index order."""
        for i, plane in enumerate(self.entries):
            for j, row in enumerate(plane):
                for k, x in enumerate(row):
                    if not x.is_zero():
                        yield i, j, k, x


# ---------------------------------------------------------------------------
# fraction-free elimination
# ---------------------------------------------------------------------------

def _forward_eliminate(field: FieldSpec, rows, limit_cols=None):
    """Bareiss fraction-free forward elimination in place.

    Pivots are the first nonzero entry scanning columns left to right and
    rows top to bottom; only the first limit_cols columns are eligible as
    pivots (rows may carry augmented right-hand-side columns).  Returns
    (pivot_cols, swap_sign) where pivot_cols[r] is the pivot column of
    echelon row r.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    if limit_cols is None:
        limit_cols = ncols
    one = field.one()
    prev = one
    pivot_cols = []
    sign = 1
    r = 0
    for c in range(limit_cols):
        pivot_row = None
        for i in range(r, nrows):
            if not rows[i][c].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
            sign = -sign
        pivot = rows[r][c]
        inv_prev = one if prev.is_one() else prev.inv()
        scale = pivot * inv_prev
        for i in range(r + 1, nrows):
            head = rows[i][c]
            if head.is_zero():
                if not scale.is_one():
                    rows[i] = [x if x.is_zero() else scale * x for x in rows[i]]
                continue
            top = rows[r]
            new_row = []
            for j in range(ncols):
                a, b = rows[i][j], top[j]
                if a.is_zero():
                    val = field.zero() if (b.is_zero() or head.is_zero()) else -(head * b) * inv_prev
                elif b.is_zero():
                    val = scale * a
                else:
                    val = (pivot * a - head * b) * inv_prev
                new_row.append(val)
            new_row[c] = field.zero()
            rows[i] = new_row
        pivot_cols.append(c)
        prev = pivot
        r += 1
        if r == nrows:
            break
    return pivot_cols, sign


def _back_substitute(field: FieldSpec, rows, pivot_cols, ncols, free_values):
    """Solve an echelon system for one assignment of the free columns.

    free_values maps column index -> Scalar for every non-pivot column.
    rows carry an optional extra rhs column at index ncols.
    """
    x = [field.zero()] * ncols
    for c, v in free_values.items():
        x[c] = v
    has_rhs = len(rows[0]) > ncols if rows else False
    for r in range(len(pivot_cols) - 1, -1, -1):
        pc = pivot_cols[r]
        acc = rows[r][ncols] if has_rhs else field.zero()
        for j in range(pc + 1, ncols):
            coeff = rows[r][j]
            if not (coeff.is_zero() or x[j].is_zero()):
                acc = acc - coeff * x[j]
        x[pc] = acc / rows[r][pc]
    return x


def normalize_vector(field: FieldSpec, vec):
    """Scale so the first nonzero coordinate becomes 1; zero stays zero."""
    for v in vec:
        if not v.is_zero():
            inv = v.inv()
            return [x if x.is_zero() else inv * x for x in vec]
    return list(vec)


def nullspace(m: Matrix):
    """Exact basis of ker(m) as a list of coordinate columns.

    One basis column per free column of the echelon form, in column order,
    each normalized to leading coefficient 1.  Empty list iff m is injective.
    """
    field = m.field
    rows = [list(r) for r in m.data]
    if not rows:
        return []
    ncols = m.cols
    pivot_cols, _ = _forward_eliminate(field, rows)
    pivots = set(pivot_cols)
    free_cols = [c for c in range(ncols) if c not in pivots]
    rows = rows[: len(pivot_cols)]
    basis = []
    for f in free_cols:
        free_values = {c: field.one() if c == f else field.zero() for c in free_cols}
        basis.append(normalize_vector(field, _back_substitute(field, rows, pivot_cols, ncols, free_values)))
    return basis


def solve(m: Matrix, rhs):
    """The unique solution of m x = rhs.

    Raises InconsistentSystemError when no solution exists and
    NonUniqueSolutionError when the solution space has positive dimension;
    callers rely on the distinction (uniqueness asserts faithfulness).
    """
    field = m.field
    rhs = [field.scalar(v) for v in rhs]
    if len(rhs) != m.rows:
        raise ValueError("rhs length does not match row count")
    rows = [list(r) + [v] for r, v in zip(m.data, rhs)]
    ncols = m.cols
    if not rows:
        if ncols:
            raise NonUniqueSolutionError(f"solution space has dimension {ncols}")
        return []
    pivot_cols, _ = _forward_eliminate(field, rows, ncols)
    # consistency: eliminated rows below the rank must have zero rhs
    for r in range(len(pivot_cols), len(rows)):
        if not rows[r][ncols].is_zero():
            raise InconsistentSystemError("system has no solution")
        if any(not x.is_zero() for x in rows[r][:ncols]):
            raise AssertionError("elimination left a stray row")
    if len(pivot_cols) < ncols:
        raise NonUniqueSolutionError(
            f"solution space has dimension {ncols - len(pivot_cols)}"
        )
    rows = rows[: len(pivot_cols)]
    return _back_substitute(field, rows, pivot_cols, ncols, {})


def invert(m: Matrix) -> Matrix:
    """Exact inverse; raises SingularMatrixError on singular input."""
    if m.rows != m.cols:
        raise SingularMatrixError("only square matrices can be inverted")
    field = m.field
    n = m.rows
    one, zero = field.one(), field.zero()
    rows = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(m.data)]
    pivot_cols, _ = _forward_eliminate(field, rows, n)
    if len(pivot_cols) < n or pivot_cols != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    cols = []
    for j in range(n):
        sub = [r[:n] + [r[n + j]] for r in rows]
        cols.append(_back_substitute(field, sub, pivot_cols, n, {}))
    return Matrix.from_columns(field, cols)


def determinant(m: Matrix) -> Scalar:
    """Exact determinant via fraction-free elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant needs a square matrix")
    field = m.field
    if m.rows == 0:
        return field.one()
    rows = [list(r) for r in m.data]
    pivot_cols, sign = _forward_eliminate(field, rows)
    if len(pivot_cols) < m.rows:
        return field.zero()
    det = rows[m.rows - 1][pivot_cols[-1]]
    return det if sign == 1 else -det


def rank(m: Matrix) -> int:
    rows = [list(r) for r in m.data]
    if not rows:
        return 0
    pivot_cols, _ = _forward_eliminate(m.field, rows)
    return len(pivot_cols)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product: block (i,j) is a[i][j] * b.

    Realizes maps on a tensor square when coordinates are indexed row-major
    (index of e_i (x) e_j is i * dim + j).
    """
    if a.field != b.field:
        raise ValueError("kron requires a shared field")
    field = a.field
    zero = field.zero()
    out = [[zero] * (a.cols * b.cols) for _ in range(a.rows * b.rows)]
    for i, arow in enumerate(a.data):
        for j, x in enumerate(arow):
            if x.is_zero():
                continue
            for p, brow in enumerate(b.data):
                for q, y in enumerate(brow):
                    if not y.is_zero():
                        out[i * b.rows + p][j * b.cols + q] = x * y
    return Matrix(field, out)
