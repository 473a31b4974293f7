"""Dense exact linear algebra over the package's scalar fields.

Matrices are immutable row-major arrays of scalars from a single field
tag (see :mod:`nakayama.scalars`).  Everything is computed by fraction-free
..  well, by honest exact Gauss-Jordan elimination; pivots are always the
first nonzero entry in column order so results are reproducible.
"""

from __future__ import annotations


class Matrix:
    __slots__ = ("rows", "cols", "entries", "field")

    def __init__(self, rows, cols, entries, field):
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match shape")
        self.rows = rows
        self.cols = cols
        self.entries = list(entries)
        self.field = field

    @classmethod
    def from_rows(cls, rowdata, field):
        rows = len(rowdata)
        cols = len(rowdata[0]) if rows else 0
        ents = []
        for r in rowdata:
            if len(r) != cols:
                raise ValueError("ragged rows")
            ents.extend(field.coerce(x) for x in r)
        return cls(rows, cols, ents, field)

    @classmethod
    def identity(cls, n, field):
        z, o = field.zero, field.one
        ents = [z] * (n * n)
        for i in range(n):
            ents[i * n + i] = o
        return cls(n, n, ents, field)

    @classmethod
    def zero(cls, rows, cols, field):
        return cls(rows, cols, [field.zero] * (rows * cols), field)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j):
        return self.entries[j::self.cols]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(self.entries)))

    def __add__(self, other):
        assert self.rows == other.rows and self.cols == other.cols
        return Matrix(self.rows, self.cols,
                      [a + b for a, b in zip(self.entries, other.entries)], self.field)

    def __sub__(self, other):
        assert self.rows == other.rows and self.cols == other.cols
        return Matrix(self.rows, self.cols,
                      [a - b for a, b in zip(self.entries, other.entries)], self.field)

    def __neg__(self):
        return Matrix(self.rows, self.cols, [-a for a in self.entries], self.field)

    def scale(self, c):
        c = self.field.coerce(c)
        return Matrix(self.rows, self.cols, [c * a for a in self.entries], self.field)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            assert self.cols == other.rows, "shape mismatch"
            n, m, p = self.rows, self.cols, other.cols
            z = self.field.zero
            out = [z] * (n * p)
            for i in range(n):
                base = i * m
                for k in range(m):
                    a = self.entries[base + k]
                    if not a:
                        continue
                    obase = k * p
                    rbase = i * p
                    for j in range(p):
                        b = other.entries[obase + j]
                        if b:
                            out[rbase + j] = out[rbase + j] + a * b
            return Matrix(n, p, out, self.field)
        return NotImplemented

    def apply(self, vec):
        """Matrix-vector product m @ v for a column vector (list of scalars)."""
        assert len(vec) == self.cols
        z = self.field.zero
        out = []
        for i in range(self.rows):
            acc = z
            base = i * self.cols
            for j, v in enumerate(vec):
                if v:
                    e = self.entries[base + j]
                    if e:
                        acc = acc + e * v
            out.append(acc)
        return out

    def transpose(self):
        out = []
        for j in range(self.cols):
            out.extend(self.entries[j::self.cols])
        return Matrix(self.cols, self.rows, out, self.field)

    def is_zero(self):
        return not any(self.entries)

    def __repr__(self):
        body = "; ".join(
            ", ".join(str(x) for x in self.row(i)) for i in range(self.rows)
        )
        return f"Matrix[{self.rows}x{self.cols}]({body})"


def rref(m: Matrix):
    """Reduced row echelon form: returns (rref matrix, rank, pivot columns)."""
    rows, cols = m.rows, m.cols
    a = [m.row(i) for i in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if a[i][c]:
                pr = i
                break
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = m.field.one / a[r][c]
        if a[r][c] != m.field.one:
            a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                ari = a[i]
                arr = a[r]
                a[i] = [x - f * y for x, y in zip(ari, arr)]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    ents = []
    for rr in a:
        ents.extend(rr)
    return Matrix(rows, cols, ents, m.field), r, pivots


def kernel(m: Matrix):
    """Basis of the right null space, as a list of column vectors."""
    red, rank, pivots = rref(m)
    field = m.field
    pivset = set(pivots)
    free = [c for c in range(m.cols) if c not in pivset]
    basis = []
    for fc in free:
        v = [field.zero] * m.cols
        v[fc] = field.one
        for r, pc in enumerate(pivots):
            e = red[r, fc]
            if e:
                v[pc] = -e
        basis.append(v)
    return basis


def solve(m: Matrix, b):
    """One exact solution of m @ x = b, or None when b is outside the column space."""
    field = m.field
    assert len(b) == m.rows
    aug = Matrix(
        m.rows,
        m.cols + 1,
        [x for i in range(m.rows) for x in (m.row(i) + [field.coerce(b[i])])],
        field,
    )
    red, rank, pivots = rref(aug)
    if m.cols in pivots:
        return None
    x = [field.zero] * m.cols
    for r, pc in enumerate(pivots):
        x[pc] = red[r, m.cols]
    return x


def rank(m: Matrix):
    return rref(m)[1]


def intersect_rowspaces(a_rows, b_rows, field, width):
    """Basis of the intersection of two row spaces given as lists of row vectors."""
    if not a_rows or not b_rows:
        return []
    stacked = Matrix.from_rows([list(r) for r in a_rows] + [list(r) for r in b_rows], field)
    ker = kernel(stacked.transpose())
    out = []
    for v in ker:
        coeffs = v[: len(a_rows)]
        vec = [field.zero] * width
        for c, rowv in zip(coeffs, a_rows):
            if c:
                for j, x in enumerate(rowv):
                    if x:
                        vec[j] = vec[j] + c * x
        if any(vec):
            out.append(vec)
    # reduce to a basis
    if not out:
        return []
    red, rk, _ = rref(Matrix.from_rows(out, field))
    return [red.row(i) for i in range(rk)]
