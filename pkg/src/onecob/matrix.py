"""Exact rational matrices: the category of matrices over the rationals.

A matrix is stored as integer numerators over one shared positive
denominator, kept in lowest terms (the gcd of the denominator and all
numerators is 1).  That form is canonical, so equality and hashing are
structural, and products, Kronecker products and re-indexing run on plain
``int`` arithmetic.  Individual entries come back as ``int`` when integral
and as reduced :class:`fractions.Fraction` otherwise.

>>> A = ExactMatrix.from_rows([[1, 2]])
>>> B = ExactMatrix.from_rows([[3], [4]])
>>> kron(A, B).to_rows()
[[3, 6], [4, 8]]
>>> (A @ B).to_rows()
[[11]]
"""

from __future__ import annotations

import csv
import io
import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

Scalar = int | Fraction


class DimensionError(ValueError):
    """Operands have incompatible shapes."""


class SingularMatrixError(ArithmeticError):
    """The matrix has no inverse."""


def as_scalar(value) -> Scalar:
    """Coerce ``value`` to an exact scalar (``int`` or non-integral ``Fraction``).

    Strings such as ``"3/4"`` or ``"-2"`` are accepted. Floats are refused.
    """
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, Rational):
        return as_scalar(Fraction(value.numerator, value.denominator))
    if isinstance(value, str):
        return as_scalar(Fraction(value.strip().replace("−", "-")))
    raise TypeError(f"not an exact rational: {value!r}")


def format_scalar(x: Scalar) -> str:
    """Render as ``num/den``; integers without ``/1``."""
    x = as_scalar(x)
    if isinstance(x, int):
        return str(x)
    return f"{x.numerator}/{x.denominator}"


class ExactMatrix:
    """Dense, immutable, row-major matrix of exact rationals."""

    __slots__ = ("rows", "cols", "_num", "_den", "_hash", "_nz_rows")

    def __init__(self, rows: int, cols: int, entries: Iterable = ()):
        if rows < 0 or cols < 0:
            raise DimensionError(f"negative shape {rows}x{cols}")
        vals = [as_scalar(e) for e in entries]
        if len(vals) != rows * cols:
            raise DimensionError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(vals)}"
            )
        den = math.lcm(1, *(v.denominator for v in vals if type(v) is Fraction))
        num = tuple(v * den if type(v) is int else v.numerator * (den // v.denominator)
                    for v in vals)
        self._set(rows, cols, num, den)

    def _set(self, rows, cols, num, den):
        self.rows = rows
        self.cols = cols
        self._num = num
        self._den = den
        self._hash = None
        self._nz_rows = None

    @classmethod
    def _raw(cls, rows: int, cols: int, num: tuple, den: int = 1) -> ExactMatrix:
        # trusted constructor; only reduces the common factor
        if den != 1:
            if den < 0:
                num, den = tuple(-n for n in num), -den
            g = math.gcd(den, *num)
            if g != 1:
                num, den = tuple(n // g for n in num), den // g
        m = cls.__new__(cls)
        m._set(rows, cols, num, den)
        return m

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> ExactMatrix:
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise DimensionError("ragged rows")
        return cls(n, m, (e for r in rows for e in r))

    @classmethod
    def from_sparse(
        cls, rows: int, cols: int, entries: Mapping[tuple[int, int], object]
    ) -> ExactMatrix:
        """Materialize a coordinate-list description; absent cells are zero."""
        vals = [0] * (rows * cols)
        for (i, j), v in entries.items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise DimensionError(f"cell ({i}, {j}) outside {rows}x{cols}")
            vals[i * cols + j] = v
        if all(type(v) is int for v in entries.values()):
            return cls._raw(rows, cols, tuple(vals))
        return cls(rows, cols, vals)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> ExactMatrix:
        return cls._raw(rows, cols, (0,) * (rows * cols))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def denominator(self) -> int:
        return self._den

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._num

    def _entry(self, n: int) -> Scalar:
        if self._den == 1:
            return n
        return as_scalar(Fraction(n, self._den))

    @property
    def entries(self) -> tuple[Scalar, ...]:
        if self._den == 1:
            return self._num
        return tuple(self._entry(n) for n in self._num)

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self._entry(self._num[i * self.cols + j])

    def row(self, i: int) -> tuple[Scalar, ...]:
        return tuple(self._entry(n) for n in self._num[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> list[list[Scalar]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def nonzero(self) -> dict[tuple[int, int], Scalar]:
        c = self.cols
        return {divmod(k, c): self._entry(v) for k, v in enumerate(self._num) if v}

    def _nonzero_rows(self) -> list[list[tuple[int, int]]]:
        if self._nz_rows is None:
            c, d = self.cols, self._num
            self._nz_rows = [
                [(j, d[i * c + j]) for j in range(c) if d[i * c + j]]
                for i in range(self.rows)
            ]
        return self._nz_rows

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows == other.rows and self.cols == other.cols
                and self._den == other._den and self._num == other._num)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self._den, self._num))
        return self._hash

    def __repr__(self):
        return f"ExactMatrix({self.rows}, {self.cols}, {self.to_rows()!r})"

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        return matmul(self, other)

    def __mul__(self, scalar) -> ExactMatrix:
        s = Fraction(as_scalar(scalar))
        return ExactMatrix._raw(self.rows, self.cols,
                                tuple(n * s.numerator for n in self._num),
                                self._den * s.denominator)

    __rmul__ = __mul__

    @property
    def T(self) -> ExactMatrix:
        return transpose(self)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not any(self._num)


def identity(n: int) -> ExactMatrix:
    """The identity matrix ``E_n``."""
    data = [0] * (n * n)
    for k in range(n):
        data[k * n + k] = 1
    return ExactMatrix._raw(n, n, tuple(data))


def transpose(a: ExactMatrix) -> ExactMatrix:
    r, c, d = a.rows, a.cols, a._num
    return ExactMatrix._raw(c, r, tuple(d[i * c + j] for j in range(c) for i in range(r)), a._den)


def matmul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Matrix product ``a · b`` (composition ``b`` then ``a`` in Mat)."""
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    c = b.cols
    a_nz = a._nonzero_rows()
    b_nz = b._nonzero_rows()
    out = []
    for i in range(a.rows):
        acc = [0] * c
        for k, x in a_nz[i]:
            for j, y in b_nz[k]:
                acc[j] += x * y
        out.extend(acc)
    return ExactMatrix._raw(a.rows, c, tuple(out), a._den * b._den)


def kron(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Kronecker product; cell ``[i1*rb + i2, j1*cb + j2] = a[i1,j1]*b[i2,j2]``."""
    ra, ca, rb, cb = a.rows, a.cols, b.rows, b.cols
    cols = ca * cb
    data = [0] * (ra * rb * cols)
    a_nz, b_nz = a._nonzero_rows(), b._nonzero_rows()
    for i1 in range(ra):
        for j1, x in a_nz[i1]:
            for i2 in range(rb):
                base = (i1 * rb + i2) * cols + j1 * cb
                for j2, y in b_nz[i2]:
                    data[base + j2] = x * y
    return ExactMatrix._raw(ra * rb, cols, tuple(data), a._den * b._den)


def kron_all(factors: Iterable[ExactMatrix]) -> ExactMatrix:
    """Kronecker product of a sequence; the empty product is ``[[1]]``."""
    out = identity(1)
    for f in factors:
        out = kron(out, f)
    return out


def commutation_matrix(n: int, m: int) -> ExactMatrix:
    """The ``nm x nm`` permutation matrix sending ``e_i (x) f_j`` to ``f_j (x) e_i``."""
    if n < 1 or m < 1:
        raise DimensionError("commutation matrix needs n, m >= 1")
    size = n * m
    data = [0] * (size * size)
    for i in range(n):
        for j in range(m):
            data[(j * n + i) * size + i * m + j] = 1
    return ExactMatrix._raw(size, size, tuple(data))


def vec_row(x: ExactMatrix) -> ExactMatrix:
    """Row-major flattening of ``x`` into a single row (the operator H)."""
    return ExactMatrix._raw(1, x.rows * x.cols, x._num, x._den)


def vec_col(y: ExactMatrix) -> ExactMatrix:
    """Row-major flattening of ``y`` into a single column (the operator L)."""
    return ExactMatrix._raw(y.rows * y.cols, 1, y._num, y._den)


def unvec(v: ExactMatrix, rows: int, cols: int) -> ExactMatrix:
    """Inverse of :func:`vec_row` / :func:`vec_col`."""
    if v.rows * v.cols != rows * cols or min(v.rows, v.cols) > 1:
        raise DimensionError(f"cannot reshape {v.rows}x{v.cols} to {rows}x{cols}")
    return ExactMatrix._raw(rows, cols, v._num, v._den)


def _fraction_rows(x: ExactMatrix) -> list[list[Fraction]]:
    return [[Fraction(n, x._den) for n in x._num[i * x.cols:(i + 1) * x.cols]]
            for i in range(x.rows)]


def inverse(x: ExactMatrix) -> ExactMatrix:
    """Exact inverse by Gauss-Jordan elimination over the rationals."""
    if not x.is_square():
        raise DimensionError(f"cannot invert non-square {x.rows}x{x.cols} matrix")
    n = x.rows
    a = [r + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(_fraction_rows(x))]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        pr = a[col]
        pv = pr[col]
        if pv != 1:
            pr[:] = [v / pv for v in pr]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                row = a[r]
                for k in range(col, 2 * n):
                    row[k] -= f * pr[k]
    return ExactMatrix(n, n, [v for r in a for v in r[n:]])


def rank(x: ExactMatrix) -> int:
    """Rank by exact row reduction."""
    a = _fraction_rows(x)
    r = 0
    for col in range(x.cols):
        pivot = next((k for k in range(r, x.rows) if a[k][col] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        for k in range(r + 1, x.rows):
            if a[k][col] != 0:
                f = a[k][col] / a[r][col]
                a[k] = [u - f * v for u, v in zip(a[k], a[r])]
        r += 1
        if r == x.rows:
            break
    return r


def select(x: ExactMatrix, row_order: Sequence[int] | None = None,
           col_order: Sequence[int] | None = None) -> ExactMatrix:
    """Matrix whose cell ``[i, j]`` is ``x[row_order[i], col_order[j]]``.

    Multiplying by a permutation matrix is a re-indexing of rows or
    columns; this does it without materializing the permutation.
    """
    rows = range(x.rows) if row_order is None else row_order
    cols = range(x.cols) if col_order is None else col_order
    c, d = x.cols, x._num
    return ExactMatrix._raw(len(rows), len(cols),
                            tuple(d[i * c + j] for i in rows for j in cols), x._den)


def to_csv(x: ExactMatrix) -> str:
    """One line per row, comma separated, newline terminated."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for i in range(x.rows):
        writer.writerow(format_scalar(v) for v in x.row(i))
    return buf.getvalue()


def from_csv(text: str) -> ExactMatrix:
    rows = [[cell.strip() for cell in row]
            for row in csv.reader(io.StringIO(text)) if any(c.strip() for c in row)]
    return ExactMatrix.from_rows(rows)


def to_json(x: ExactMatrix) -> dict:
    return {
        "rows": x.rows,
        "cols": x.cols,
        "entries": [[format_scalar(v) for v in x.row(i)] for i in range(x.rows)],
    }


def from_json(doc) -> ExactMatrix:
    """Accept ``{"rows", "cols", "entries"}`` or a bare list of rows.

    ``entries`` may be a list of rows or a flat row-major list.
    """
    if isinstance(doc, dict):
        rows, cols = doc.get("rows"), doc.get("cols")
        if rows == 0 or cols == 0:
            return ExactMatrix.zeros(rows, cols)
        entries = doc["entries"]
        if entries and not isinstance(entries[0], list):
            if rows is None or cols is None:
                raise DimensionError("a flat entry list needs rows and cols")
            return ExactMatrix(rows, cols, [as_scalar(v) for v in entries])
        m = ExactMatrix.from_rows(entries)
        if rows is not None and (rows, cols) != m.shape:
            raise DimensionError("declared shape does not match entries")
        return m
    return ExactMatrix.from_rows(doc)
