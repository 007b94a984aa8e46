from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from typing_extensions import TypeAlias

from lienil.core.errors import InputError, SingularMatrix
from lienil.core.linalg.scalar import ONE, ZERO, Scalar, ScalarLike

Vector: TypeAlias = "tuple[Scalar, ...]"
SparseRow: TypeAlias = "dict[int, Scalar]"


def vector(values: Iterable[ScalarLike]) -> Vector:
    """Coerce an iterable of scalar-likes to a vector."""
    return tuple(Scalar.of(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, index: int) -> Vector:
    """The standard basis vector ``e_index`` (0-based) of length ``n``."""
    return tuple(ONE if i == index else ZERO for i in range(n))


@dataclass(frozen=True)
class Matrix:
    """A dense matrix of exact scalars."""

    rows: int
    cols: int
    entries: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            msg = f"Matrix entries do not match the declared {self.rows}x{self.cols} shape"
            raise InputError(msg)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[ScalarLike]], cols: int | None = None) -> Matrix:
        """Build a matrix from row sequences. ``cols`` is required when there are no rows."""
        if cols is None:
            if not rows:
                msg = "Column count is required for a matrix without rows"
                raise InputError(msg)
            cols = len(rows[0])
        return cls(rows=len(rows), cols=cols, entries=tuple(vector(r) for r in rows))

    @classmethod
    def from_sparse(cls, rows: Sequence[Mapping[int, Scalar]], cols: int) -> Matrix:
        return cls(
            rows=len(rows),
            cols=cols,
            entries=tuple(tuple(r.get(j, ZERO) for j in range(cols)) for r in rows),
        )

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls(rows=rows, cols=cols, entries=((ZERO,) * cols,) * rows)

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(rows=n, cols=n, entries=tuple(unit_vector(n, i) for i in range(n)))

    @cached_property
    def sparse_rows(self) -> tuple[SparseRow, ...]:
        """The nonzero entries of each row keyed by column."""
        return tuple({j: v for j, v in enumerate(row) if v} for row in self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def row(self, index: int) -> Vector:
        return self.entries[index]

    def column(self, index: int) -> Vector:
        return tuple(row[index] for row in self.entries)

    def is_zero(self) -> bool:
        return not any(self.sparse_rows)

    def transpose(self) -> Matrix:
        return Matrix(
            rows=self.cols,
            cols=self.rows,
            entries=tuple(zip(*self.entries)) if self.rows else ((),) * self.cols,
        )

    def apply(self, v: Sequence[Scalar]) -> Vector:
        """The matrix-vector product ``self · v``."""
        if len(v) != self.cols:
            msg = f"Cannot apply a {self.rows}x{self.cols} matrix to a vector of length {len(v)}"
            raise InputError(msg)
        return tuple(sum((x * v[j] for j, x in row.items()), ZERO) for row in self.sparse_rows)

    def scale(self, factor: ScalarLike) -> Matrix:
        c = Scalar.of(factor)
        return Matrix(
            rows=self.rows,
            cols=self.cols,
            entries=tuple(tuple(c * x for x in row) for row in self.entries),
        )

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            msg = f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            raise InputError(msg)
        rhs = other.sparse_rows
        out: list[SparseRow] = []
        for row in self.sparse_rows:
            acc: SparseRow = {}
            for k, x in row.items():
                for j, y in rhs[k].items():
                    acc[j] = acc.get(j, ZERO) + x * y
            out.append(acc)
        return Matrix.from_sparse(out, other.cols)

    def __add__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix(
            rows=self.rows,
            cols=self.cols,
            entries=tuple(
                tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.entries, other.entries)
            ),
        )

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def __neg__(self) -> Matrix:
        return self.scale(-1)

    def kron(self, other: Matrix) -> Matrix:
        """The Kronecker product, with ``self`` indexing the slower coordinate."""
        out: list[SparseRow] = []
        for row in self.sparse_rows:
            for inner in other.sparse_rows:
                out.append(
                    {
                        j * other.cols + l: x * y
                        for j, x in row.items()
                        for l, y in inner.items()
                    }
                )
        return Matrix.from_sparse(out, self.cols * other.cols)

    def inverse(self) -> Matrix:
        """The inverse of a square matrix, via the RREF of ``[self | I]``."""
        if self.rows != self.cols:
            msg = f"Cannot invert a non-square {self.rows}x{self.cols} matrix"
            raise SingularMatrix(msg)
        n = self.rows
        augmented = Matrix(
            rows=n,
            cols=2 * n,
            entries=tuple(r + unit_vector(n, i) for i, r in enumerate(self.entries)),
        )
        reduced, _, pivots = rref(augmented)
        if pivots[:n] != list(range(n)):
            msg = "Matrix is singular"
            raise SingularMatrix(msg)
        return Matrix(rows=n, cols=n, entries=tuple(r[n:] for r in reduced.entries))

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.entries)

    def _check_same_shape(self, other: Matrix) -> None:
        if self.shape != other.shape:
            msg = f"Shape mismatch: {self.shape} and {other.shape}"
            raise InputError(msg)


def rref(m: Matrix) -> tuple[Matrix, int, list[int]]:
    """The reduced row-echelon form of a matrix, its rank, and its pivot columns.

    The pivot in each column is the first row (from the current one down) with a nonzero
    entry, so the output is reproducible. Zero rows are kept at the bottom.
    """
    rows: list[SparseRow] = [dict(r) for r in m.sparse_rows]
    pivots: list[int] = []
    rank = 0
    for col in range(m.cols):
        if rank == len(rows):
            break
        found = next((i for i in range(rank, len(rows)) if col in rows[i]), None)
        if found is None:
            continue
        rows[rank], rows[found] = rows[found], rows[rank]
        inverse = ONE / rows[rank][col]
        pivot_row = {j: x * inverse for j, x in rows[rank].items()}
        rows[rank] = pivot_row
        for i, row in enumerate(rows):
            if i == rank or col not in row:
                continue
            factor = row[col]
            for j, x in pivot_row.items():
                value = row.get(j, ZERO) - factor * x
                if value:
                    row[j] = value
                else:
                    row.pop(j, None)
        pivots.append(col)
        rank += 1
    return Matrix.from_sparse(rows, m.cols), rank, pivots


def rank(m: Matrix) -> int:
    return rref(m)[1]


def kernel_basis(m: Matrix) -> Matrix:
    """A basis of ``{v : m·v = 0}``, one row per free column of the RREF."""
    reduced, _, pivots = rref(m)
    pivot_set = set(pivots)
    basis: list[SparseRow] = []
    for free in (c for c in range(m.cols) if c not in pivot_set):
        v: SparseRow = {free: ONE}
        for i, p in enumerate(pivots):
            x = reduced.entries[i][free]
            if x:
                v[p] = -x
        basis.append(v)
    return Matrix.from_sparse(basis, m.cols)
