from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Iterable, Mapping, Sequence, Union

from typing_extensions import TypeAlias

from lienil.core.errors import IndexOutOfRange, InputError, JacobiViolation, NotAnIdeal
from lienil.core.linalg.matrix import Matrix, SparseRow, Vector, unit_vector, vector
from lienil.core.linalg.scalar import ZERO, Scalar, ScalarLike
from lienil.core.linalg.subspace import Subspace
from lienil.core.utils.misc import subsets


Combination: TypeAlias = Union[Mapping[int, ScalarLike], Sequence[ScalarLike]]
"""A bracket value: either ``{k: coefficient}`` with 1-based ``k`` or a full vector"""

BracketSpec: TypeAlias = "tuple[int, int, Combination]"


@dataclass(frozen=True)
class LieAlgebra:
    """A finite-dimensional Lie algebra given by its structure constants.

    ``structure`` holds one vector per basis pair ``(i, j)`` with ``i < j``, listed in
    lexicographic order, so ``structure[pair_index(i, j)][k]`` is ``c_ij^k`` (0-based).
    Brackets with ``i >= j`` follow from antisymmetry. The Jacobi identity is checked on
    every basis triple when the algebra is constructed.
    """

    dim: int
    structure: tuple[Vector, ...]
    label: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.dim < 0:
            msg = f"Dimension must be non-negative, not {self.dim}"
            raise InputError(msg)
        expected = self.dim * (self.dim - 1) // 2
        if len(self.structure) != expected:
            msg = f"Expected {expected} structure vectors for dimension {self.dim}"
            msg += f", got {len(self.structure)}"
            raise InputError(msg)
        if any(len(v) != self.dim for v in self.structure):
            msg = f"Every structure vector must have length {self.dim}"
            raise InputError(msg)
        self._check_jacobi()

    @cached_property
    def brackets(self) -> dict[tuple[int, int], SparseRow]:
        """The nonzero brackets ``[e_i, e_j]`` with ``i < j`` (0-based) as sparse vectors."""
        out: dict[tuple[int, int], SparseRow] = {}
        for (i, j), v in zip(subsets(self.dim, 2), self.structure):
            row = {k: x for k, x in enumerate(v) if x}
            if row:
                out[i, j] = row
        return out

    def is_abelian(self) -> bool:
        return not self.brackets

    def pair_index(self, i: int, j: int) -> int:
        """Position of the pair ``i < j`` (0-based) in ``structure``."""
        return i * (2 * self.dim - i - 1) // 2 + (j - i - 1)

    def bracket_basis(self, i: int, j: int) -> Vector:
        """The bracket ``[e_i, e_j]`` of two basis elements (0-based)."""
        if i == j:
            return (ZERO,) * self.dim
        if i < j:
            return self.structure[self.pair_index(i, j)]
        return tuple(-x for x in self.structure[self.pair_index(j, i)])

    def bracket(self, x: Sequence[ScalarLike], y: Sequence[ScalarLike]) -> Vector:
        """The bracket of two vectors, expanded bilinearly through the structure constants."""
        xs, ys = vector(x), vector(y)
        if len(xs) != self.dim or len(ys) != self.dim:
            msg = f"Cannot bracket vectors of lengths {len(xs)} and {len(ys)} in dimension "
            msg += str(self.dim)
            raise InputError(msg)
        sx = {i: v for i, v in enumerate(xs) if v}
        sy = {i: v for i, v in enumerate(ys) if v}
        result = self._bracket_sparse(sx, sy)
        return tuple(result.get(k, ZERO) for k in range(self.dim))

    def relations(self) -> list[tuple[int, int, Vector]]:
        """The nonzero brackets as ``(i, j, value)`` with 1-based ``i < j``."""
        return [
            (i + 1, j + 1, self.structure[self.pair_index(i, j)]) for i, j in self.brackets
        ]

    def with_label(self, label: str | None) -> LieAlgebra:
        return replace(self, label=label)

    def __str__(self) -> str:
        name = self.label or "algebra"
        if not self.brackets:
            return f"{name} (dim {self.dim}, abelian)"
        rels = ", ".join(
            f"[{i},{j}] = {format_combination(v)}" for i, j, v in self.relations()
        )
        return f"{name} (dim {self.dim}): {rels}"

    def _bracket_sparse(self, x: SparseRow, y: SparseRow) -> SparseRow:
        out: SparseRow = {}
        brackets = self.brackets
        for i, a in x.items():
            for j, b in y.items():
                if i == j:
                    continue
                if i < j:
                    row, factor = brackets.get((i, j)), a * b
                else:
                    row, factor = brackets.get((j, i)), -(a * b)
                if row is None:
                    continue
                for k, c in row.items():
                    value = out.get(k, ZERO) + factor * c
                    if value:
                        out[k] = value
                    else:
                        out.pop(k, None)
        return out

    def _check_jacobi(self) -> None:
        if not self.brackets:
            return
        for i, j, k in subsets(self.dim, 3):
            residual: SparseRow = {}
            for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                inner = self._bracket_sparse({a: Scalar(1)}, {b: Scalar(1)})
                if not inner:
                    continue
                for idx, value in self._bracket_sparse(inner, {c: Scalar(1)}).items():
                    total = residual.get(idx, ZERO) + value
                    if total:
                        residual[idx] = total
                    else:
                        residual.pop(idx, None)
            if residual:
                raise JacobiViolation(
                    (i + 1, j + 1, k + 1),
                    [residual.get(idx, ZERO) for idx in range(self.dim)],
                )


def from_brackets(
    n: int,
    brackets: Iterable[BracketSpec],
    label: str | None = None,
) -> LieAlgebra:
    """Build an algebra from its nonzero brackets ``[e_i, e_j]`` with 1-based indices.

    Unlisted brackets are zero. A pair given as ``(j, i)`` with ``j > i`` is read through
    antisymmetry.
    """
    if n < 0:
        msg = f"Dimension must be non-negative, not {n}"
        raise InputError(msg)
    table: dict[tuple[int, int], Vector] = {}
    for i, j, value in brackets:
        for index in (i, j):
            if not 1 <= index <= n:
                msg = f"Basis index {index} is outside 1..{n}"
                raise IndexOutOfRange(msg)
        v = _combination_vector(value, n)
        if i == j:
            if any(v):
                msg = f"Bracket [{i},{i}] must be zero"
                raise InputError(msg)
            continue
        if i > j:
            i, j, v = j, i, tuple(-x for x in v)
        if (i, j) in table:
            msg = f"Bracket [{i},{j}] is given more than once"
            raise InputError(msg)
        table[i, j] = v
    zero = (ZERO,) * n
    structure = tuple(table.get((i + 1, j + 1), zero) for i, j in subsets(n, 2))
    return LieAlgebra(dim=n, structure=structure, label=label)


def zero_algebra() -> LieAlgebra:
    return LieAlgebra(dim=0, structure=(), label="0")


def direct_sum(l1: LieAlgebra, l2: LieAlgebra) -> LieAlgebra:
    """The direct sum, with the basis of ``l1`` first and no cross brackets."""
    n1, n = l1.dim, l1.dim + l2.dim
    brackets: list[BracketSpec] = [
        (i + 1, j + 1, dict((k + 1, x) for k, x in row.items()))
        for (i, j), row in l1.brackets.items()
    ]
    brackets.extend(
        (i + n1 + 1, j + n1 + 1, dict((k + n1 + 1, x) for k, x in row.items()))
        for (i, j), row in l2.brackets.items()
    )
    label = f"{l1.label}+{l2.label}" if l1.label and l2.label else None
    return from_brackets(n, brackets, label=label)


def is_ideal(l: LieAlgebra, s: Subspace) -> bool:
    """Whether ``[l, s]`` lies in ``s``."""
    _check_subspace(l, s)
    return all(
        s.contains(l.bracket(unit_vector(l.dim, i), v)) for i in range(l.dim) for v in s.vectors
    )


def is_subalgebra(l: LieAlgebra, s: Subspace) -> bool:
    """Whether ``s`` is closed under the bracket."""
    _check_subspace(l, s)
    vs = s.vectors
    return all(
        s.contains(l.bracket(vs[a], vs[b])) for a in range(len(vs)) for b in range(a + 1, len(vs))
    )


def quotient(l: LieAlgebra, ideal: Subspace) -> LieAlgebra:
    """The quotient by an ideal.

    The quotient basis is the images of the standard basis vectors ``e_c`` whose column
    ``c`` is not a pivot of the ideal's canonical basis, kept in increasing order.
    """
    if not is_ideal(l, ideal):
        msg = f"Subspace {ideal} is not an ideal"
        raise NotAnIdeal(msg)
    pivots = set(ideal.pivots)
    keep = [c for c in range(l.dim) if c not in pivots]
    position = {c: index for index, c in enumerate(keep)}
    brackets: list[BracketSpec] = []
    for a, ca in enumerate(keep):
        for b in range(a + 1, len(keep)):
            reduced = ideal.reduce(l.bracket_basis(ca, keep[b]))
            value = {position[k] + 1: x for k, x in enumerate(reduced) if x}
            if value:
                brackets.append((a + 1, b + 1, value))
    label = f"{l.label}/ideal" if l.label else None
    return from_brackets(len(keep), brackets, label=label)


def change_of_basis(l: LieAlgebra, p: Matrix) -> LieAlgebra:
    """Rewrite the algebra in the basis whose vectors are the rows of ``p``."""
    if p.shape != (l.dim, l.dim):
        msg = f"Expected a {l.dim}x{l.dim} basis matrix, got {p.rows}x{p.cols}"
        raise InputError(msg)
    inverse = p.inverse()
    brackets: list[BracketSpec] = []
    for a, b in subsets(l.dim, 2):
        w = l.bracket(p.row(a), p.row(b))
        if any(w):
            coords = inverse.transpose().apply(w)
            brackets.append((a + 1, b + 1, coords))
    return from_brackets(l.dim, brackets, label=l.label)


def format_combination(v: Sequence[Scalar], symbol: str = "v") -> str:
    """Render a vector as ``v1 - 1/2 v3`` style text, ``0`` when it is zero."""
    parts: list[str] = []
    for k, x in enumerate(v):
        if not x:
            continue
        text = str(x)
        if x.real and x.imag:
            coefficient = f"({text}) "
        elif x == 1:
            coefficient = ""
        elif x == -1:
            coefficient = "-"
        else:
            coefficient = f"{text} "
        term = f"{coefficient}{symbol}{k + 1}"
        if not parts:
            parts.append(term)
        elif term.startswith("-"):
            parts.append(f"- {term[1:]}")
        else:
            parts.append(f"+ {term}")
    return " ".join(parts) if parts else "0"


def _combination_vector(value: Combination, n: int) -> Vector:
    if isinstance(value, Mapping):
        out = [ZERO] * n
        for k, x in value.items():
            if not 1 <= k <= n:
                msg = f"Basis index {k} is outside 1..{n}"
                raise IndexOutOfRange(msg)
            out[k - 1] = out[k - 1] + Scalar.of(x)
        return tuple(out)
    v = vector(value)
    if len(v) != n:
        msg = f"Bracket value has length {len(v)}, expected {n}"
        raise InputError(msg)
    return v


def _check_subspace(l: LieAlgebra, s: Subspace) -> None:
    if s.ambient_dim != l.dim:
        msg = f"Subspace of a {s.ambient_dim}-dimensional space used in dimension {l.dim}"
        raise InputError(msg)
