"""A truncated matrix model of the Weyl algebra, used as an independent check.

Each mode acts on polynomials of degree below ``levels`` in the basis ``e_0 .. e_{N-1}``:
``a`` differentiates (``a e_n = n e_{n-1}``) and ``b`` multiplies by the variable
(``b e_n = e_{n+1}``, with ``b e_{N-1} = 0``). All entries stay in ``Q(i)``. The matrices
are not adjoints of each other, so adjointness is only ever checked symbolically.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from math import inf
from typing import Literal, Sequence

from lienil.core.config import get_settings
from lienil.core.errors import InputError, ModeMismatch
from lienil.core.linalg.matrix import Matrix, SparseRow
from lienil.core.linalg.scalar import ONE, ZERO, Scalar, ScalarLike
from lienil.core.utils.batch import ComputeBatch, anysync
from lienil.core.weyl.element import WeylElement, linear_combination
from lienil.core.weyl.realization import Realization

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PairSpec:
    """How one mode's ladder pair is represented: plain, or shifted by ``(α I, β I)``."""

    kind: Literal["bosonic", "shifted"] = "bosonic"
    alpha: Scalar = ZERO
    beta: Scalar = ZERO

    @classmethod
    def bosonic(cls) -> PairSpec:
        return cls()

    @classmethod
    def shifted(cls, alpha: ScalarLike, beta: ScalarLike) -> PairSpec:
        a, b = Scalar.of(alpha), Scalar.of(beta)
        if a == b.conjugate():
            logger.warning("Shift pair alpha=%s, beta=%s has alpha = conj(beta)", a, b)
        return cls(kind="shifted", alpha=a, beta=b)


@dataclass(frozen=True)
class FockRep:
    modes: int
    levels: int
    pair_specs: tuple[PairSpec, ...]

    @property
    def size(self) -> int:
        return self.levels**self.modes

    @cached_property
    def _lowering(self) -> tuple[Matrix, ...]:
        return tuple(
            _single_lowering(self.levels) + Matrix.identity(self.levels).scale(spec.alpha)
            for spec in self.pair_specs
        )

    @cached_property
    def _raising(self) -> tuple[Matrix, ...]:
        return tuple(
            _single_raising(self.levels) + Matrix.identity(self.levels).scale(spec.beta)
            for spec in self.pair_specs
        )

    def single_mode(self, mode: int, p: int, q: int) -> Matrix:
        """``b^p a^q`` on one mode (0-based), as an ``N x N`` matrix."""
        out = Matrix.identity(self.levels)
        for _ in range(p):
            out = out @ self._raising[mode]
        for _ in range(q):
            out = out @ self._lowering[mode]
        return out

    def index(self, levels: Sequence[int]) -> int:
        """Position of the basis tuple ``(n_1, ..., n_m)``, the first mode varying slowest."""
        position = 0
        for n in levels:
            position = position * self.levels + n
        return position


def build_rep(
    modes: int,
    levels: int | None = None,
    pair_specs: Sequence[PairSpec] | None = None,
) -> FockRep:
    n = get_settings().fock_levels if levels is None else levels
    if n < 2:
        msg = f"A Fock representation needs at least 2 levels, not {n}"
        raise InputError(msg)
    if modes < 1:
        msg = f"A Fock representation needs at least one mode, not {modes}"
        raise InputError(msg)
    specs = tuple(pair_specs) if pair_specs is not None else (PairSpec.bosonic(),) * modes
    if len(specs) != modes:
        msg = f"Got {len(specs)} pair specs for {modes} modes"
        raise ModeMismatch(msg)
    logger.debug("Building a %d-mode Fock representation with %d levels", modes, n)
    return FockRep(modes=modes, levels=n, pair_specs=specs)


def to_matrix(rep: FockRep, x: WeylElement) -> Matrix:
    """Evaluate an element term by term, each term a Kronecker product over the modes."""
    if x.modes != rep.modes:
        msg = f"Element on {x.modes} modes given to a {rep.modes}-mode representation"
        raise ModeMismatch(msg)
    total: dict[int, SparseRow] = {}
    for (p, q), c in x.terms:
        term = rep.single_mode(0, p[0], q[0])
        for mode in range(1, rep.modes):
            term = term.kron(rep.single_mode(mode, p[mode], q[mode]))
        for r, row in enumerate(term.sparse_rows):
            acc = total.setdefault(r, {})
            for j, v in row.items():
                value = acc.get(j, ZERO) + c * v
                if value:
                    acc[j] = value
                else:
                    acc.pop(j, None)
    return Matrix.from_sparse([total.get(r, {}) for r in range(rep.size)], rep.size)


@dataclass(frozen=True)
class CommutatorCheck:
    """The outcome of comparing a matrix commutator with its expected value.

    Only the safe columns are compared: basis tuples whose every index is at most
    ``levels - 1 - budget``, where truncation cannot reach.
    """

    budget: int
    safe_columns: tuple[int, ...]
    mismatches: tuple[int, ...] = ()
    error: str | None = None
    label: str = field(default="", compare=False)

    @property
    def ok(self) -> bool:
        return self.error is None and not self.mismatches

    def __str__(self) -> str:
        head = f"{self.label}: " if self.label else ""
        if self.error:
            return f"{head}error: {self.error}"
        if self.mismatches:
            return f"{head}mismatch on columns {list(self.mismatches)}"
        return f"{head}ok on {len(self.safe_columns)} safe columns"


def safe_commutator_check(
    rep: FockRep,
    x: WeylElement,
    y: WeylElement,
    expected: WeylElement,
    label: str = "",
) -> CommutatorCheck:
    """Compare ``[X, Y]`` with the matrix of ``expected`` on the safe columns."""
    degrees = [d for d in (x.degree + y.degree, expected.degree) if d != -inf]
    budget = int(max(degrees, default=0))
    top = rep.levels - 1 - budget
    if top < 0:
        msg = f"no safe columns: {rep.levels} levels cannot hold a degree budget of {budget}"
        return CommutatorCheck(budget=budget, safe_columns=(), error=msg, label=label)
    safe = tuple(rep.index(t) for t in product(range(top + 1), repeat=rep.modes))
    mx, my, me = to_matrix(rep, x), to_matrix(rep, y), to_matrix(rep, expected)
    mismatches = []
    for column in safe:
        unit = tuple(ONE if k == column else ZERO for k in range(rep.size))
        got = _subtract(mx.apply(my.apply(unit)), my.apply(mx.apply(unit)))
        if got != me.apply(unit):
            mismatches.append(column)
    return CommutatorCheck(
        budget=budget, safe_columns=safe, mismatches=tuple(mismatches), label=label
    )


@dataclass(frozen=True)
class FockReport:
    levels: int
    checks: tuple[CommutatorCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_dict(self) -> dict[str, object]:
        return {
            "levels": self.levels,
            "ok": self.ok,
            "checks": [str(c) for c in self.checks],
        }


def check_realization_at(
    realization: Realization,
    levels: int,
    pair_specs: Sequence[PairSpec] | None = None,
) -> FockReport:
    """Check every generator pair of a realization against the matrix model."""
    rep = build_rep(realization.modes, levels, pair_specs)
    l, xs = realization.algebra, realization.assignment
    checks = []
    for i in range(l.dim):
        for j in range(i + 1, l.dim):
            expected = linear_combination(l.bracket_basis(i, j), xs, realization.modes)
            checks.append(
                safe_commutator_check(rep, xs[i], xs[j], expected, label=f"[v{i + 1},v{j + 1}]")
            )
    return FockReport(levels=levels, checks=tuple(checks))


@anysync
async def check_realization(
    realization: Realization,
    levels: Sequence[int] | None = None,
    pair_specs: Sequence[PairSpec] | None = None,
) -> list[FockReport]:
    """Run `check_realization_at` for several truncations in worker threads."""
    chosen = tuple(get_settings().fock_check_levels if levels is None else levels)
    batch = ComputeBatch[FockReport]()
    for n in chosen:
        batch.add(check_realization_at, realization, n, pair_specs)
    return list(await batch.gather())


def matrix_commutator(rep: FockRep, x: WeylElement, y: WeylElement) -> Matrix:
    """``[X, Y]`` of the truncated matrices, including the truncation artifacts."""
    mx, my = to_matrix(rep, x), to_matrix(rep, y)
    return mx @ my - my @ mx


def _single_lowering(n: int) -> Matrix:
    return Matrix.from_sparse([{k + 1: Scalar(k + 1)} for k in range(n - 1)] + [{}], n)


def _single_raising(n: int) -> Matrix:
    return Matrix.from_sparse([{}] + [{k: ONE} for k in range(n - 1)], n)


def _subtract(u: Sequence[Scalar], v: Sequence[Scalar]) -> tuple[Scalar, ...]:
    return tuple(a - b for a, b in zip(u, v))
