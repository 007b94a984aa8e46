from __future__ import annotations

from lienil.core.algebra.base import LieAlgebra, direct_sum, from_brackets
from lienil.core.errors import InputError


def heisenberg(m: int) -> LieAlgebra:
    """``h(m)``: ``[e_{2i-1}, e_{2i}] = e_{2m+1}`` for ``i = 1..m``."""
    if m < 1:
        msg = f"Heisenberg algebras need m >= 1, not {m}"
        raise InputError(msg)
    n = 2 * m + 1
    return from_brackets(n, [(2 * i - 1, 2 * i, {n: 1}) for i in range(1, m + 1)], label=f"H({m})")


def abelian(n: int) -> LieAlgebra:
    if n < 1:
        msg = f"Abelian algebras need n >= 1, not {n}"
        raise InputError(msg)
    return from_brackets(n, [], label=f"A({n})")


def heisenberg_plus_abelian(m: int, k: int) -> LieAlgebra:
    """``h(m) ⊕ i^k``, reading ``h(0) ⊕ i^k`` as the abelian algebra of dimension ``k``."""
    if m < 0 or k < 0 or (m, k) == (0, 0):
        msg = f"Need m >= 0 and k >= 0, not both zero, got m={m}, k={k}"
        raise InputError(msg)
    if not m:
        return abelian(k)
    if not k:
        return heisenberg(m)
    return direct_sum(heisenberg(m), abelian(k))
