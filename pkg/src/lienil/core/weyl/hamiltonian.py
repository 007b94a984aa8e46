from __future__ import annotations

from lienil.core.errors import InputError, UnknownName
from lienil.core.linalg.scalar import I, Scalar, ScalarLike
from lienil.core.utils.misc import normalize_name
from lienil.core.weyl.element import WeylElement, generators
from lienil.core.weyl.realization import Kind, named_realization

HAMILTONIAN_NAMES = ("H0", "H5_8", "H5_5")


def hamiltonian(
    name: str,
    *,
    omega: ScalarLike = 1,
    g: ScalarLike = 1,
    lam: ScalarLike = 1,
    kind: Kind = "bosonic",
) -> WeylElement:
    """Build a named Hamiltonian from the generators of its realization.

    - ``H0`` is ``ω v3 v1 + i(2g v2 - conj(g) v1²)`` on the realization of ``L4_3``
    - ``H5_8`` is ``λ(v3 + v2 v5)`` on the realization of ``L5_8``
    - ``H5_5`` is ``ω v3 v1 + λ v4 v2`` on the realization of ``L5_5``

    ``omega`` and ``lam`` must be real. ``kind`` picks the bosonic or pseudo-bosonic
    realization, which give the same operator.
    """
    key = normalize_name(name)
    if key == "H0":
        w, coupling = _real(omega, "omega"), Scalar.of(g)
        v = named_realization(f"L4_3-{kind}").assignment
        return v[2] * v[0] * w + (v[1] * (coupling * 2) - v[0] ** 2 * coupling.conjugate()) * I
    if key == "H5_8":
        strength = _real(lam, "lam")
        v = named_realization(f"L5_8-{kind}").assignment
        return (v[2] + v[1] * v[4]) * strength
    if key == "H5_5":
        w, strength = _real(omega, "omega"), _real(lam, "lam")
        v = named_realization(f"L5_5-{kind}").assignment
        return v[2] * v[0] * w + v[3] * v[1] * strength
    msg = f"No Hamiltonian named {name!r}, expected one of {HAMILTONIAN_NAMES}"
    raise UnknownName(msg)


def squeezing_hamiltonian(omega: ScalarLike, g: ScalarLike) -> WeylElement:
    """``ω b a + i(g b² - conj(g) a²)`` written directly in the ladder operators."""
    w, coupling = _real(omega, "omega"), Scalar.of(g)
    (a,), (b,), _ = generators(1)
    return b * a * w + (b**2 * coupling - a**2 * coupling.conjugate()) * I


def _real(value: ScalarLike, label: str) -> Scalar:
    scalar = Scalar.of(value)
    if not scalar.is_real:
        msg = f"{label} must be real, not {scalar}"
        raise InputError(msg)
    return scalar
