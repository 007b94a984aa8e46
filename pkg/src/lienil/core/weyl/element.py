"""Normal-ordered elements of the multi-mode Weyl algebra.

Every mode ``k`` has a lowering operator ``a_k`` and a raising operator ``b_k`` with
``[a_k, b_l] = δ_kl I`` and every other pair commuting. An element is a finite sum of
monomials ``b_1^p_1 ... b_m^p_m a_1^q_1 ... a_m^q_m``, raising operators to the left.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb, factorial, inf
from typing import Iterable, Mapping

from typing_extensions import TypeAlias

from lienil.core.errors import IndexOutOfRange, InputError, ModeMismatch
from lienil.core.linalg.scalar import ONE, ZERO, Scalar, ScalarLike

Exponents: TypeAlias = "tuple[int, ...]"
Monomial: TypeAlias = "tuple[Exponents, Exponents]"
"""The exponents ``(p, q)`` of ``b`` and ``a`` for each mode"""

Term: TypeAlias = "tuple[Monomial, Scalar]"


@dataclass(frozen=True)
class WeylElement:
    """A normal-ordered element, kept canonical so that equality is structural.

    ``terms`` is sorted by monomial and never holds a zero coefficient.
    """

    modes: int
    terms: tuple[Term, ...] = ()

    @classmethod
    def from_terms(cls, modes: int, terms: Mapping[Monomial, ScalarLike]) -> WeylElement:
        for p, q in terms:
            if len(p) != modes or len(q) != modes:
                msg = f"Monomial {(p, q)} does not have {modes} modes"
                raise ModeMismatch(msg)
            if any(e < 0 for e in (*p, *q)):
                msg = f"Monomial {(p, q)} has a negative exponent"
                raise InputError(msg)
        canonical = {m: Scalar.of(c) for m, c in terms.items()}
        return cls(modes, tuple(sorted((m, c) for m, c in canonical.items() if c)))

    @classmethod
    def zero(cls, modes: int) -> WeylElement:
        return cls(modes)

    @classmethod
    def scalar(cls, modes: int, value: ScalarLike) -> WeylElement:
        none = (0,) * modes
        return cls.from_terms(modes, {(none, none): value})

    @classmethod
    def identity(cls, modes: int) -> WeylElement:
        return cls.scalar(modes, ONE)

    @classmethod
    def lower(cls, modes: int, mode: int) -> WeylElement:
        """The lowering operator ``a_mode`` (1-based)."""
        return cls.from_terms(modes, {((0,) * modes, _unit(modes, mode)): ONE})

    @classmethod
    def raise_(cls, modes: int, mode: int) -> WeylElement:
        """The raising operator ``b_mode`` (1-based)."""
        return cls.from_terms(modes, {(_unit(modes, mode), (0,) * modes): ONE})

    def to_dict(self) -> dict[Monomial, Scalar]:
        return dict(self.terms)

    def coefficient(self, p: Exponents, q: Exponents) -> Scalar:
        return self.to_dict().get((p, q), ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def is_scalar(self) -> bool:
        return all(not any(p) and not any(q) for (p, q), _ in self.terms)

    @property
    def degree(self) -> float:
        """Largest total exponent of a term, ``-inf`` for zero."""
        return max((sum(p) + sum(q) for (p, q), _ in self.terms), default=-inf)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: WeylElement | ScalarLike) -> WeylElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in o.terms:
            out[m] = out.get(m, ZERO) + c
        return WeylElement.from_terms(self.modes, out)

    __radd__ = __add__

    def __neg__(self) -> WeylElement:
        return WeylElement(self.modes, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other: WeylElement | ScalarLike) -> WeylElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: ScalarLike) -> WeylElement:
        return (-self) + other

    def __mul__(self, other: WeylElement | ScalarLike) -> WeylElement:
        if isinstance(other, WeylElement):
            return multiply(self, other)
        try:
            factor = Scalar.of(other)
        except InputError:
            return NotImplemented
        return WeylElement.from_terms(self.modes, {m: c * factor for m, c in self.terms})

    def __rmul__(self, other: ScalarLike) -> WeylElement:
        # scalars are central
        return self * other

    def __truediv__(self, other: ScalarLike) -> WeylElement:
        return self * (ONE / Scalar.of(other))

    def __pow__(self, exponent: int) -> WeylElement:
        if exponent < 0:
            msg = f"Weyl algebra elements only have non-negative powers, not {exponent}"
            raise InputError(msg)
        result = WeylElement.identity(self.modes)
        for _ in range(exponent):
            result = multiply(result, self)
        return result

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        ordered = sorted(self.terms, key=lambda t: (-sum(t[0][0]) - sum(t[0][1]), t[0]))
        text = ""
        for index, (monomial, c) in enumerate(ordered):
            body = format_monomial(monomial)
            if c == 1:
                term, negative = body, False
            elif c == -1:
                term, negative = body, True
            elif c.is_real:
                negative = c.real < 0
                magnitude = -c if negative else c
                term = str(magnitude) if body == "I" else f"{magnitude}*{body}"
            elif not c.real:
                negative = c.imag < 0
                magnitude = -c if negative else c
                term = str(magnitude) if body == "I" else f"{magnitude}*{body}"
            else:
                term, negative = f"({c})" if body == "I" else f"({c})*{body}", False
            if index:
                text += f" - {term}" if negative else f" + {term}"
            else:
                text = f"-{term}" if negative else term
        return text

    def _coerce(self, other: object) -> WeylElement | None:
        if isinstance(other, WeylElement):
            _check_modes(self, other)
            return other
        try:
            return WeylElement.scalar(self.modes, other)  # type: ignore[arg-type]
        except InputError:
            return None


def multiply(x: WeylElement, y: WeylElement) -> WeylElement:
    """The normal-ordered product ``x·y``.

    Per mode, ``a^q b^r = Σ_k k!·C(q,k)·C(r,k)·b^(r-k) a^(q-k)``. Distinct modes commute,
    so a product of monomials is the product of its per-mode expansions.
    """
    _check_modes(x, y)
    out: dict[Monomial, Scalar] = {}
    for (p1, q1), c1 in x.terms:
        for (p2, q2), c2 in y.terms:
            per_mode = [
                _reorder(p1[i], q1[i], p2[i], q2[i]) for i in range(x.modes)
            ]
            for choice in product(*per_mode):
                weight = 1
                for _, _, w in choice:
                    weight *= w
                key = (tuple(c[0] for c in choice), tuple(c[1] for c in choice))
                out[key] = out.get(key, ZERO) + c1 * c2 * weight
    return WeylElement.from_terms(x.modes, out)


def commutator(x: WeylElement, y: WeylElement) -> WeylElement:
    return multiply(x, y) - multiply(y, x)


def adjoint(x: WeylElement) -> WeylElement:
    """The formal adjoint with ``a_k† = b_k``: antilinear, reversing products.

    ``(c·b^p a^q)† = conj(c)·b^q a^p``, which is already normal-ordered.
    """
    return WeylElement.from_terms(x.modes, {(q, p): c.conjugate() for (p, q), c in x.terms})


def generators(modes: int) -> tuple[list[WeylElement], list[WeylElement], WeylElement]:
    """The lowering operators, the raising operators, and the identity on some modes."""
    return (
        [WeylElement.lower(modes, k) for k in range(1, modes + 1)],
        [WeylElement.raise_(modes, k) for k in range(1, modes + 1)],
        WeylElement.identity(modes),
    )


def format_monomial(monomial: Monomial) -> str:
    p, q = monomial
    factors = [_power("b", k, e) for k, e in enumerate(p, 1) if e]
    factors.extend(_power("a", k, e) for k, e in enumerate(q, 1) if e)
    return "*".join(factors) if factors else "I"


def linear_combination(
    coefficients: Iterable[ScalarLike], elements: Iterable[WeylElement], modes: int
) -> WeylElement:
    total = WeylElement.zero(modes)
    for c, x in zip(coefficients, elements):
        if c:
            total = total + x * c
    return total


def _reorder(p1: int, q1: int, p2: int, q2: int) -> list[tuple[int, int, int]]:
    # b^p1 (a^q1 b^p2) a^q2 as (b exponent, a exponent, weight) triples
    return [
        (p1 + p2 - k, q1 + q2 - k, factorial(k) * comb(q1, k) * comb(p2, k))
        for k in range(min(q1, p2) + 1)
    ]


def _power(symbol: str, mode: int, exponent: int) -> str:
    return f"{symbol}{mode}" if exponent == 1 else f"{symbol}{mode}^{exponent}"


def _unit(modes: int, mode: int) -> Exponents:
    if not 1 <= mode <= modes:
        msg = f"Mode {mode} is outside 1..{modes}"
        raise IndexOutOfRange(msg)
    return tuple(1 if k == mode else 0 for k in range(1, modes + 1))


def _check_modes(x: WeylElement, y: WeylElement) -> None:
    if x.modes != y.modes:
        msg = f"Elements on {x.modes} and {y.modes} modes cannot be combined"
        raise ModeMismatch(msg)
