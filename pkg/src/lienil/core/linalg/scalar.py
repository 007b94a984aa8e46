from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from typing_extensions import TypeAlias

from lienil.core.errors import InputError

ScalarLike: TypeAlias = Union["Scalar", int, Fraction]


@dataclass(frozen=True, eq=False)
class Scalar:
    """An exact Gaussian rational ``real + imag·i``.

    Both parts are `Fraction` values, so denominators are always positive and reduced.
    Integers and fractions coerce wherever a scalar is expected. Floats are rejected
    since they would silently break exactness.
    """

    real: Fraction = Fraction(0)
    imag: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        for name in ("real", "imag"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
                msg = f"Scalar parts must be int or Fraction, not {type(value).__name__}"
                raise InputError(msg)
            if not isinstance(value, Fraction):
                object.__setattr__(self, name, Fraction(value))

    @classmethod
    def of(cls, value: ScalarLike) -> Scalar:
        """Coerce an int, fraction or scalar to a scalar."""
        if isinstance(value, Scalar):
            return value
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            msg = f"Cannot use {value!r} as an exact scalar"
            raise InputError(msg)
        return _make(Fraction(value), _ZERO_FRACTION)

    @property
    def is_real(self) -> bool:
        return not self.imag

    def conjugate(self) -> Scalar:
        return _make(self.real, -self.imag) if self.imag else self

    def __bool__(self) -> bool:
        return bool(self.real) or bool(self.imag)

    def __eq__(self, other: object) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.real == o.real and self.imag == o.imag

    def __hash__(self) -> int:
        return hash(self.real) if not self.imag else hash((self.real, self.imag))

    def __neg__(self) -> Scalar:
        return _make(-self.real, -self.imag)

    def __add__(self, other: ScalarLike) -> Scalar:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return _make(self.real + o.real, self.imag + o.imag)

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> Scalar:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return _make(self.real - o.real, self.imag - o.imag)

    def __rsub__(self, other: ScalarLike) -> Scalar:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: ScalarLike) -> Scalar:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if not self.imag and not o.imag:
            return _make(self.real * o.real, _ZERO_FRACTION)
        return _make(
            self.real * o.real - self.imag * o.imag,
            self.real * o.imag + self.imag * o.real,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: ScalarLike) -> Scalar:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            msg = "Division by zero scalar"
            raise ZeroDivisionError(msg)
        if not o.imag:
            return _make(self.real / o.real, self.imag / o.real)
        norm = o.real * o.real + o.imag * o.imag
        return self * _make(o.real / norm, -o.imag / norm)

    def __rtruediv__(self, other: ScalarLike) -> Scalar:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __str__(self) -> str:
        if not self.imag:
            return _format_rational(self.real)
        imag = _format_imaginary(abs(self.imag))
        if not self.real:
            return imag if self.imag > 0 else f"-{imag}"
        sign = "+" if self.imag > 0 else "-"
        return f"{_format_rational(self.real)}{sign}{imag}"

    def __repr__(self) -> str:
        return f"Scalar({self})"


def _make(real: Fraction, imag: Fraction) -> Scalar:
    # skips coercion in __post_init__ - both parts are already fractions
    self = object.__new__(Scalar)
    object.__setattr__(self, "real", real)
    object.__setattr__(self, "imag", imag)
    return self


def _coerce(value: object) -> Scalar | None:
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return _make(Fraction(value), _ZERO_FRACTION)
    return None


def _format_rational(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else str(value)


def _format_imaginary(magnitude: Fraction) -> str:
    return "i" if magnitude == 1 else f"{_format_rational(magnitude)}i"


_ZERO_FRACTION = Fraction(0)

ZERO = Scalar()
ONE = Scalar(1)
I = Scalar(0, 1)  # noqa: E741
