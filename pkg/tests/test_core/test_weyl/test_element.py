from math import inf
from random import Random

import pytest

from lienil.core.errors import IndexOutOfRange, InputError, ModeMismatch
from lienil.core.linalg.scalar import I, Scalar
from lienil.core.weyl.element import (
    WeylElement,
    adjoint,
    commutator,
    format_monomial,
    generators,
    multiply,
)

(A1, A2), (B1, B2), ONE = generators(2)


def _random_element(rng: Random, modes: int = 2, terms: int = 3) -> WeylElement:
    values = {}
    for _ in range(terms):
        p = tuple(rng.randint(0, 2) for _ in range(modes))
        q = tuple(rng.randint(0, 2) for _ in range(modes))
        values[p, q] = Scalar(rng.randint(-2, 2), rng.choice((0, 1, -1)))
    return WeylElement.from_terms(modes, values)


def test_canonical_commutation():
    assert commutator(A1, B1) == ONE
    assert commutator(B1, A1) == -ONE
    assert commutator(A1, B2).is_zero()
    assert commutator(A1, A2).is_zero()
    assert commutator(B1, B2).is_zero()


def test_normal_ordering():
    (a,), (b,), one = generators(1)
    assert a * b == b * a + one
    assert a**2 * b**2 == b**2 * a**2 + b * a * 4 + 2
    assert multiply(a, b**3) == b**3 * a + b**2 * 3


def test_terms_stay_canonical():
    x = B1 * A2 - B1 * A2
    assert x.is_zero()
    assert x == WeylElement.zero(2)
    assert (B1 + A1) == (A1 + B1)
    assert (B1 * 3).coefficient((1, 0), (0, 0)) == 3


@pytest.mark.parametrize(
    "element, text",
    [
        (B1**2 / 2 + A2, "1/2*b1^2 + a2"),
        (-(B1 * A2), "-b1*a2"),
        (ONE, "I"),
        (ONE * 2, "2"),
        (WeylElement.zero(2), "0"),
        (A1 * I - B2, "i*a1 - b2"),
        (B1 * Scalar(1, 1), "(1+i)*b1"),
        (A1 - 1, "a1 - I"),
        (A1 - 2, "a1 - 2"),
    ],
)
def test_str(element, text):
    assert str(element) == text


def test_format_monomial():
    assert format_monomial(((2, 0), (0, 1))) == "b1^2*a2"
    assert format_monomial(((0, 0), (0, 0))) == "I"


def test_scalar_arithmetic():
    assert 2 + A1 == A1 + ONE * 2
    assert 1 - A1 == -(A1 - 1)
    assert 3 * B1 == B1 * 3
    assert (B1 * 4) / 2 == B1 * 2
    assert ONE.is_scalar()
    assert not A1.is_scalar()


def test_degree():
    assert (B1**2 * A2 + A1).degree == 3
    assert ONE.degree == 0
    assert WeylElement.zero(1).degree == -inf


def test_adjoint():
    assert adjoint(A1) == B1
    assert adjoint(B1 * A1) == B1 * A1
    assert adjoint(B1 * I) == A1 * Scalar(0, -1)
    assert adjoint(B1**2 * A2) == B2 * A1**2


@pytest.mark.parametrize(
    "call, error",
    [
        (lambda: A1 + WeylElement.lower(1, 1), ModeMismatch),
        (lambda: multiply(A1, WeylElement.lower(3, 1)), ModeMismatch),
        (lambda: WeylElement.lower(2, 3), IndexOutOfRange),
        (lambda: WeylElement.raise_(2, 0), IndexOutOfRange),
        (lambda: A1 ** -1, InputError),
        (lambda: WeylElement.from_terms(2, {((1,), (0,)): 1}), ModeMismatch),
        (lambda: WeylElement.from_terms(1, {((-1,), (0,)): 1}), InputError),
    ],
)
def test_errors(call, error):
    with pytest.raises(error):
        call()


def test_multiplication_is_associative(rng):
    for _ in range(100):
        x, y, z = (_random_element(rng) for _ in range(3))
        assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))


def test_commutator_satisfies_jacobi(rng):
    for _ in range(100):
        x, y, z = (_random_element(rng) for _ in range(3))
        total = (
            commutator(x, commutator(y, z))
            + commutator(y, commutator(z, x))
            + commutator(z, commutator(x, y))
        )
        assert total.is_zero()


def test_adjoint_reverses_products(rng):
    for _ in range(100):
        x, y = _random_element(rng), _random_element(rng)
        assert adjoint(multiply(x, y)) == multiply(adjoint(y), adjoint(x))


def test_adjoint_is_an_involution(rng):
    for _ in range(100):
        x = _random_element(rng)
        assert adjoint(adjoint(x)) == x


def test_degree_bounds(rng):
    for _ in range(100):
        x, y = _random_element(rng), _random_element(rng)
        assert multiply(x, y).degree <= x.degree + y.degree
        assert commutator(x, y).degree <= x.degree + y.degree - 2
