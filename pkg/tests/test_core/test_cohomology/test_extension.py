import pytest

from lienil.core.algebra.base import from_brackets, quotient
from lienil.core.algebra.fingerprint import fingerprint
from lienil.core.catalog.entries import get, identify
from lienil.core.catalog.generators import abelian, heisenberg
from lienil.core.cohomology.extension import (
    TwoCocycle,
    central_extension,
    cocycle_space,
    find_extension_to,
    is_cocycle,
)
from lienil.core.errors import InputError, JacobiViolation, NotACocycle, NotAntisymmetric
from lienil.core.linalg.matrix import Matrix, unit_vector
from lienil.core.linalg.subspace import span


def test_cocycle_from_pairs():
    theta = TwoCocycle.from_pairs(4, {(1, 4): 1, (3, 2): 2})
    assert theta.value(0, 3) == 1
    assert theta.value(3, 0) == -1
    assert theta.value(1, 2) == -2
    assert theta.pairs() == {(1, 4): 1, (2, 3): -2}
    assert str(theta) == "(1,4)=1, (2,3)=-2"
    assert str(TwoCocycle.from_pairs(3, {})) == "0"


def test_cocycle_evaluate():
    theta = TwoCocycle.from_pairs(3, {(1, 2): 1})
    x = unit_vector(3, 0)
    y = tuple(a + b for a, b in zip(unit_vector(3, 1), unit_vector(3, 2)))
    assert theta.evaluate(x, y) == 1
    assert theta.evaluate(y, x) == -1


def test_forms_must_be_antisymmetric():
    with pytest.raises(NotAntisymmetric):
        TwoCocycle(Matrix.from_rows([[0, 1], [1, 0]]))
    with pytest.raises(NotAntisymmetric):
        TwoCocycle(Matrix.from_rows([[1, 0], [0, 0]]))
    with pytest.raises(NotAntisymmetric):
        TwoCocycle.from_pairs(2, {(1, 1): 1})
    with pytest.raises(InputError):
        TwoCocycle.from_pairs(2, {(1, 3): 1})


def test_cocycle_space():
    l4_3 = get("L4_3").algebra
    basis = cocycle_space(l4_3)
    assert len(basis) == 4
    assert all(is_cocycle(l4_3, theta) for theta in basis)
    # every form on a 3-dimensional algebra is closed
    assert len(cocycle_space(heisenberg(1))) == 3


def test_is_cocycle():
    l4_3 = get("L4_3").algebra
    assert is_cocycle(l4_3, TwoCocycle.from_pairs(4, {(1, 4): 1, (2, 3): 1}))
    assert not is_cocycle(l4_3, TwoCocycle.from_pairs(4, {(2, 4): 1}))
    assert is_cocycle(l4_3, Matrix.zeros(4, 4))
    with pytest.raises(InputError):
        is_cocycle(l4_3, TwoCocycle.from_pairs(3, {}))


@pytest.mark.parametrize(
    "base, pairs, expected",
    [
        ("L3_2", {(1, 3): 1}, "L4_3"),
        ("L4_3", {(1, 4): 1, (2, 3): 1}, "L5_6"),
        ("L4_3", {(1, 4): 1}, "L5_7"),
        ("L4_3", {(2, 3): 1}, "L5_9"),
        ("L4_2", {(1, 3): 1, (2, 4): 1}, "L5_5"),
        ("L4_2", {(1, 4): 1}, "L5_8"),
        ("L4_1", {(1, 2): 1, (3, 4): 1}, "L5_4"),
    ],
)
def test_central_extensions(base, pairs, expected):
    l = get(base).algebra
    extended = central_extension(l, TwoCocycle.from_pairs(l.dim, pairs))
    assert identify(extended) == expected


def test_central_extension_keeps_the_literal_brackets():
    l4_3 = get("L4_3").algebra
    extended = central_extension(l4_3, TwoCocycle.from_pairs(4, {(1, 4): 1}))
    assert extended == get("L5_7").algebra


def test_central_extension_needs_a_cocycle():
    with pytest.raises(NotACocycle):
        central_extension(get("L4_3").algebra, TwoCocycle.from_pairs(4, {(2, 4): 1}))


def test_extending_by_a_non_cocycle_breaks_jacobi():
    # L4_3 with [v2,v4] = v5 appended: exactly what central_extension refuses to build
    theta = TwoCocycle.from_pairs(4, {(2, 4): 1})
    assert not is_cocycle(get("L4_3").algebra, theta)
    with pytest.raises(JacobiViolation) as info:
        from_brackets(5, [(1, 2, {3: 1}), (1, 3, {4: 1}), (2, 4, {5: 1})])
    assert info.value.triple == (1, 2, 3)


@pytest.mark.parametrize(
    "base, target",
    [
        ("L3_2", "L4_3"),
        ("L4_2", "L5_5"),
        ("L4_2", "L5_8"),
        ("L4_3", "L5_6"),
        ("L4_3", "L5_7"),
        ("L4_3", "L5_9"),
        ("L4_1", "L5_4"),
    ],
)
def test_find_extension_to(base, target):
    l = get(base).algebra
    theta = find_extension_to(l, fingerprint(get(target).algebra), coeff_bound=2)
    assert theta is not None
    extended = central_extension(l, theta)
    assert identify(extended) == target
    center = span([unit_vector(l.dim + 1, l.dim)], l.dim + 1)
    assert fingerprint(quotient(extended, center)) == fingerprint(l)


def test_search_tries_the_zero_cocycle_first():
    theta = find_extension_to(heisenberg(1), fingerprint(get("L4_2").algebra))
    assert theta is not None
    assert theta.pairs() == {}


def test_search_can_come_up_empty():
    # every extension of L4_3 has a derived algebra of dimension at least 2
    assert find_extension_to(get("L4_3").algebra, fingerprint(heisenberg(2)), 1) is None
    assert find_extension_to(abelian(2), fingerprint(get("L4_3").algebra)) is None


def test_search_bound_is_checked():
    with pytest.raises(InputError):
        find_extension_to(abelian(2), fingerprint(heisenberg(1)), coeff_bound=0)


def test_search_bound_defaults_to_settings(settings):
    assert settings.search_bound == 2
    assert find_extension_to(abelian(2), fingerprint(heisenberg(1))) is not None
