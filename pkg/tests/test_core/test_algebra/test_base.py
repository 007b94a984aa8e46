import pytest

from lienil.core.algebra.base import (
    LieAlgebra,
    change_of_basis,
    direct_sum,
    format_combination,
    from_brackets,
    is_ideal,
    is_subalgebra,
    quotient,
    zero_algebra,
)
from lienil.core.catalog.entries import get
from lienil.core.catalog.generators import abelian, heisenberg
from lienil.core.errors import (
    IndexOutOfRange,
    InputError,
    JacobiViolation,
    NotAnIdeal,
    SingularMatrix,
)
from lienil.core.linalg.matrix import Matrix
from lienil.core.linalg.scalar import ZERO, I, Scalar
from lienil.core.linalg.subspace import span


def test_from_brackets_reads_antisymmetry():
    l = from_brackets(3, [(2, 1, {3: 1})])
    assert l.bracket_basis(0, 1) == (0, 0, -1)
    assert l.bracket_basis(1, 0) == (0, 0, 1)
    assert l.relations() == [(1, 2, (ZERO, ZERO, Scalar(-1)))]


def test_bracket_is_bilinear():
    h = heisenberg(1)
    assert h.bracket((1, 1, 0), (0, 1, 0)) == (0, 0, 1)
    assert h.bracket((2, 0, 5), (0, 3, 0)) == (0, 0, 6)
    with pytest.raises(InputError):
        h.bracket((1, 0), (0, 1, 0))


def test_jacobi_violation_names_the_triple():
    with pytest.raises(JacobiViolation) as info:
        from_brackets(3, [(1, 2, {2: 1}), (2, 3, {3: 1})])
    assert info.value.triple == (1, 2, 3)
    assert any(info.value.residual)


@pytest.mark.parametrize(
    "brackets, error",
    [
        ([(1, 4, {3: 1})], IndexOutOfRange),
        ([(1, 2, {5: 1})], IndexOutOfRange),
        ([(1, 1, {3: 1})], InputError),
        ([(1, 2, {3: 1}), (2, 1, {3: 1})], InputError),
    ],
)
def test_from_brackets_rejects_bad_input(brackets, error):
    with pytest.raises(error):
        from_brackets(3, brackets)


def test_structure_shape_is_checked():
    with pytest.raises(InputError):
        LieAlgebra(dim=3, structure=())
    with pytest.raises(InputError):
        LieAlgebra(dim=-1, structure=())


def test_zero_algebra():
    z = zero_algebra()
    assert z.dim == 0
    assert z.is_abelian()


def test_direct_sum():
    l = direct_sum(heisenberg(1), abelian(1))
    assert l == from_brackets(4, [(1, 2, {3: 1})])
    assert l.label == "H(1)+A(1)"


def test_quotient_by_the_center():
    l4_3 = get("L4_3").algebra
    assert quotient(l4_3, span([(0, 0, 0, 1)], 4)) == heisenberg(1)


def test_quotient_by_a_non_ideal():
    with pytest.raises(NotAnIdeal):
        quotient(get("L4_3").algebra, span([(1, 0, 0, 0)], 4))


def test_ideals_and_subalgebras():
    l4_3 = get("L4_3").algebra
    assert is_ideal(l4_3, span([(0, 0, 1, 0), (0, 0, 0, 1)], 4))
    assert not is_ideal(l4_3, span([(0, 1, 0, 0)], 4))
    assert is_subalgebra(l4_3, span([(0, 1, 0, 0), (0, 0, 1, 0)], 4))
    assert not is_subalgebra(l4_3, span([(1, 0, 0, 0), (0, 0, 1, 0)], 4))


def test_change_of_basis():
    # rows: e4, e1 + e2, e3, 2 e2 + e4
    p = Matrix.from_rows([[0, 0, 0, 1], [1, 1, 0, 0], [0, 0, 1, 0], [0, 2, 0, 1]])
    scrambled = change_of_basis(get("L4_3").algebra, p)
    assert scrambled == from_brackets(4, [(2, 3, {1: 1}), (2, 4, {3: 2})])


def test_change_of_basis_needs_an_invertible_matrix():
    l = heisenberg(1)
    with pytest.raises(SingularMatrix):
        change_of_basis(l, Matrix.from_rows([[1, 0, 0], [2, 0, 0], [0, 0, 1]]))
    with pytest.raises(InputError):
        change_of_basis(l, Matrix.identity(2))


@pytest.mark.parametrize(
    "v, text",
    [
        ((1, 0, 0), "v1"),
        ((-1, 0, 0), "-v1"),
        ((1, Scalar(-1, 0) / 2, 0, I), "v1 - 1/2 v2 + i v4"),
        ((Scalar(1, 1), 0), "(1+i) v1"),
        ((0, 0), "0"),
    ],
)
def test_format_combination(v, text):
    assert format_combination([Scalar.of(x) for x in v]) == text


def test_str():
    assert str(get("L4_3").algebra) == "L4_3 (dim 4): [1,2] = v3, [1,3] = v4"
    assert str(abelian(2)) == "A(2) (dim 2, abelian)"
