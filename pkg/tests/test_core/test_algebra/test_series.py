import pytest

from lienil.core.algebra.base import from_brackets
from lienil.core.algebra.series import (
    center,
    centralizer,
    derived_subalgebra,
    is_nilpotent,
    is_semidirect,
    lower_central_series,
    nilpotency_class,
    upper_central_series,
)
from lienil.core.catalog.entries import get
from lienil.core.catalog.generators import abelian, heisenberg
from lienil.core.errors import InputError
from lienil.core.linalg.subspace import Subspace, span
from lienil.core.utils.misc import NOT_NILPOTENT


def _dims(terms):
    return [t.dim for t in terms]


@pytest.mark.parametrize(
    "name, lcs, ucs, cls",
    [
        ("L3_2", [3, 1, 0], [0, 1, 3], 2),
        ("L4_3", [4, 2, 1, 0], [0, 1, 2, 4], 3),
        ("L5_6", [5, 3, 2, 1, 0], [0, 1, 2, 3, 5], 4),
        ("L5_7", [5, 3, 2, 1, 0], [0, 1, 2, 3, 5], 4),
        ("L5_9", [5, 3, 2, 0], [0, 2, 3, 5], 3),
        ("L5_1", [5, 0], [0, 5], 1),
    ],
)
def test_central_series(name, lcs, ucs, cls):
    l = get(name).algebra
    assert _dims(lower_central_series(l)) == lcs
    assert _dims(upper_central_series(l)) == ucs
    assert nilpotency_class(l) == cls
    assert is_nilpotent(l)


def test_non_nilpotent_series_stop_at_a_repeat():
    # [e1, e2] = e2, the non-abelian algebra of dimension 2
    l = from_brackets(2, [(1, 2, {2: 1})])
    assert _dims(lower_central_series(l)) == [2, 1]
    assert _dims(upper_central_series(l)) == [0]
    assert nilpotency_class(l) is NOT_NILPOTENT
    assert not is_nilpotent(l)


def test_zero_and_abelian_classes():
    assert nilpotency_class(from_brackets(0, [])) == 0
    assert nilpotency_class(abelian(3)) == 1


def test_center_and_derived_algebra():
    h = heisenberg(2)
    assert center(h) == span([(0, 0, 0, 0, 1)], 5)
    assert derived_subalgebra(h) == center(h)
    assert center(abelian(3)) == Subspace.full(3)


def test_centralizer():
    l4_3 = get("L4_3").algebra
    derived = derived_subalgebra(l4_3)
    assert centralizer(l4_3, derived) == span(
        [(0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)], 4
    )
    assert centralizer(l4_3, Subspace.zero(4)).is_full()
    with pytest.raises(InputError):
        centralizer(l4_3, Subspace.zero(3))


def test_semidirect_with_central_ideal():
    l4_3 = get("L4_3").algebra
    report = is_semidirect(
        l4_3,
        span([(0, 0, 0, 1)], 4),
        span([(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)], 4),
    )
    assert report.is_ideal_a
    assert report.spans
    assert report.trivial_intersection
    assert report.is_central_a
    assert not report.is_subalgebra_b
    assert not report.is_semidirect
    assert report.is_central_extension


def test_semidirect_decomposition():
    l4_2 = get("L4_2").algebra
    report = is_semidirect(
        l4_2,
        span([(0, 1, 0, 0), (0, 0, 1, 0)], 4),
        span([(1, 0, 0, 0), (0, 0, 0, 1)], 4),
    )
    assert report.is_semidirect
    assert not report.is_central_a
    assert not report.is_central_extension


def test_semidirect_needs_a_spanning_pair():
    h = heisenberg(1)
    report = is_semidirect(h, span([(0, 0, 1)], 3), span([(1, 0, 0)], 3))
    assert not report.spans
    assert not report.is_semidirect
