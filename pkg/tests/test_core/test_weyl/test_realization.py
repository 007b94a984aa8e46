import logging

import pytest

from lienil.core.catalog.entries import get
from lienil.core.errors import InputError, ModeMismatch, UnknownName
from lienil.core.linalg.scalar import I, Scalar
from lienil.core.weyl.element import generators
from lienil.core.weyl.realization import (
    REALIZATION_NAMES,
    Realization,
    named_realization,
    verify_realization,
)

LADDER_NAMES = [
    "L4_3-bosonic",
    "L4_3-pseudo",
    "L5_8-bosonic",
    "L5_8-pseudo",
    "L5_5-bosonic",
    "L5_5-pseudo",
    "L5_8+A(1)-pseudo",
]


def _wrong_l4_3() -> Realization:
    (a,), (b,), one = generators(1)
    return Realization(
        name="wrong",
        algebra=get("L4_3").algebra,
        assignment=(a, b**2, b, one),
        modes=1,
    )


@pytest.mark.parametrize("name", LADDER_NAMES)
def test_ladder_realizations(name):
    r = named_realization(name)
    assert r.algebra.dim == len(r.assignment)
    report = r.verify()
    assert report.is_homomorphism
    assert report.is_faithful
    assert report.notes == ()


def test_realization_names():
    r = named_realization("l5_5-BOSONIC")
    assert r.name == "L5_5-bosonic"
    assert r.kind == "bosonic"
    assert r.modes == 2
    assert str(r.assignment[1]) == "1/2*b1^2 + a2"
    assert named_realization("L5_8+A(1)-pseudo").modes == 3
    assert len(REALIZATION_NAMES) == 9


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("alpha, beta", [(I, 1), (2, 3), (Scalar(1, 1), Scalar(0, -1))])
def test_shifted_heisenberg(m, alpha, beta):
    r = named_realization(f"H({m})-shifted", alpha=alpha, beta=beta)
    assert r.algebra.dim == 2 * m + 1
    report = r.verify()
    assert report.is_homomorphism
    assert report.is_faithful


def test_shifts_per_mode():
    r = named_realization("H(2)-shifted", alpha=[1, 2], beta=[I, 0])
    (a1, a2), (b1, b2), one = generators(2)
    assert r.assignment == (a1 + 1, b1 + I, a2 + 2, b2, one)


def test_shifted_heisenberg_shifts_are_checked():
    with pytest.raises(InputError):
        named_realization("H(2)-shifted", alpha=[1, 2, 3])


def test_conjugate_shifts_warn(caplog):
    with caplog.at_level(logging.WARNING):
        named_realization("H(1)-shifted", alpha=1, beta=1)
    assert "ordinary bosonic pair" in caplog.text


@pytest.mark.parametrize(
    "m, k, faithful",
    [(1, 0, True), (2, 0, True), (1, 2, False), (2, 3, False)],
)
def test_heisenberg_plus_abelian(m, k, faithful):
    r = named_realization(f"H({m})+A({k})" if k else f"H({m})")
    assert r.algebra.dim == 2 * m + 1 + k
    report = r.verify()
    assert report.is_homomorphism
    assert report.is_faithful is faithful
    if not faithful:
        assert report.notes == ("the assigned operators are linearly dependent",)


@pytest.mark.parametrize("name", ["L4_4-bosonic", "L4_3-fermionic", "H(0)", "nope"])
def test_unknown_realizations(name):
    with pytest.raises(UnknownName):
        named_realization(name)


def test_mismatch_is_reported():
    report = _wrong_l4_3().verify()
    assert not report.is_homomorphism
    assert [(m.i, m.j) for m in report.mismatches] == [(1, 2)]
    assert str(report.mismatches[0]) == "[v1,v2]: difference b1"
    assert report.to_dict()["mismatches"] == ["[v1,v2]: difference b1"]


def test_image():
    r = named_realization("L4_3-bosonic")
    (a,), (b,), _ = generators(1)
    assert r.image((1, 0, 1, 0)) == a + b


def test_adjoint_on_pseudo_realization_warns(caplog):
    r = named_realization("L4_3-pseudo")
    with caplog.at_level(logging.WARNING):
        r.adjoint(r.assignment[0])
    assert "pseudo-bosonic" in caplog.text


def test_realization_shape_is_checked():
    (a,), (b,), one = generators(1)
    l4_3 = get("L4_3").algebra
    with pytest.raises(InputError):
        Realization(name="short", algebra=l4_3, assignment=(a, b, one), modes=1)
    with pytest.raises(ModeMismatch):
        Realization(name="modes", algebra=l4_3, assignment=(a, b, b, one), modes=2)
    with pytest.raises(InputError):
        Realization(
            name="kind",
            algebra=l4_3,
            assignment=(a, b, b, one),
            modes=1,
            kind="fermionic",  # type: ignore[arg-type]
        )


def test_verify_realization_checks_its_input():
    (a,), (b,), one = generators(1)
    (a2, _), _, _ = generators(2)
    l = get("L3_2").algebra
    with pytest.raises(InputError):
        verify_realization(l, [a, b])
    with pytest.raises(ModeMismatch):
        verify_realization(l, [a, b, a2])
