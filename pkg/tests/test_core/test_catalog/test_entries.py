from itertools import combinations

import pytest

from lienil.core.algebra.base import from_brackets
from lienil.core.algebra.fingerprint import fingerprint
from lienil.core.catalog.entries import UNKNOWN, get, identify, list_entries
from lienil.core.catalog.generators import abelian, heisenberg, heisenberg_plus_abelian
from lienil.core.errors import InputError, UnknownName
from lienil.core.utils.misc import UNLISTED
from tests.common import scramble

ENTRY_NAMES = [e.name for e in list_entries()]


def test_generators():
    h2 = heisenberg(2)
    assert h2.dim == 5
    assert h2.label == "H(2)"
    assert [(i, j) for i, j, _ in h2.relations()] == [(1, 2), (3, 4)]
    assert abelian(3).is_abelian()
    assert heisenberg_plus_abelian(0, 2) == abelian(2)
    assert heisenberg_plus_abelian(1, 0) == heisenberg(1)
    assert heisenberg_plus_abelian(2, 1).dim == 6


@pytest.mark.parametrize(
    "call",
    [
        lambda: heisenberg(0),
        lambda: abelian(0),
        lambda: heisenberg_plus_abelian(0, 0),
        lambda: heisenberg_plus_abelian(-1, 2),
    ],
)
def test_generators_reject_bad_parameters(call):
    with pytest.raises(InputError):
        call()


def test_catalog_names():
    assert ENTRY_NAMES[:5] == ["L3_1", "L3_2", "L4_1", "L4_2", "L4_3"]
    assert {f"L5_{k}" for k in range(1, 10)} <= set(ENTRY_NAMES)
    assert get("L3_2").algebra == heisenberg(1)
    assert get("L5_4").algebra == heisenberg(2)


def test_expected_coranks():
    assert get("L5_8").expected_corank == 4
    assert get("L4_2+A(1)").expected_corank == 6
    assert get("L5_3").expected_corank is UNLISTED
    assert get("A(7)").expected_corank == 0


def test_composite_names():
    entry = get("l5_8 + a(1)")
    assert entry.name == "L5_8+A(1)"
    assert entry.algebra.dim == 6
    assert entry.algebra.label == "L5_8+A(1)"
    assert entry.description == "L5_8 + A(1)"
    assert get("H(2)+A(1)").algebra == heisenberg_plus_abelian(2, 1)


@pytest.mark.parametrize("name", ["", "L9_9", "H(0)", "B(2)", "L5_8+nope"])
def test_unknown_names(name):
    with pytest.raises(UnknownName):
        get(name)


def test_unknown_name_message():
    with pytest.raises(UnknownName) as info:
        get("L9_9")
    assert str(info.value) == "No catalog entry named 'L9_9'"


def test_fingerprints_are_pairwise_distinct():
    fingerprints = {name: fingerprint(get(name).algebra) for name in ENTRY_NAMES}
    for a, b in combinations(ENTRY_NAMES, 2):
        assert fingerprints[a] != fingerprints[b], (a, b)


@pytest.mark.parametrize("name", ENTRY_NAMES)
def test_identify_round_trip(name, rng):
    l = get(name).algebra
    assert identify(l) == name
    for _ in range(20):
        assert identify(scramble(l, rng)) == name


def test_identify_relabelled_heisenberg():
    assert identify(from_brackets(5, [(1, 2, {5: 1}), (3, 4, {5: 1})])) == "L5_4"
    assert identify(from_brackets(5, [(1, 3, {2: 1}), (4, 5, {2: -1})])) == "L5_4"


def test_identify_outside_the_catalog():
    assert identify(heisenberg(3)) == "H(3)"
    assert identify(abelian(6)) == "A(6)"
    assert identify(from_brackets(0, [])) == UNKNOWN
    # h(1) + h(1) has dimension 6 and is in no table
    assert identify(get("L3_2+L3_2").algebra) == UNKNOWN
