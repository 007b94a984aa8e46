import pytest

from lienil.core.algebra.base import LieAlgebra
from lienil.core.errors import UnknownName
from lienil.core.serializer.base import (
    Serializer,
    get_serializer_by_name,
    get_serializer_by_type,
)
from lienil.core.serializer.text import algebra_serializer


class IntSerializer(Serializer[int]):
    types = (int,)
    name = "lienil-int"

    def serialize(self, value: int) -> bytes:
        return str(value).encode()

    def deserialize(self, value: bytes) -> int:
        return int(value.decode())


int_serializer = IntSerializer().register()


def test_cannot_register_serializer_with_same_name():
    """Test that serializers cannot be registered with the same name."""
    with pytest.raises(ValueError, match=r"Serializer named 'lienil-int' already registered"):
        IntSerializer().register()


def test_lookup_by_name():
    assert get_serializer_by_name("lienil-int") is int_serializer
    assert get_serializer_by_name("lienil-algebra") is algebra_serializer
    with pytest.raises(UnknownName):
        get_serializer_by_name("lienil-nope")


def test_lookup_by_type_follows_the_mro():
    assert get_serializer_by_type(bool) == (int_serializer,)
    assert get_serializer_by_type(LieAlgebra) == (algebra_serializer,)
    with pytest.raises(UnknownName):
        get_serializer_by_type(frozenset)
