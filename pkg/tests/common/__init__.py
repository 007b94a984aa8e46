from tests.common.scramble import random_basis, random_vector, scramble

__all__ = (
    "random_basis",
    "random_vector",
    "scramble",
)
