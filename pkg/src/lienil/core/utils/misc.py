from __future__ import annotations

import re
import sys
from itertools import combinations
from traceback import format_exception
from typing import Any, Sequence, cast

NAME_SEPARATOR_PATTERN = re.compile(r"\s+")
"""Whitespace is not significant inside catalog names"""

if sys.version_info < (3, 11):  # nocov

    class ExceptionGroup(Exception):  # noqa: N818, A001
        """An exception that contains multiple exceptions

        A best effort attempt to replicate the `ExceptionGroup` from Python 3.11
        """

        def __init__(self, message: str, exceptions: Sequence[Exception], /) -> None:
            super().__init__(message)
            self.exceptions = exceptions

        def __str__(self) -> str:
            nl = "\n"  # can't include backslash in f-string
            tracebacks = nl.join(
                f"{index + 1} - {nl.join(format_exception(exc))}"
                for index, exc in enumerate(self.exceptions)
            )
            return f"{super().__str__()}\n\n{tracebacks}"

else:
    ExceptionGroup = ExceptionGroup  # noqa: A001,PLW0127


def create_sentinel(name: str) -> Any:
    """Create a sentinel object."""
    return cast(Any, type(name, (), {"__repr__": lambda _: name, "__str__": lambda _: name}))()


NOT_NILPOTENT = create_sentinel("not nilpotent")
"""Nilpotency class of an algebra whose central series stabilize short"""

UNLISTED = create_sentinel("unlisted")
"""Expected corank of a catalog entry that the classification table does not mention"""


def normalize_name(name: str) -> str:
    """Normalize a catalog name, so ``"l5_8 + a(1)"`` and ``"L5_8+A(1)"`` agree."""
    return NAME_SEPARATOR_PATTERN.sub("", name).upper()


def subsets(n: int, size: int) -> list[tuple[int, ...]]:
    """The ``size``-subsets of ``range(n)`` in lexicographic order."""
    return list(combinations(range(n), size))


def insertion_sign(index: int, others: Sequence[int]) -> int:
    """Sign of the permutation that sorts ``(index, *others)`` when ``others`` is sorted."""
    return -1 if sum(1 for o in others if o < index) % 2 else 1
