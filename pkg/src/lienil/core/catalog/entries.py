from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from functools import cache, reduce
from typing import Any

from lienil.core.algebra.base import BracketSpec, LieAlgebra, direct_sum, from_brackets
from lienil.core.algebra.fingerprint import Fingerprint, fingerprint, fingerprint_many
from lienil.core.catalog.generators import abelian, heisenberg
from lienil.core.errors import LienilError, UnknownName
from lienil.core.utils.misc import UNLISTED, normalize_name

logger = logging.getLogger(__name__)

UNKNOWN = "unknown"
"""What `identify` answers for an algebra outside the catalog"""

PARAMETRIC_NAME_PATTERN = re.compile(r"^(H|A)\((\d+)\)$")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    algebra: LieAlgebra
    expected_corank: Any
    """The corank printed in the classification table, or `UNLISTED`"""
    description: str = ""


CORANK_TABLE: dict[int, tuple[str, ...]] = {
    0: ("L3_1", "L4_1", "L5_1"),
    1: ("L3_2",),
    2: ("L4_2",),
    3: ("L5_2",),
    4: ("L6_2", "L4_3", "L5_8"),
    5: ("L7_2", "L5_4"),
    6: ("L4_2+A(1)", "L5_5", "H(2)+A(1)", "L5_8+A(1)", "L8_2"),
}
"""The classification of nilpotent algebras of corank at most 6, row by row, as printed"""

_EXPECTED_CORANK = {name: t for t, names in CORANK_TABLE.items() for name in names}

_RELATIONS: dict[str, tuple[int, list[BracketSpec], str]] = {
    "L3_1": (3, [], "abelian"),
    "L3_2": (3, [(1, 2, {3: 1})], "h(1)"),
    "L4_1": (4, [], "abelian"),
    "L4_2": (4, [(1, 2, {3: 1})], "h(1) + i"),
    "L4_3": (4, [(1, 2, {3: 1}), (1, 3, {4: 1})], "filiform, class 3"),
    "L5_1": (5, [], "abelian"),
    "L5_2": (5, [(1, 2, {3: 1})], "h(1) + i + i"),
    "L5_3": (5, [(1, 2, {3: 1}), (1, 3, {4: 1})], "L4_3 + i"),
    "L5_4": (5, [(1, 2, {5: 1}), (3, 4, {5: 1})], "h(2)"),
    "L5_5": (5, [(1, 2, {3: 1}), (1, 3, {5: 1}), (2, 4, {5: 1})], "class 3"),
    "L5_6": (
        5,
        [(1, 2, {3: 1}), (1, 3, {4: 1}), (1, 4, {5: 1}), (2, 3, {5: 1})],
        "filiform, class 4",
    ),
    "L5_7": (5, [(1, 2, {3: 1}), (1, 3, {4: 1}), (1, 4, {5: 1})], "filiform, class 4"),
    "L5_8": (5, [(1, 2, {4: 1}), (1, 3, {5: 1})], "class 2"),
    "L5_9": (5, [(1, 2, {3: 1}), (1, 3, {4: 1}), (2, 3, {5: 1})], "class 3"),
    "L6_2": (6, [(1, 2, {3: 1})], "L5_2 + i"),
    "L7_2": (7, [(1, 2, {3: 1})], "L5_2 + i + i"),
    "L8_2": (8, [(1, 2, {3: 1})], "L7_2 + i"),
}


def get(name: str) -> CatalogEntry:
    """Look up an entry by name.

    Besides the fixed names this accepts ``H(m)``, ``A(n)`` and ``+``-joined direct sums
    such as ``L5_8+A(1)``. Names are case and whitespace insensitive.
    """
    key = normalize_name(name)
    if not key:
        msg = "Empty catalog name"
        raise UnknownName(msg)
    static = _static_entries()
    if key in static:
        return static[key]
    if "+" in key:
        parts = [get(part) for part in key.split("+")]
        algebra = reduce(direct_sum, (p.algebra for p in parts)).with_label(key)
        return CatalogEntry(
            name=key,
            algebra=algebra,
            expected_corank=_EXPECTED_CORANK.get(key, UNLISTED),
            description=" + ".join(p.name for p in parts),
        )
    match = PARAMETRIC_NAME_PATTERN.match(key)
    if match is None:
        msg = f"No catalog entry named {name!r}"
        raise UnknownName(msg)
    family, count = match.group(1), int(match.group(2))
    try:
        algebra = heisenberg(count) if family == "H" else abelian(count)
    except LienilError:
        msg = f"No catalog entry named {name!r}"
        raise UnknownName(msg) from None
    return CatalogEntry(
        name=key,
        algebra=algebra,
        expected_corank=0 if family == "A" else _EXPECTED_CORANK.get(key, UNLISTED),
        description="abelian" if family == "A" else f"h({count})",
    )


def list_entries() -> list[CatalogEntry]:
    """Every named entry, in catalog order."""
    return list(_static_entries().values())


def identify(l: LieAlgebra) -> str:
    """The catalog name whose fingerprint matches, or `UNKNOWN`.

    Outside the named entries, abelian algebras identify as ``A(n)`` and Heisenberg
    algebras as ``H(m)``.
    """
    index = _fingerprint_index()
    fp: Fingerprint | None = None
    if any(known.dim == l.dim for known in index):
        fp = fingerprint(l)
        if fp in index:
            return index[fp]
    if l.is_abelian():
        return f"A({l.dim})" if l.dim else UNKNOWN
    return _identify_heisenberg(l, fp)


@cache
def _static_entries() -> dict[str, CatalogEntry]:
    return {
        name: CatalogEntry(
            name=name,
            algebra=from_brackets(dim, brackets, label=name),
            expected_corank=_EXPECTED_CORANK.get(name, UNLISTED),
            description=description,
        )
        for name, (dim, brackets, description) in _RELATIONS.items()
    }


@cache
def _fingerprint_index() -> dict[Fingerprint, str]:
    entries = list_entries()
    logger.debug("Building the fingerprint index for %d entries", len(entries))
    index: dict[Fingerprint, str] = {}
    for entry, fp in zip(entries, fingerprint_many.s([e.algebra for e in entries])):
        if fp in index:
            msg = f"Catalog entries {index[fp]} and {entry.name} share a fingerprint: {fp}"
            raise LienilError(msg)
        index[fp] = entry.name
    return index


def _identify_heisenberg(l: LieAlgebra, fp: Fingerprint | None = None) -> str:
    if l.dim < 3 or not l.dim % 2:
        return UNKNOWN
    candidate = heisenberg((l.dim - 1) // 2)
    if (fp or fingerprint(l)) == fingerprint(candidate):
        return candidate.label or UNKNOWN
    return UNKNOWN
