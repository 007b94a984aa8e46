from __future__ import annotations

from dataclasses import dataclass, field

from lienil.core.algebra.fingerprint import fingerprint_many
from lienil.core.catalog.entries import CORANK_TABLE, get, list_entries
from lienil.core.catalog.generators import heisenberg_plus_abelian
from lienil.core.cohomology.complex import corank
from lienil.core.errors import InputError
from lienil.core.utils.misc import UNLISTED


@dataclass(frozen=True)
class CorankRow:
    """One row of the classification table with the coranks the engine computes."""

    corank: int
    names: tuple[str, ...]
    computed: tuple[int, ...]
    flags: tuple[str, ...] = field(default=())

    @property
    def agrees(self) -> bool:
        return not self.flags

    def to_dict(self) -> dict[str, object]:
        return {
            "corank": self.corank,
            "names": list(self.names),
            "computed": list(self.computed),
            "flags": list(self.flags),
        }


@dataclass(frozen=True)
class GrowthLawCheck:
    """The claim ``t(h(m) ⊕ i^k) = 2m + k + 1`` next to the computed corank."""

    m: int
    k: int
    claimed: int
    computed: int

    @property
    def flag(self) -> str | None:
        if self.claimed == self.computed:
            return None
        return (
            f"h({self.m}) + i^{self.k}: claimed t = {self.claimed}, "
            f"engine computes t = {self.computed}"
        )


def corank_table() -> list[CorankRow]:
    """The classification table for coranks 0 to 6 checked against the engine.

    A listed name whose computed corank differs from its row is flagged. So is any named
    catalog entry that computes a corank of at most 6 but appears in no row.
    """
    names = [name for t in sorted(CORANK_TABLE) for name in CORANK_TABLE[t]]
    fingerprints = dict(zip(names, fingerprint_many.s([get(n).algebra for n in names])))
    listed = set(names)
    unlisted: dict[int, list[str]] = {}
    for entry, fp in zip(
        list_entries(), fingerprint_many.s([e.algebra for e in list_entries()])
    ):
        if entry.expected_corank is UNLISTED and entry.name not in listed and fp.corank <= 6:
            unlisted.setdefault(fp.corank, []).append(
                f"{entry.name}: engine computes t = {fp.corank}, but no row lists it"
            )
    rows = []
    for t in sorted(CORANK_TABLE):
        computed = tuple(fingerprints[name].corank for name in CORANK_TABLE[t])
        flags = [
            f"{name}: table says t = {t}, engine computes t = {value}"
            for name, value in zip(CORANK_TABLE[t], computed)
            if value != t
        ]
        flags.extend(unlisted.get(t, []))
        rows.append(
            CorankRow(corank=t, names=CORANK_TABLE[t], computed=computed, flags=tuple(flags))
        )
    return rows


def corank_row(t: int) -> CorankRow:
    for row in corank_table():
        if row.corank == t:
            return row
    msg = f"The classification table has no row for corank {t}"
    raise InputError(msg)


def growth_law(m: int, k: int) -> GrowthLawCheck:
    return GrowthLawCheck(
        m=m,
        k=k,
        claimed=2 * m + k + 1,
        computed=corank(heisenberg_plus_abelian(m, k)),
    )
