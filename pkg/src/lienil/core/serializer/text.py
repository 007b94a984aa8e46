"""Line-oriented text documents for algebras and realizations.

An algebra document::

    # the filiform algebra of dimension 4
    algebra L4_3 dim 4
    [1,2] = v3
    [1,3] = v4

A realization document names its target (or defines it inline with an ``algebra``
block), the number of modes, optionally its kind, and then one operator per basis
vector::

    realization L4_3-bosonic
    target L4_3
    modes 1
    kind bosonic
    v1 = a1
    v2 = 1/2*b1^2
    v3 = b1
    v4 = I

Blank lines and anything after ``#`` are ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

from lienil.core.algebra.base import LieAlgebra, format_combination, from_brackets
from lienil.core.catalog.entries import get
from lienil.core.errors import JacobiViolation, LienilError, ParseError
from lienil.core.linalg.scalar import Scalar
from lienil.core.serializer.base import Serializer
from lienil.core.serializer.grammar import (
    bracket_line_grammar,
    expression_grammar,
    parse_line,
)
from lienil.core.weyl.element import WeylElement
from lienil.core.weyl.realization import KINDS, Realization

_ALGEBRA_HEADER = re.compile(r"^algebra\s+(\S+)\s+dim\s+(\d+)$")
_REALIZATION_HEADER = re.compile(r"^realization\s+(\S+)$")
_TARGET = re.compile(r"^target\s+(\S+)$")
_MODES = re.compile(r"^modes\s+(\d+)$")
_KIND = re.compile(r"^kind\s+(\S+)$")
_ASSIGNMENT = re.compile(r"^v(\d+)\s*=\s*(.*)$")


@dataclass(frozen=True)
class _Line:
    number: int
    offset: int
    text: str


def _lines(text: str) -> Iterator[_Line]:
    for number, raw in enumerate(text.splitlines(), 1):
        content = raw.split("#", 1)[0].rstrip()
        stripped = content.lstrip()
        if stripped:
            yield _Line(number, len(content) - len(stripped), stripped)


def parse_algebra(text: str) -> LieAlgebra:
    """Parse an algebra document."""
    lines = list(_lines(text))
    if not lines:
        msg = "Expected an 'algebra NAME dim N' header"
        raise ParseError(msg, line=1)
    algebra, rest = _parse_algebra_block(lines[0], lines[1:])
    if rest:
        msg = f"Unexpected line after the bracket table: {rest[0].text!r}"
        raise ParseError(msg, line=rest[0].number, column=rest[0].offset + 1, text=rest[0].text)
    return algebra


def _parse_algebra_block(header: _Line, lines: list[_Line]) -> tuple[LieAlgebra, list[_Line]]:
    match = _ALGEBRA_HEADER.match(header.text)
    if match is None:
        msg = "Expected an 'algebra NAME dim N' header"
        raise ParseError(msg, line=header.number, column=header.offset + 1, text=header.text)
    name, n = match.group(1), int(match.group(2))

    brackets: list[tuple[int, int, dict[int, Scalar]]] = []
    seen: dict[tuple[int, int], int] = {}
    last_line: dict[tuple[int, int], int] = {}
    consumed = 0
    for line in lines:
        if not line.text.startswith("["):
            break
        consumed += 1
        i, j, value = parse_line(
            bracket_line_grammar(), line.text, line=line.number, offset=line.offset
        )
        for index in (i, j, *value):
            if not 1 <= index <= n:
                msg = f"Basis index {index} is outside 1..{n}"
                raise ParseError(msg, line=line.number, column=line.offset + 1, text=line.text)
        key = (min(i, j), max(i, j))
        if i == j:
            if any(value.values()):
                msg = f"Bracket [{i},{i}] must be zero"
                raise ParseError(msg, line=line.number, column=line.offset + 1, text=line.text)
            continue
        if key in seen:
            msg = f"Bracket [{key[0]},{key[1]}] was already given on line {seen[key]}"
            raise ParseError(msg, line=line.number, column=line.offset + 1, text=line.text)
        seen[key] = last_line[key] = line.number
        brackets.append((i, j, value))

    try:
        algebra = from_brackets(n, brackets, label=name)
    except JacobiViolation as error:
        raise JacobiViolation(
            error.triple,
            error.residual,
            line=_blame(error.triple, last_line, header.number),
        ) from None
    return algebra, lines[consumed:]


def _blame(triple: tuple[int, int, int], lines: dict[tuple[int, int], int], default: int) -> int:
    # the last bracket line among the pairs of the triple
    i, j, k = triple
    candidates = [lines[p] for p in ((i, j), (i, k), (j, k)) if p in lines]
    return max(candidates, default=default)


def parse_realization(text: str) -> Realization:
    """Parse a realization document.

    Every basis vector of the target must be assigned exactly once, and operators may
    only use generators of modes ``1..modes``.
    """
    lines = list(_lines(text))
    if not lines or (header := _REALIZATION_HEADER.match(lines[0].text)) is None:
        first = lines[0] if lines else _Line(1, 0, "")
        msg = "Expected a 'realization NAME' header"
        raise ParseError(msg, line=first.number, column=first.offset + 1, text=first.text)
    name = header.group(1)

    algebra: LieAlgebra | None = None
    modes: int | None = None
    kind = "pseudo"
    assignment: dict[int, tuple[int, WeylElement]] = {}
    pending = lines[1:]
    while pending:
        line, pending = pending[0], pending[1:]
        position = {"line": line.number, "column": line.offset + 1, "text": line.text}
        if line.text.startswith("algebra"):
            if algebra is not None:
                msg = "The target algebra is given more than once"
                raise ParseError(msg, **position)
            algebra, pending = _parse_algebra_block(line, pending)
        elif match := _TARGET.match(line.text):
            if algebra is not None:
                msg = "The target algebra is given more than once"
                raise ParseError(msg, **position)
            try:
                algebra = get(match.group(1)).algebra
            except LienilError as error:
                raise ParseError(str(error), **position) from None
        elif match := _MODES.match(line.text):
            if modes is not None:
                msg = "The number of modes is given more than once"
                raise ParseError(msg, **position)
            modes = int(match.group(1))
            if modes < 1:
                msg = "A realization needs at least one mode"
                raise ParseError(msg, **position)
        elif match := _KIND.match(line.text):
            kind = match.group(1).lower()
            if kind not in KINDS:
                msg = f"Kind must be one of {KINDS}, not {match.group(1)!r}"
                raise ParseError(msg, **position)
        elif match := _ASSIGNMENT.match(line.text):
            if algebra is None or modes is None:
                msg = "Operators must come after the target and the number of modes"
                raise ParseError(msg, **position)
            k = int(match.group(1))
            if not 1 <= k <= algebra.dim:
                msg = f"v{k} is not a basis vector of an algebra of dimension {algebra.dim}"
                raise ParseError(msg, **position)
            if k in assignment:
                msg = f"v{k} was already assigned on line {assignment[k][0]}"
                raise ParseError(msg, **position)
            expression = parse_line(
                expression_grammar(modes),
                match.group(2),
                line=line.number,
                offset=line.offset + match.start(2),
            )
            assignment[k] = (line.number, expression)
        else:
            msg = f"Unrecognized line {line.text!r}"
            raise ParseError(msg, **position)

    last = lines[-1]
    if algebra is None or modes is None:
        msg = "A realization needs a target algebra and a number of modes"
        raise ParseError(msg, line=last.number, text=last.text)
    missing = [k for k in range(1, algebra.dim + 1) if k not in assignment]
    if missing:
        shown = ", ".join(f"v{k}" for k in missing)
        msg = f"No operator assigned to {shown}"
        raise ParseError(msg, line=last.number, text=last.text)
    return Realization(
        name=name,
        algebra=algebra,
        assignment=tuple(assignment[k][1] for k in range(1, algebra.dim + 1)),
        modes=modes,
        kind=kind,  # type: ignore[arg-type]
    )


def format_algebra(l: LieAlgebra, name: str | None = None) -> str:
    """Render an algebra as a document `parse_algebra` reads back."""
    lines = [f"algebra {name or l.label or 'L'} dim {l.dim}"]
    lines.extend(f"[{i},{j}] = {format_combination(v)}" for i, j, v in l.relations())
    return "\n".join(lines) + "\n"


def format_realization(r: Realization) -> str:
    """Render a realization with its target inlined, so the document stands alone."""
    lines = [f"realization {r.name}"]
    lines.extend(format_algebra(r.algebra).splitlines())
    lines.append(f"modes {r.modes}")
    lines.append(f"kind {r.kind}")
    lines.extend(f"v{k} = {x}" for k, x in enumerate(r.assignment, 1))
    return "\n".join(lines) + "\n"


class AlgebraSerializer(Serializer[LieAlgebra]):
    """Serialize algebras as text documents."""

    name = "lienil-algebra"
    types = (LieAlgebra,)

    def serialize(self, value: LieAlgebra, /) -> bytes:
        return format_algebra(value).encode()

    def deserialize(self, value: bytes, /) -> LieAlgebra:
        return parse_algebra(value.decode())


class RealizationSerializer(Serializer[Realization]):
    """Serialize realizations as text documents."""

    name = "lienil-realization"
    types = (Realization,)

    def serialize(self, value: Realization, /) -> bytes:
        return format_realization(value).encode()

    def deserialize(self, value: bytes, /) -> Realization:
        return parse_realization(value.decode())


algebra_serializer = AlgebraSerializer().register()
realization_serializer = RealizationSerializer().register()
