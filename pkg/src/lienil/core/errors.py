from __future__ import annotations

from typing import Any, Sequence


class LienilError(Exception):
    """Base for every error raised on purpose by lienil."""


class InputError(LienilError, ValueError):
    """An argument has the wrong shape, size, or domain."""


class IndexOutOfRange(InputError):
    """A basis or generator index falls outside ``1..n``."""


class SingularMatrix(InputError):
    """A change of basis was requested with a non-invertible matrix."""


class NotAnIdeal(InputError):
    """A quotient was requested by a subspace that is not an ideal."""


class NotAntisymmetric(InputError):
    """A bilinear form that must be antisymmetric is not."""


class NotACocycle(InputError):
    """An antisymmetric form fails the 2-cocycle condition."""


class ModeMismatch(InputError):
    """Weyl algebra elements (or a Fock representation) disagree on their mode count."""


class UnknownName(LienilError, KeyError):
    """A catalog, realization or hamiltonian name is not known."""

    def __str__(self) -> str:
        # KeyError quotes its argument which garbles messages
        return str(self.args[0]) if self.args else ""


class JacobiViolation(LienilError, ValueError):
    """Structure constants that fail the Jacobi identity.

    Parameters:
        triple: The offending basis triple, 1-based.
        residual: The residual vector ``J(i, j, k)``.
        line: The document line the failure is attributed to, when parsed from text.
    """

    def __init__(
        self,
        triple: tuple[int, int, int],
        residual: Sequence[Any],
        *,
        line: int | None = None,
    ) -> None:
        self.triple = triple
        self.residual = tuple(residual)
        self.line = line
        shown = ", ".join(str(r) for r in self.residual)
        msg = f"Jacobi identity fails on {triple}: residual ({shown})"
        super().__init__(msg if line is None else f"line {line}: {msg}")


class ParseError(LienilError, ValueError):
    """A positioned syntax or validation error in a text document.

    Parameters:
        message: What went wrong.
        line: 1-based line number in the document.
        column: 1-based column number within that line.
        text: The offending line.
    """

    def __init__(self, message: str, *, line: int, column: int = 1, text: str = "") -> None:
        self.message = message
        self.line = line
        self.column = column
        self.text = text
        super().__init__(f"line {line}, column {column}: {message}")
