from __future__ import annotations

from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, replace
from typing import Any, Callable, Iterator


@dataclass(frozen=True)
class Settings:
    """Process-wide defaults for the engine."""

    search_bound: int = 2
    """Coefficient bound used by the central extension search."""

    fock_levels: int = 6
    """Per-mode truncation used when building a Fock representation."""

    fock_check_levels: tuple[int, ...] = (6, 10)
    """Truncations the Fock oracle checks when none are requested explicitly."""

    strict_nilpotent: bool = False
    """Raise instead of warning when cohomology is requested on a non-nilpotent algebra."""


_CURRENT_SETTINGS: ContextVar[Settings] = ContextVar("CURRENT_SETTINGS", default=Settings())


def get_settings() -> Settings:
    """Get the settings active in the current context."""
    return _CURRENT_SETTINGS.get()


def set_settings(**overrides: Any) -> Callable[[], None]:
    """Override some settings and return a function that restores the previous ones."""
    token = _CURRENT_SETTINGS.set(replace(_CURRENT_SETTINGS.get(), **overrides))
    return lambda: _CURRENT_SETTINGS.reset(token)


@contextmanager
def current_settings(**overrides: Any) -> Iterator[Settings]:
    """Define which settings to use in the context."""
    reset = set_settings(**overrides)
    try:
        yield get_settings()
    finally:
        reset()
