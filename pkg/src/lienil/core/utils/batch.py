from __future__ import annotations

import asyncio
from concurrent.futures import ThreadPoolExecutor
from contextvars import copy_context
from functools import partial, wraps
from typing import Any, Callable, Coroutine, Generic, Protocol, Sequence, TypeVar

import anyio
from anyio import to_thread
from typing_extensions import ParamSpec, Self

from lienil.core.utils.misc import ExceptionGroup

P = ParamSpec("P")
R = TypeVar("R")


def anysync(func: Callable[P, Coroutine[None, None, R]]) -> AnySyncFunc[P, R]:
    """Create a function that can be called synchronously or asynchronously.

    Called from inside a running event loop it returns the coroutine, otherwise it runs
    the coroutine to completion. Use the `s` attribute to force a synchronous call and
    the `a` attribute to get the coroutine function.
    """

    @wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            asyncio.get_running_loop()
        except RuntimeError:
            return asyncio.run(func(*args, **kwargs))
        return func(*args, **kwargs)

    wrapper.a = func  # type: ignore[attr-defined]
    wrapper.s = _create_sync_function(func)  # type: ignore[attr-defined]
    return wrapper  # type: ignore[return-value]


class AnySyncFunc(Protocol[P, R]):
    """A function that can be called synchronously or asynchronously."""

    s: Callable[P, R]
    a: Callable[P, Coroutine[None, None, R]]
    __call__: Callable[P, Coroutine[None, None, R] | R]


class ComputeBatch(Generic[R]):
    """A batch of synchronous computations that run in worker threads.

    Results come back in the order the calls were added, whatever order they finish in.
    """

    def __init__(self) -> None:
        self._funcs: list[Callable[[], R]] = []

    def add(self, func: Callable[P, R], *args: P.args, **kwargs: P.kwargs) -> Self:
        """Add a new call to the batch, run later in a copy of the current context"""
        self._funcs.append(partial(copy_context().run, func, *args, **kwargs))
        return self

    def map(self, func: Callable[..., R], *mapped_args: Sequence[Any]) -> Self:
        """Map the given function to each set of arguments"""
        for args in zip(*mapped_args):
            self.add(func, *args)
        return self

    async def gather(self) -> Sequence[R]:
        """Execute every call in the batch and return the results"""
        if not self._funcs:
            return []

        results: list[Any] = [None] * len(self._funcs)
        errors: list[Exception] = []

        async def run(index: int, func: Callable[[], R]) -> None:
            try:
                results[index] = await to_thread.run_sync(func)
            except Exception as error:
                errors.append(error)

        async with anyio.create_task_group() as tg:
            for index, func in enumerate(self._funcs):
                tg.start_soon(run, index, func)

        if errors:
            msg = "One or more computations failed"
            raise ExceptionGroup(msg, errors) if len(errors) > 1 else errors[0]

        return results


def _create_sync_function(func: Callable[..., Any]) -> Callable[..., Any]:
    @wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        # the current context is passed along, changes made inside are not brought back
        context = copy_context()

        try:
            asyncio.get_running_loop()
        except RuntimeError:
            pass
        else:
            return _THREAD_POOL.submit(
                lambda: context.run(asyncio.run, func(*args, **kwargs))
            ).result()

        return context.run(asyncio.run, func(*args, **kwargs))

    return wrapper


_THREAD_POOL = ThreadPoolExecutor(max_workers=1)
