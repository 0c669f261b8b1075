"""Asynchronous helpers, for use with `asyncio`.

The exhaustive search fans independent prefix jobs out to worker processes
with `run_in_executor`; these helpers let synchronous callers (the library
API, the CLI) drive that without knowing about the event loop.
"""

__all__ = ["asynchronous", "Asynchronous", "gather_in_executor", "is_loop_running"]

import asyncio
from concurrent.futures import ProcessPoolExecutor
from functools import partial, wraps
from inspect import isawaitable, iscoroutinefunction


async def _resolve(awaitable):
    return await awaitable


def asynchronous(func):
    """Return `func` in a "smart" asynchronous-aware wrapper.

    If `func` is called within the event-loop, i.e. when it is running, this
    returns the result of `func` without alteration. However, when called from
    outside of the event-loop, and the result is awaitable, the result is run
    to completion on a fresh event loop.

    In other words, this automatically blocks when calling an asynchronous
    function from outside of the event-loop.
    """

    @wraps(func)
    def wrapper(*args, **kwargs):
        result = func(*args, **kwargs)
        if not is_loop_running():
            while isawaitable(result):
                result = asyncio.run(_resolve(result))
        return result

    return wrapper


class Asynchronous(type):
    """Metaclass that wraps callable attributes with `asynchronous`."""

    def __new__(cls, name, bases, attrs):
        attrs.setdefault("__slots__", ())
        attrs = {name: _maybe_wrap(value) for name, value in attrs.items()}
        return super(Asynchronous, cls).__new__(cls, name, bases, attrs)


def _maybe_wrap(attribute):
    """Helper for `Asynchronous`."""
    if iscoroutinefunction(attribute):
        return asynchronous(attribute)
    if isinstance(attribute, (classmethod, staticmethod)):
        if iscoroutinefunction(attribute.__func__):
            return attribute.__class__(asynchronous(attribute.__func__))
    return attribute


def is_loop_running():
    """Is an event-loop running in this thread right now?"""
    try:
        asyncio.get_running_loop()
    except RuntimeError:
        return False
    else:
        return True


def gather_in_executor(func, jobs, *, workers):
    """Call ``func(job)`` for every job and return the results in job order.

    With one worker, or at most one job, the calls are made inline, in order
    and without an event loop, so `func` may itself gather. Otherwise they
    are spread over a process pool of `workers` processes; `func` and every
    job must therefore be picklable.
    """
    jobs = list(jobs)
    if workers <= 1 or len(jobs) <= 1:
        return [func(job) for job in jobs]
    return _gather_in_pool(func, jobs, workers)


@asynchronous
async def _gather_in_pool(func, jobs, workers):
    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [loop.run_in_executor(pool, partial(func, job)) for job in jobs]
        return await asyncio.gather(*futures)
