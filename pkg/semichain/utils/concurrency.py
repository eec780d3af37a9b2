"""
Bounded concurrent execution of independent search tasks.
"""

import asyncio
from dataclasses import dataclass
from typing import Callable, List, Sequence, TypeVar, Union

from tqdm.asyncio import tqdm

T = TypeVar("T")


@dataclass(frozen=True)
class _TaskFailure:
    error: Exception


def run_concurrently(
    tasks: Sequence[Callable[[], T]],
    threads: int = 1,
    desc: str = "searching",
    verbose: bool = False,
) -> List[T]:
    """
    Run zero-argument callables on worker threads, at most `threads` at a time.

    Results come back in the order of `tasks`, whatever the completion order,
    so callers can merge them deterministically.

    Args:
        tasks: the work items.
        threads: the concurrency limit; values below 1 are treated as 1.
        desc: progress bar label.
        verbose: show a progress bar on stderr.

    Returns:
        List[T]: the task results, aligned with `tasks`.

    Raises:
        Exception: the error of the first failing task in `tasks` order, once
            every task has finished.
    """
    if not tasks:
        return []

    if threads <= 1 or len(tasks) == 1:
        return [task() for task in tasks]

    try:
        eventloop = asyncio.get_running_loop()
    except RuntimeError:
        eventloop = None

    if eventloop is not None and eventloop.is_running():
        # already inside a loop (e.g. a notebook): fall back to sequential work
        return [task() for task in tasks]

    return asyncio.run(_gather(tasks, threads, desc, verbose))


async def _gather(
    tasks: Sequence[Callable[[], T]], threads: int, desc: str, verbose: bool
) -> List[T]:
    semaphore = asyncio.Semaphore(threads)

    async def _async_run(task: Callable[[], T]) -> Union[T, _TaskFailure]:
        async with semaphore:
            try:
                return await asyncio.to_thread(task)
            except Exception as e:
                return _TaskFailure(e)

    futures = [_async_run(task) for task in tasks]
    results = await tqdm.gather(*futures, desc=desc, disable=not verbose)
    for result in results:
        if isinstance(result, _TaskFailure):
            raise result.error
    return results
