import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Callable, Sequence, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(func: Callable[[T], R], items: Sequence[T], threads: int = 1) -> list[R]:
    """Apply ``func`` to every item on a thread pool, returning results in input order."""
    if threads <= 1 or len(items) <= 1:
        return [func(item) for item in items]

    results: list = [None] * len(items)
    with ThreadPoolExecutor(max_workers=threads) as executor:
        future_to_idx = {
            executor.submit(func, item): idx for idx, item in enumerate(items)
        }
        for done, future in enumerate(as_completed(future_to_idx), start=1):
            idx = future_to_idx[future]
            results[idx] = future.result()
            logger.debug("Finished point %d (%d/%d)", idx, done, len(items))
    return results
