"""
Thread pool helpers for the search trial loop.
"""

from __future__ import annotations

import concurrent.futures
from typing import Callable, List, Optional, Sequence, TypeVar

from .logger import logger

T = TypeVar("T")
R = TypeVar("R")


def process_parallel(
    items: Sequence[T],
    processor: Callable[[T], R],
    max_workers: Optional[int] = None,
    timeout: Optional[float] = None,
) -> List[Optional[R]]:
    """
    Process items in parallel using a ThreadPoolExecutor.

    Args:
        items: Items to process
        processor: Function to process each item
        max_workers: Maximum number of worker threads (1 runs in the calling thread)
        timeout: Maximum time to wait for all threads to complete

    Returns:
        One result per item, in the order of `items`. Items whose processor raised
        are logged and give ``None``.
    """
    if max_workers == 1:
        return [_run_one(processor, item) for item in items]

    results: List[Optional[R]] = [None] * len(items)
    with concurrent.futures.ThreadPoolExecutor(max_workers=max_workers) as executor:
        future_to_index = {
            executor.submit(processor, item): i for i, item in enumerate(items)
        }
        for future in concurrent.futures.as_completed(future_to_index, timeout=timeout):
            index = future_to_index[future]
            try:
                results[index] = future.result()
            except Exception as e:
                logger.error(f"Error processing {items[index]}: {e}")
                logger.exception(e)
    return results


def _run_one(processor: Callable[[T], R], item: T) -> Optional[R]:
    try:
        return processor(item)
    except Exception as e:
        logger.error(f"Error processing {item}: {e}")
        logger.exception(e)
        return None
