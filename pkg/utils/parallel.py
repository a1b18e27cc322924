import logging
from typing import Callable, Iterable, List, TypeVar

from joblib import Parallel, cpu_count, delayed

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(fn: Callable[[T], R], items: Iterable[T], workers: int = 1) -> List[R]:
    """Map `fn` over `items`, returning results in input order.

    Runs inline when `workers <= 1`; otherwise fans out to joblib worker processes.
    `fn` and the items must be picklable.
    """

    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]

    n_jobs = min(cpu_count(), workers, len(items))
    logger.debug("Dispatching %d items to %d joblib workers", len(items), n_jobs)
    return Parallel(n_jobs=n_jobs)(delayed(fn)(item) for item in items)
