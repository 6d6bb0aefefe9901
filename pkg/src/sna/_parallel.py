from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence, TypeVar

import numpy as np

T = TypeVar("T")

# Fixed block size: partial results depend on the blocking, so it must not
# depend on the worker count.
CHUNK = 256

_default_threads = 1


def set_default_threads(threads: int) -> None:
    global _default_threads
    _default_threads = max(1, int(threads))


def source_chunks(n: int, sources: Sequence[int] | None = None) -> list[np.ndarray]:
    if sources is None:
        sources = np.arange(n, dtype=np.int64)
    else:
        sources = np.asarray(sources, dtype=np.int64)
    return [sources[i:i + CHUNK] for i in range(0, len(sources), CHUNK)]


def chunked_map(fn: Callable[[np.ndarray], T], chunks: list[np.ndarray],
                threads: int | None = None) -> list[T]:
    """Apply ``fn`` to each chunk; results come back in chunk order."""
    threads = _default_threads if threads is None else max(1, int(threads))
    if threads == 1 or len(chunks) < 2:
        return [fn(c) for c in chunks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, chunks))
