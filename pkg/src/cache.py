"""Caching utilities for expensive exact computations (balls, BFS tables)."""

import threading
import weakref
from collections.abc import Callable, Hashable
from typing import Any, TypeVar

from src.constants import MEMO_STORE_SIZE

# Type variable for generic function return type
T = TypeVar("T")


class MemoStore:
    """
    Thread-safe memo storage with FIFO eviction.

    Concurrent fills of the same key are idempotent: the value computed by the
    first writer wins and every caller receives it.
    """

    def __init__(self, max_size: int = MEMO_STORE_SIZE):
        """Initialize the store with a maximum size."""
        self._cache: dict[Hashable, Any] = {}
        self._lock = threading.Lock()
        self._max_size = max_size
        _stores.add(self)

    def get(self, key: Hashable) -> Any | None:
        """Get a value from the store, returns None if not found."""
        with self._lock:
            return self._cache.get(key)

    def set(self, key: Hashable, value: Any) -> Any:
        """
        Store a value unless another thread stored one first.

        Returns the value that is in the store afterwards.
        """
        with self._lock:
            if key in self._cache:
                return self._cache[key]
            if len(self._cache) >= self._max_size:
                # Dicts keep insertion order, so the first key is the oldest
                oldest_key = next(iter(self._cache))
                del self._cache[oldest_key]
            self._cache[key] = value
            return value

    def get_or_compute(self, key: Hashable, compute: Callable[[], T]) -> T:
        """Return the stored value for key, computing it outside the lock if absent."""
        cached = self.get(key)
        if cached is not None:
            return cached
        return self.set(key, compute())

    def clear(self) -> None:
        """Clear all entries from the store."""
        with self._lock:
            self._cache.clear()

    def get_info(self) -> dict[str, int]:
        """Get store statistics (size and max size)."""
        with self._lock:
            return {"size": len(self._cache), "maxsize": self._max_size}


# Every live store, so tests and long-running callers can drop all memos at once
_stores: "weakref.WeakSet[MemoStore]" = weakref.WeakSet()


def clear_group_caches() -> None:
    """
    Clears every memo store.

    Group contexts keep balls and BFS tables in their stores; this is useful
    for testing or to release memory between runs.
    """
    for store in list(_stores):
        store.clear()
