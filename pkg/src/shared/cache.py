"""Process-wide memo tables for immutable exact results."""

import logging
import threading
from typing import Any, Callable, Dict, Hashable, List, Optional, Tuple

logger = logging.getLogger(__name__)

# Global table storage: table name -> key -> value
_tables: Dict[str, Dict[Hashable, Any]] = {}
_lock = threading.Lock()


def get_cached(table: str, key: Hashable) -> Optional[Any]:
    """Get a cached value, or None."""
    return _tables.get(table, {}).get(key)


def put_cached(table: str, key: Hashable, value: Any) -> Any:
    """
    Insert a value unless one is already present.

    Two threads computing the same key produce equal values, so the first
    insert wins and is returned to both.

    Args:
        table: Table name
        key: Hashable key
        value: Immutable value

    Returns:
        The stored value
    """
    with _lock:
        bucket = _tables.setdefault(table, {})
        if key not in bucket:
            bucket[key] = value
            logger.debug("cache %s: stored %r", table, key)
        return bucket[key]


def memoized(table: str) -> Callable[[Callable[..., Any]], Callable[..., Any]]:
    """Decorator caching a pure function in the named table, keyed by its arguments."""

    def decorate(fn: Callable[..., Any]) -> Callable[..., Any]:
        def wrapper(*args: Any) -> Any:
            hit = get_cached(table, args)
            if hit is not None:
                return hit
            return put_cached(table, args, fn(*args))

        wrapper.__name__ = fn.__name__
        wrapper.__doc__ = fn.__doc__
        wrapper.__wrapped__ = fn  # type: ignore[attr-defined]
        return wrapper

    return decorate


def clear_cache(table: Optional[str] = None) -> None:
    """Drop one table, or every table."""
    with _lock:
        if table is None:
            _tables.clear()
        else:
            _tables.pop(table, None)


def cache_stats() -> List[Tuple[str, int]]:
    """List table names with their entry counts."""
    return sorted((name, len(bucket)) for name, bucket in _tables.items())
