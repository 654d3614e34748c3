# Memo cache for deletion-contraction results, shared across threads

import logging
import threading
from typing import Any, Dict, Hashable, Optional, Tuple

logger = logging.getLogger(__name__)


class PolyCache:
    """Namespaced map with atomic insert-if-absent.

    Values must be idempotent for a key: whichever writer wins, readers see
    an equal value, so results never depend on scheduling.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._store: Dict[Tuple[Hashable, Hashable], Any] = {}
        self.hits = 0
        self.misses = 0

    def get(self, namespace: Hashable, key: Hashable) -> Optional[Any]:
        with self._lock:
            value = self._store.get((namespace, key))
            if value is None:
                self.misses += 1
            else:
                self.hits += 1
            return value

    def put_if_absent(self, namespace: Hashable, key: Hashable, value: Any) -> Any:
        """Store value unless present; return the stored value."""
        with self._lock:
            return self._store.setdefault((namespace, key), value)

    def size(self, namespace: Optional[Hashable] = None) -> int:
        with self._lock:
            if namespace is None:
                return len(self._store)
            return sum(1 for ns, _ in self._store if ns == namespace)

    def stats(self) -> Dict[str, int]:
        with self._lock:
            return {"entries": len(self._store), "hits": self.hits, "misses": self.misses}

    def clear_all(self):
        """Drop every entry and reset counters (for testing)."""
        with self._lock:
            self._store.clear()
            self.hits = 0
            self.misses = 0
        logger.debug("poly cache cleared")


# Global cache instance
_poly_cache_instance: Optional[PolyCache] = None


def get_poly_cache() -> PolyCache:
    """Get the global memo cache (singleton)."""
    global _poly_cache_instance
    if _poly_cache_instance is None:
        _poly_cache_instance = PolyCache()
    return _poly_cache_instance
