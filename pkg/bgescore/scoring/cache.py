import logging
import threading
from dataclasses import dataclass
from typing import Callable, Dict, Tuple

from bgescore.business_logic.linalg import IndexSet
from bgescore.models.prior import ScoreMode

logger = logging.getLogger(__name__)

CacheKey = Tuple[int, IndexSet, ScoreMode]


@dataclass(frozen=True)
class LocalScore:
    value: float
    node: int
    parents: IndexSet
    mode: ScoreMode


class ScoreCache:
    """
    Memo table (node, sorted parents, mode) -> LocalScore.

    Lookups are lock-free; counter updates and stores take the lock.
    Two threads may evaluate the same key concurrently; the score is a pure
    function so the first stored value is kept and both callers return it.
    """

    def __init__(self) -> None:
        self._entries: Dict[CacheKey, LocalScore] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0
        self.evaluations = 0

    def get_or_compute(self, key: CacheKey, compute: Callable[[], LocalScore]) -> LocalScore:
        cached = self._entries.get(key)
        if cached is not None:
            with self._lock:
                self.hits += 1
            return cached

        with self._lock:
            self.misses += 1
        value = compute()
        with self._lock:
            self.evaluations += 1
            stored = self._entries.setdefault(key, value)
        return stored

    def __contains__(self, key: CacheKey) -> bool:
        return key in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    @property
    def hit_rate(self) -> float:
        total = self.hits + self.misses
        return self.hits / total if total else 0.0

    def stats(self) -> Dict[str, float]:
        return {
            "entries": len(self._entries),
            "hits": self.hits,
            "misses": self.misses,
            "evaluations": self.evaluations,
            "hit_rate": self.hit_rate,
        }

    def log_stats(self) -> None:
        logger.info(
            "[ScoreCache] %d entries, %d hits, %d evaluations (hit rate %.3f)",
            len(self._entries), self.hits, self.evaluations, self.hit_rate,
        )
