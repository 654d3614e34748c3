# Utilities for formatting, JSON output, and timing

import json
import time
from typing import Any, Dict, Mapping, Optional, Sequence, Tuple

from .forests import ActivityTable


class FormatUtils:
    """Formatting utilities for text output."""

    @staticmethod
    def format_duration(seconds: float) -> str:
        """Format seconds as a short human-readable duration."""
        if seconds < 1e-3:
            return f"{seconds * 1e6:.0f}us"
        elif seconds < 1:
            return f"{seconds * 1e3:.1f}ms"
        elif seconds < 60:
            return f"{seconds:.2f}s"
        else:
            mins = int(seconds // 60)
            return f"{mins}m {seconds - 60 * mins:.0f}s"

    @staticmethod
    def format_dims(dims: Sequence[int]) -> str:
        return "[" + ",".join(str(d) for d in dims) + "]"

    @staticmethod
    def format_counts(counts: Mapping[Tuple[int, int], int]) -> str:
        """One "a b count" line per nonzero entry."""
        return "\n".join(f"{a} {b} {n}" for (a, b), n in sorted(counts.items()))

    @staticmethod
    def format_table(table: ActivityTable) -> str:
        """Forest sizes down, activities across."""
        if not table.counts:
            return "(no forests)"
        return table.to_frame().to_string()

    @staticmethod
    def format_flag(ok: bool) -> str:
        return "ok" if ok else "FAIL"


class JsonUtils:
    """Deterministic JSON serialization."""

    @staticmethod
    def dumps(data: Any) -> str:
        """Sorted keys, two-space indent, trailing newline."""
        return json.dumps(data, sort_keys=True, indent=2) + "\n"

    @staticmethod
    def counts_to_json(counts: Mapping[Tuple[int, int], int]) -> list:
        return [[a, b, n] for (a, b), n in sorted(counts.items())]


class Timer:
    """Accumulates wall-clock time per label."""

    def __init__(self):
        self.timings: Dict[str, float] = {}
        self._label: Optional[str] = None
        self._start = 0.0

    def section(self, label: str) -> "Timer":
        self._label = label
        return self

    def __enter__(self):
        self._start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        elapsed = time.perf_counter() - self._start
        self.timings[self._label] = self.timings.get(self._label, 0.0) + elapsed
        return False
