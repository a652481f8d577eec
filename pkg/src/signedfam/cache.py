"""JSON-backed cache of solver results, keyed by instance and search mode.

Keys are "n,k,l,target,pruning".  Each entry stores the best known value
with its status and a timestamp.  Timed-out entries are lower bounds and
may be upgraded by a later larger value or by an exact result; exact
entries are never downgraded.  A corrupt cache file is rebuilt from
scratch with a warning rather than failing.
"""

from __future__ import annotations

import json
import time
import warnings
from typing import Optional

from .solver import STATUS_EXACT


def cache_key(n: int, k: int, l: int, target: str, pruning: bool) -> str:
    return f"{n},{k},{l},{target},{'pruned' if pruning else 'unpruned'}"


class ResultCache:
    """Load-modify-save mapping of solve results."""

    def __init__(self, path: Optional[str] = None):
        self.path = path
        self.entries: dict[str, dict] = {}
        if path is not None:
            self._load()

    def _load(self) -> None:
        try:
            with open(self.path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
            if not isinstance(data, dict):
                raise ValueError("cache root is not an object")
            for key, entry in data.items():
                if (
                    not isinstance(entry, dict)
                    or not isinstance(entry.get("value"), int)
                    or not isinstance(entry.get("status"), str)
                ):
                    raise ValueError(f"malformed entry for {key!r}")
            self.entries = data
        except FileNotFoundError:
            self.entries = {}
        except (json.JSONDecodeError, ValueError, OSError) as exc:
            warnings.warn(f"result cache at {self.path} is corrupt ({exc}); rebuilding")
            self.entries = {}

    def get(self, key: str) -> Optional[dict]:
        return self.entries.get(key)

    def put(self, key: str, value: int, status: str) -> bool:
        """Record a result; returns True when the entry changed.

        Upgrade rule: an exact entry is final; a lower-bound entry is
        replaced by any exact result or by a larger lower bound.
        """
        old = self.entries.get(key)
        if old is not None:
            if old["status"] == STATUS_EXACT:
                return False
            if status != STATUS_EXACT and value <= old["value"]:
                return False
        self.entries[key] = {
            "value": value,
            "status": status,
            "timestamp": time.strftime("%Y-%m-%dT%H:%M:%S"),
        }
        return True

    def save(self) -> None:
        if self.path is None:
            return
        with open(self.path, "w", encoding="utf-8") as fh:
            json.dump(self.entries, fh, indent=2, sort_keys=True)
            fh.write("\n")
