"""On-disk memo for expensive results (ebar searches, sweep rows).

Entries are JSON files named by the sha256 of a canonical key.  Writes go to
a temporary file that is then ``os.replace``d into place, so readers never
see a torn file and concurrent writers of the same key simply race to
install identical content.  The cache is advisory: delete it at will.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path
from typing import Any, Callable

CACHE_VERSION = 1


def _canonical(op: str, args: dict) -> str:
    return json.dumps({"v": CACHE_VERSION, "op": op, "args": args}, sort_keys=True, separators=(",", ":"))


class ResultCache:
    def __init__(self, root: str | os.PathLike):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self.hits = 0
        self.misses = 0

    def _path(self, key: str) -> Path:
        h = hashlib.sha256(key.encode()).hexdigest()
        return self.root / h[:2] / f"{h}.json"

    def get(self, op: str, args: dict) -> Any | None:
        key = _canonical(op, args)
        path = self._path(key)
        try:
            with open(path, encoding="utf-8") as fh:
                entry = json.load(fh)
        except (FileNotFoundError, json.JSONDecodeError):
            self.misses += 1
            return None
        if entry.get("key") != key:  # hash collision or stale format
            self.misses += 1
            return None
        self.hits += 1
        return entry["value"]

    def put(self, op: str, args: dict, value: Any, meta: dict | None = None) -> None:
        key = _canonical(op, args)
        path = self._path(key)
        path.parent.mkdir(parents=True, exist_ok=True)
        payload = json.dumps({"key": key, "value": value, "meta": meta or {}}, sort_keys=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(payload)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise


def cached(cache: ResultCache | None, op: str, args: dict, compute: Callable[[], Any]) -> Any:
    """Look up (op, args); compute and store on a miss.  ``cache=None`` disables it."""
    if cache is None:
        return compute()
    hit = cache.get(op, args)
    if hit is not None:
        return hit
    # round-trip through JSON so a cold run returns exactly what a warm one would
    value = json.loads(json.dumps(compute()))
    cache.put(op, args, value)
    return value
