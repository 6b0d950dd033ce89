"""Append-only on-disk cache of exact results.

One JSON object per line: ``{"key": ..., "value": ..., "sha256": ...}``.
The digest covers key and value, so a torn or edited line is detected and
dropped on load; the value is then recomputed.  Later lines win over
earlier ones for the same key.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
from pathlib import Path
from typing import Any

log = logging.getLogger(__name__)


def _digest(key: str, value: Any) -> str:
    blob = json.dumps([key, value], sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


class ResultCache:
    def __init__(self, path: str | os.PathLike | None):
        self.path = Path(path) if path is not None else None
        self._data: dict[str, Any] = {}
        self.discarded = 0
        if self.path is not None and self.path.exists():
            self._load()

    def _load(self) -> None:
        with open(self.path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.strip()
                if not line:
                    continue
                try:
                    rec = json.loads(line)
                    key, value, digest = rec["key"], rec["value"], rec["sha256"]
                except (ValueError, KeyError, TypeError):
                    self.discarded += 1
                    log.warning("%s:%d: unreadable cache entry discarded", self.path, lineno)
                    continue
                if _digest(key, value) != digest:
                    self.discarded += 1
                    log.warning("%s:%d: checksum mismatch, entry discarded", self.path, lineno)
                    continue
                self._data[key] = value

    def get(self, key: str, default=None):
        return self._data.get(key, default)

    def __contains__(self, key: str) -> bool:
        return key in self._data

    def put(self, key: str, value: Any) -> None:
        self._data[key] = value
        if self.path is None:
            return
        line = json.dumps(
            {"key": key, "value": value, "sha256": _digest(key, value)},
            sort_keys=True,
            separators=(",", ":"),
        )
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.path, "ab+") as fh:
            # a torn final line must not swallow this record
            if fh.tell() > 0:
                fh.seek(-1, os.SEEK_END)
                if fh.read(1) != b"\n":
                    fh.write(b"\n")
            fh.write(line.encode() + b"\n")
            fh.flush()
