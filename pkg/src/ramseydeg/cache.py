"""On-disk result cache: one JSON file per entry."""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

from . import __version__ as ENGINE_VERSION


@dataclass(frozen=True)
class CacheEntry:
    key: str
    value: object
    engine_version: str


def cache_key(op: str, inputs: list, params: dict) -> str:
    material = json.dumps({"op": op, "inputs": inputs, "params": params}, sort_keys=True, default=str)
    return hashlib.sha256(material.encode()).hexdigest()


class ResultCache:
    def __init__(self, root):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)

    def _path(self, key: str) -> Path:
        return self.root / f"{key}.json"

    def get(self, key: str) -> CacheEntry | None:
        try:
            data = json.loads(self._path(key).read_text())
        except (FileNotFoundError, json.JSONDecodeError):
            return None
        if data.get("engine_version") != ENGINE_VERSION or data.get("key") != key:
            return None
        return CacheEntry(key, data["value"], data["engine_version"])

    def put(self, key: str, value) -> CacheEntry:
        entry = CacheEntry(key, value, ENGINE_VERSION)
        payload = json.dumps({"key": key, "value": value, "engine_version": ENGINE_VERSION}, sort_keys=True)
        fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            fh.write(payload)
        os.replace(tmp, self._path(key))
        return entry
