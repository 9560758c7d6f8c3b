"""JSON results cache for expensive counts.

One file per cache directory, keyed by (operation, n, ell).  The envelope
records a schema number and a fingerprint of the package sources; a cache
written by other code or another schema is discarded, never trusted.
The directory comes from the PARKSTAT_CACHE environment variable, falling
back to ~/.cache/parkstat.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

SCHEMA = 1
_FILENAME = "results.json"


def cache_dir() -> Path:
    env = os.environ.get("PARKSTAT_CACHE")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "parkstat"


def code_fingerprint() -> str:
    """Hash of the package source files that feed cached results."""
    digest = hashlib.sha256()
    package_dir = Path(__file__).parent
    for path in sorted(package_dir.glob("*.py")):
        digest.update(path.name.encode())
        digest.update(path.read_bytes())
    return digest.hexdigest()[:16]


def _key(operation: str, n: int, ell: int | None) -> str:
    return f"{operation}:{n}:{'-' if ell is None else ell}"


class ResultsCache:
    def __init__(self, directory: Path | None = None):
        self.directory = directory or cache_dir()
        self.path = self.directory / _FILENAME
        self.fingerprint = code_fingerprint()
        self._entries = self._load()

    def _load(self) -> dict:
        try:
            data = json.loads(self.path.read_text())
        except (OSError, ValueError):
            return {}
        if not isinstance(data, dict):
            return {}
        if data.get("schema") != SCHEMA or data.get("code") != self.fingerprint:
            return {}
        entries = data.get("entries")
        return entries if isinstance(entries, dict) else {}

    def get(self, operation: str, n: int, ell: int | None = None):
        return self._entries.get(_key(operation, n, ell))

    def put(self, operation: str, n: int, ell: int | None, value) -> None:
        self._entries[_key(operation, n, ell)] = value
        self.directory.mkdir(parents=True, exist_ok=True)
        payload = {"schema": SCHEMA, "code": self.fingerprint, "entries": self._entries}
        self.path.write_text(json.dumps(payload, sort_keys=True))
