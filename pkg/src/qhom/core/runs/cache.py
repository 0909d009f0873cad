"""On-disk cache of homology records, one JSON file per key."""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path

from .records import ENGINE_VERSION, ResultRecord

logger = logging.getLogger("qhom.runs")


def cache_key(table_sha256: str, theory_key: str, degree: int, engine_version: str = ENGINE_VERSION) -> str:
    payload = json.dumps([table_sha256, theory_key, degree, engine_version])
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def _atomic_write_text(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    file_descriptor, temporary_path = tempfile.mkstemp(
        prefix=f".{path.name}.",
        suffix=".tmp",
        dir=path.parent,
    )
    try:
        with os.fdopen(file_descriptor, "w", encoding="utf-8") as handle:
            handle.write(text)
            handle.flush()
            os.fsync(handle.fileno())
        os.replace(temporary_path, path)
    finally:
        if os.path.exists(temporary_path):
            os.remove(temporary_path)


class ResultCache:
    """
    Records keyed by (table hash, theory key, degree, engine version).

    Unreadable entries are treated as misses and overwritten on the next put.
    """

    def __init__(self, directory: Path) -> None:
        self.directory = directory

    def path_for(self, table_sha256: str, theory_key: str, degree: int) -> Path:
        return self.directory / f"{cache_key(table_sha256, theory_key, degree)}.json"

    def get(self, table_sha256: str, theory_key: str, degree: int) -> ResultRecord | None:
        path = self.path_for(table_sha256, theory_key, degree)
        if not path.is_file():
            return None
        try:
            record = ResultRecord.from_dict(json.loads(path.read_text(encoding="utf-8")))
        except (OSError, ValueError, KeyError, TypeError) as error:
            logger.warning("Ignoring unreadable cache entry %s: %s", path.name, error)
            return None
        if record.engine_version != ENGINE_VERSION or record.table_sha256 != table_sha256:
            return None
        logger.info("cache hit for %s degree %d", record.label, degree)
        return record

    def put(self, record: ResultRecord, theory_key: str) -> Path:
        path = self.path_for(record.table_sha256, theory_key, record.degree)
        _atomic_write_text(path, json.dumps(record.to_dict(), sort_keys=True) + "\n")
        return path
