"""Profile persistence behind a small interface.

The default store is a single append-only JSON-lines file: one record
per persist call, fsynced before the call returns, latest record for a
profile id wins on load.  A torn final line (interrupted write) is
ignored; corruption anywhere else is an error.
"""

from __future__ import annotations

import json
import os
import threading
from abc import ABC, abstractmethod
from pathlib import Path

from .errors import NotFoundError, StoreError
from .profiles import StoredProfile, profile_from_dict, profile_to_dict


class ProfileStore(ABC):
    @abstractmethod
    def persist(self, profile: StoredProfile) -> None: ...

    @abstractmethod
    def load(self, profile_id: str) -> StoredProfile: ...


class MemoryProfileStore(ProfileStore):
    def __init__(self):
        self._profiles: dict[str, StoredProfile] = {}
        self._lock = threading.Lock()

    def persist(self, profile: StoredProfile) -> None:
        with self._lock:
            self._profiles[profile.profile_id] = profile

    def load(self, profile_id: str) -> StoredProfile:
        with self._lock:
            try:
                return self._profiles[profile_id]
            except KeyError:
                raise NotFoundError(f"unknown profile id {profile_id!r}") from None


class FileProfileStore(ProfileStore):
    """Append-only JSON-lines file; single writer, any number of readers."""

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._write_lock = threading.Lock()
        self.path.parent.mkdir(parents=True, exist_ok=True)

    def persist(self, profile: StoredProfile) -> None:
        line = json.dumps(profile_to_dict(profile), ensure_ascii=False) + "\n"
        data = line.encode("utf-8")
        with self._write_lock:
            try:
                fd = os.open(self.path, os.O_WRONLY | os.O_CREAT | os.O_APPEND, 0o600)
                try:
                    os.write(fd, data)
                    os.fsync(fd)
                finally:
                    os.close(fd)
            except OSError as exc:
                raise StoreError(f"cannot persist profile: {exc}") from exc

    def _records(self) -> list[dict]:
        try:
            raw = self.path.read_bytes()
        except FileNotFoundError:
            return []
        except OSError as exc:
            raise StoreError(f"cannot read profile store: {exc}") from exc
        records = []
        lines = raw.split(b"\n")
        for i, line in enumerate(lines):
            if not line.strip():
                continue
            try:
                records.append(json.loads(line.decode("utf-8")))
            except (ValueError, UnicodeDecodeError) as exc:
                terminated = i < len(lines) - 1
                if terminated:
                    raise StoreError(
                        f"profile store corrupt at line {i + 1}: {exc}"
                    ) from None
                # Torn trailing write; the record never became visible.
        return records

    def load(self, profile_id: str) -> StoredProfile:
        found = None
        for record in self._records():
            if record.get("profile_id") == profile_id:
                found = record
        if found is None:
            raise NotFoundError(f"unknown profile id {profile_id!r}")
        return profile_from_dict(found)
