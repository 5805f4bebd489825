"""Append-only file store semantics."""

import pytest

from answermeter.errors import NotFoundError, StoreError
from answermeter.profiles import FAST_HASH_PARAMS, build_profile
from answermeter.rules import Band
from answermeter.store import FileProfileStore, MemoryProfileStore


def make_profile():
    rows = [(f"Q{i}?", f"Answer{i}#Xy!", Band.STRONG, False) for i in range(5)]
    return build_profile(rows, 3, FAST_HASH_PARAMS)


@pytest.fixture(params=["file", "memory"])
def store(request, tmp_path):
    if request.param == "file":
        return FileProfileStore(tmp_path / "profiles.jsonl")
    return MemoryProfileStore()


class TestStoreContract:
    def test_round_trip(self, store):
        profile = make_profile()
        store.persist(profile)
        assert store.load(profile.profile_id) == profile

    def test_unknown_id(self, store):
        with pytest.raises(NotFoundError):
            store.load("no-such-profile")

    def test_two_profiles_both_loadable(self, store):
        a, b = make_profile(), make_profile()
        store.persist(a)
        store.persist(b)
        assert store.load(a.profile_id) == a
        assert store.load(b.profile_id) == b


class TestFileStore:
    def test_survives_reopen(self, tmp_path):
        path = tmp_path / "profiles.jsonl"
        profile = make_profile()
        FileProfileStore(path).persist(profile)
        assert FileProfileStore(path).load(profile.profile_id) == profile

    def test_latest_record_wins(self, tmp_path):
        path = tmp_path / "profiles.jsonl"
        store = FileProfileStore(path)
        first = make_profile()
        store.persist(first)
        updated = first.__class__(
            profile_id=first.profile_id,
            algorithm=first.algorithm,
            params=first.params,
            entries=first.entries,
            recovery_threshold=4,
            created_at=first.created_at,
        )
        store.persist(updated)
        assert store.load(first.profile_id).recovery_threshold == 4

    def test_torn_trailing_line_is_ignored(self, tmp_path):
        path = tmp_path / "profiles.jsonl"
        store = FileProfileStore(path)
        profile = make_profile()
        store.persist(profile)
        with open(path, "ab") as fh:
            fh.write(b'{"profile_id": "half-written')  # no newline: torn write
        assert store.load(profile.profile_id) == profile

    def test_corruption_mid_file_is_an_error(self, tmp_path):
        path = tmp_path / "profiles.jsonl"
        store = FileProfileStore(path)
        profile = make_profile()
        store.persist(profile)
        raw = path.read_bytes()
        path.write_bytes(b"garbage not json\n" + raw)
        with pytest.raises(StoreError):
            store.load(profile.profile_id)
