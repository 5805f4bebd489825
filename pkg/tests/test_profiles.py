"""Digesting, profile serialization and k-of-n verification details."""

import pytest

from answermeter.errors import ValidationError
from answermeter.profiles import (
    FAST_HASH_PARAMS,
    HashParams,
    StoredProfile,
    build_profile,
    digest_answer,
    match_normal,
    profile_from_dict,
    profile_to_dict,
    verify_recovery,
)
from answermeter.rules import Band

ROWS = [
    (f"Question {i}?", f"Answer{i}@2024!", Band.STRONG, False) for i in range(1, 6)
]


class TestMatchNormal:
    def test_trims_and_composes_but_keeps_case(self):
        assert match_normal("  CrickICC15@Aus. ") == "CrickICC15@Aus."
        assert match_normal("Café") == "Café"
        assert match_normal("ABC") != "abc"


class TestDigest:
    def test_same_input_same_salt_same_digest(self):
        salt = b"0123456789abcdef"
        a = digest_answer("Secret1@", salt, FAST_HASH_PARAMS)
        assert a == digest_answer("Secret1@", salt, FAST_HASH_PARAMS)
        assert a != digest_answer("secret1@", salt, FAST_HASH_PARAMS)

    def test_params_change_digest(self):
        salt = b"0123456789abcdef"
        a = digest_answer("Secret1@", salt, HashParams(n=2**8))
        b = digest_answer("Secret1@", salt, HashParams(n=2**9))
        assert a != b

    def test_default_params_work(self):
        # one call at production cost to catch memory-limit misconfiguration
        digest_answer("Secret1@", b"0123456789abcdef", HashParams())


class TestBuildProfile:
    def test_salts_unique_and_long_enough(self):
        profile = build_profile(ROWS, 3, FAST_HASH_PARAMS)
        salts = [e.salt for e in profile.entries]
        assert len(set(salts)) == 5
        assert all(len(s) >= 16 for s in salts)

    def test_round_trip_through_dict(self):
        profile = build_profile(ROWS, 3, FAST_HASH_PARAMS)
        again = profile_from_dict(profile_to_dict(profile))
        assert again == profile

    def test_threshold_bounds_enforced(self):
        with pytest.raises(ValidationError):
            build_profile(ROWS, 0, FAST_HASH_PARAMS)
        with pytest.raises(ValidationError):
            build_profile(ROWS, 6, FAST_HASH_PARAMS)

    def test_shared_salt_rejected(self):
        profile = build_profile(ROWS, 3, FAST_HASH_PARAMS)
        entries = list(profile.entries)
        clone = entries[0].__class__(
            question_text=entries[1].question_text,
            salt=entries[0].salt,
            digest=entries[1].digest,
            band_at_save=entries[1].band_at_save,
            weak_override=entries[1].weak_override,
        )
        with pytest.raises(ValidationError):
            StoredProfile(
                profile_id=profile.profile_id,
                algorithm=profile.algorithm,
                params=profile.params,
                entries=(entries[0], clone, *entries[2:]),
                recovery_threshold=3,
                created_at=profile.created_at,
            )


class TestVerifyRecovery:
    @pytest.fixture
    def profile(self):
        return build_profile(ROWS, 3, FAST_HASH_PARAMS)

    def test_none_attempts_count_incorrect(self, profile):
        outcome = verify_recovery(profile, [None] * 5)
        assert outcome.correct_count == 0 and not outcome.granted

    def test_attempt_count_must_match(self, profile):
        with pytest.raises(ValidationError):
            verify_recovery(profile, ["a", "b"])

    def test_threshold_of_one(self):
        profile = build_profile(ROWS, 1, FAST_HASH_PARAMS)
        outcome = verify_recovery(profile, [ROWS[0][1], None, None, None, None])
        assert outcome.granted and outcome.correct_count == 1

    def test_threshold_of_five_requires_all(self):
        profile = build_profile(ROWS, 5, FAST_HASH_PARAMS)
        answers = [r[1] for r in ROWS]
        assert verify_recovery(profile, answers).granted
        answers[4] = "nope"
        assert not verify_recovery(profile, answers).granted
