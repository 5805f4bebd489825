"""Finalized recovery credentials: salted answer digests and k-of-n checks.

Profiles never hold plaintext answers.  Digests are scrypt over the
match-normal form of the answer: NFC-composed and trimmed but case
PRESERVED, because the rubric pushes capitals into answers on purpose.
The digest algorithm and parameters travel with the profile so stored
credentials survive a parameter change.
"""

from __future__ import annotations

import hashlib
import hmac
import secrets
import time
import unicodedata
from dataclasses import dataclass

from .errors import ValidationError
from .rules import Band

ALGORITHM = "scrypt"
SALT_BYTES = 16


def match_normal(text: str) -> str:
    """NFC-compose and trim; case and interior spacing are preserved."""
    return unicodedata.normalize("NFC", text.strip())


@dataclass(frozen=True)
class HashParams:
    """scrypt cost parameters; defaults suit interactive logins."""

    n: int = 2**14
    r: int = 8
    p: int = 1
    dklen: int = 32


# Light parameters for test suites that finalize hundreds of profiles.
FAST_HASH_PARAMS = HashParams(n=2**8)


def digest_answer(answer: str, salt: bytes, params: HashParams) -> bytes:
    return hashlib.scrypt(
        match_normal(answer).encode("utf-8"),
        salt=salt,
        n=params.n,
        r=params.r,
        p=params.p,
        dklen=params.dklen,
        maxmem=256 * params.r * (params.n + params.p) + 1024 * 1024,
    )


def new_salt() -> bytes:
    return secrets.token_bytes(SALT_BYTES)


@dataclass(frozen=True)
class ProfileEntry:
    question_text: str
    salt: bytes
    digest: bytes
    band_at_save: Band
    weak_override: bool


@dataclass(frozen=True)
class StoredProfile:
    profile_id: str
    algorithm: str
    params: HashParams
    entries: tuple[ProfileEntry, ...]
    recovery_threshold: int
    created_at: float

    def __post_init__(self):
        if not 1 <= self.recovery_threshold <= len(self.entries):
            raise ValidationError(
                f"recovery threshold {self.recovery_threshold} outside "
                f"[1, {len(self.entries)}]",
                field="threshold",
            )
        salts = [e.salt for e in self.entries]
        if len(set(salts)) != len(salts):
            raise ValidationError("profile entries share a salt")
        if any(len(s) < SALT_BYTES for s in salts):
            raise ValidationError(f"salts must be at least {SALT_BYTES} bytes")


@dataclass(frozen=True)
class RecoveryOutcome:
    granted: bool
    correct_count: int


def verify_recovery(
    profile: StoredProfile, attempts: list[str | None]
) -> RecoveryOutcome:
    """Count correct attempts and grant at the profile's threshold.

    Wrong answers are an outcome, not an error.  Every entry is hashed
    and compared in constant time regardless of earlier results, so the
    call leaks nothing about which slots matched.
    """
    if len(attempts) != len(profile.entries):
        raise ValidationError(
            f"expected {len(profile.entries)} attempts, got {len(attempts)}",
            field="answers",
        )
    correct = 0
    for entry, attempt in zip(profile.entries, attempts):
        candidate = digest_answer(attempt if attempt is not None else "", entry.salt, profile.params)
        matched = hmac.compare_digest(candidate, entry.digest)
        correct += matched and attempt is not None
    return RecoveryOutcome(
        granted=correct >= profile.recovery_threshold, correct_count=correct
    )


def build_profile(
    question_answer_pairs: list[tuple[str, str, Band, bool]],
    recovery_threshold: int,
    params: HashParams,
) -> StoredProfile:
    """Digest (question, answer, band, weak_override) rows into a profile."""
    entries = []
    used_salts: set[bytes] = set()
    for question_text, answer, band, weak_override in question_answer_pairs:
        salt = new_salt()
        while salt in used_salts:
            salt = new_salt()
        used_salts.add(salt)
        entries.append(
            ProfileEntry(
                question_text=question_text,
                salt=salt,
                digest=digest_answer(answer, salt, params),
                band_at_save=band,
                weak_override=weak_override,
            )
        )
    return StoredProfile(
        profile_id=secrets.token_urlsafe(16),
        algorithm=ALGORITHM,
        params=params,
        entries=tuple(entries),
        recovery_threshold=recovery_threshold,
        created_at=time.time(),
    )


def profile_to_dict(profile: StoredProfile) -> dict:
    return {
        "profile_id": profile.profile_id,
        "algorithm": profile.algorithm,
        "params": {
            "n": profile.params.n,
            "r": profile.params.r,
            "p": profile.params.p,
            "dklen": profile.params.dklen,
        },
        "recovery_threshold": profile.recovery_threshold,
        "created_at": profile.created_at,
        "entries": [
            {
                "question": e.question_text,
                "salt": e.salt.hex(),
                "digest": e.digest.hex(),
                "band_at_save": e.band_at_save.value,
                "weak_override": e.weak_override,
            }
            for e in profile.entries
        ],
    }


def profile_from_dict(data: dict) -> StoredProfile:
    return StoredProfile(
        profile_id=data["profile_id"],
        algorithm=data["algorithm"],
        params=HashParams(**data["params"]),
        entries=tuple(
            ProfileEntry(
                question_text=e["question"],
                salt=bytes.fromhex(e["salt"]),
                digest=bytes.fromhex(e["digest"]),
                band_at_save=Band(e["band_at_save"]),
                weak_override=e["weak_override"],
            )
            for e in data["entries"]
        ),
        recovery_threshold=data["recovery_threshold"],
        created_at=data["created_at"],
    )
