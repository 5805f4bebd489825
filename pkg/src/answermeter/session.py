"""Five-question setup flow: three catalog picks, two custom, then finalize.

The engine enforces the slot layout (slots 1-3 predefined, 4-5 custom),
screens every submitted answer through the rubric and the common-answer
lists, parks weak answers behind an explicit confirmation step with a
mnemonic suggestion attached, and digests the finished set into a
StoredProfile that holds no plaintext.
"""

from __future__ import annotations

import hashlib
import secrets
import time
from dataclasses import dataclass, field
from enum import Enum

from .errors import (
    ConfigurationError,
    ConflictError,
    NotFoundError,
    StateError,
    ValidationError,
)
from .mnemonics import GENERIC_CATEGORY, MnemonicTemplate, Suggestion, suggest
from .profiles import HashParams, StoredProfile, build_profile, match_normal
from .rules import Band, StrengthReport, evaluate
from .wordlists import Wordlist, is_common, normalize_answer

PREDEFINED_SLOTS = (1, 2, 3)
CUSTOM_SLOTS = (4, 5)
SLOT_COUNT = 5
DEFAULT_RECOVERY_THRESHOLD = 3
DEFAULT_SESSION_TTL = 30 * 60.0


class SessionState(Enum):
    OPEN = "open"
    FINALIZED = "finalized"
    ABANDONED = "abandoned"


class AnswerState(Enum):
    EMPTY = "empty"
    PENDING_WEAK_CONFIRMATION = "pending_weak_confirmation"
    ACCEPTED = "accepted"


class SubmitStatus(Enum):
    ACCEPTED = "accepted"
    WEAK_NEEDS_CONFIRMATION = "weak_needs_confirmation"


@dataclass(frozen=True)
class Question:
    id: str
    text: str
    category: str


@dataclass(frozen=True)
class QuestionCatalog:
    questions: tuple[Question, ...]

    def __post_init__(self):
        ids = [q.id for q in self.questions]
        if len(set(ids)) != len(ids):
            raise ConfigurationError("catalog question ids are not unique")
        texts = [normalize_answer(q.text) for q in self.questions]
        if len(set(texts)) != len(texts):
            raise ConfigurationError("catalog question texts are not unique")

    def get(self, question_id: str) -> Question | None:
        for q in self.questions:
            if q.id == question_id:
                return q
        return None


def validate_catalog(
    catalog: QuestionCatalog,
    templates: dict[str, MnemonicTemplate],
    minimum: int = 6,
) -> None:
    """Checks applied at service startup; tests may pass a smaller minimum."""
    if len(catalog.questions) < minimum:
        raise ConfigurationError(
            f"catalog has {len(catalog.questions)} questions, needs {minimum}"
        )
    for q in catalog.questions:
        if q.category not in templates and GENERIC_CATEGORY not in templates:
            raise ConfigurationError(
                f"no suggestion template for category {q.category!r}"
            )


@dataclass
class Slot:
    kind: str  # "predefined" | "custom"
    number: int  # 1-based, stable
    question_id: str | None = None
    question_text: str | None = None
    category: str | None = None
    answer_state: AnswerState = AnswerState.EMPTY
    answer_plain: str | None = None
    band_at_save: Band | None = None
    weak_override: bool = False
    attempts: int = 0

    def clear_answer(self) -> None:
        self.answer_state = AnswerState.EMPTY
        self.answer_plain = None
        self.band_at_save = None
        self.weak_override = False


@dataclass
class Session:
    id: str
    slots: list[Slot]
    state: SessionState = SessionState.OPEN
    created_at: float = field(default_factory=time.time)
    last_activity: float = field(default_factory=time.time)

    def touch(self, now: float | None = None) -> None:
        self.last_activity = time.time() if now is None else now


@dataclass(frozen=True)
class SubmitOutcome:
    status: SubmitStatus
    report: StrengthReport
    common_hit: str | None
    suggestion: Suggestion | None

    def __post_init__(self):
        pending = self.status is SubmitStatus.WEAK_NEEDS_CONFIRMATION
        if pending != (self.suggestion is not None):
            raise ValidationError("suggestion present iff weak needs confirmation")


def expire_if_idle(session: Session, ttl: float, now: float | None = None) -> bool:
    """Abandon an Open session idle past ttl seconds; erases pending plaintext."""
    now = time.time() if now is None else now
    if session.state is SessionState.OPEN and now - session.last_activity > ttl:
        for slot in session.slots:
            slot.answer_plain = None
            if slot.answer_state is AnswerState.PENDING_WEAK_CONFIRMATION:
                slot.answer_state = AnswerState.EMPTY
        session.state = SessionState.ABANDONED
        return True
    return False


def _suggestion_seed(session_id: str, slot_number: int, attempt: int) -> int:
    material = f"{session_id}:{slot_number}:{attempt}".encode("utf-8")
    return int.from_bytes(hashlib.sha256(material).digest()[:4], "big")


class SessionEngine:
    """Runs the setup flow against one catalog, wordlist set and template set."""

    def __init__(
        self,
        catalog: QuestionCatalog,
        wordlists: list[Wordlist],
        templates: dict[str, MnemonicTemplate],
        hash_params: HashParams | None = None,
        recovery_threshold: int = DEFAULT_RECOVERY_THRESHOLD,
    ):
        self.catalog = catalog
        self.wordlists = list(wordlists)
        self.templates = dict(templates)
        self.hash_params = hash_params or HashParams()
        self.recovery_threshold = recovery_threshold

    def create_session(self) -> Session:
        slots = [Slot(kind="predefined", number=n) for n in PREDEFINED_SLOTS]
        slots += [Slot(kind="custom", number=n) for n in CUSTOM_SLOTS]
        return Session(id=secrets.token_urlsafe(16), slots=slots)

    def _open_session(self, session: Session) -> None:
        if session.state is not SessionState.OPEN:
            raise StateError(f"session is {session.state.value}, not open")

    def _slot(self, session: Session, number: int, allowed: tuple[int, ...]) -> Slot:
        if number not in allowed:
            raise ValidationError(
                f"slot must be in {list(allowed)}, got {number}", field="slot"
            )
        return session.slots[number - 1]

    def select_predefined(
        self, session: Session, slot_number: int, question_id: str
    ) -> Session:
        """Bind a catalog question to one of slots 1-3; clears any prior answer."""
        self._open_session(session)
        slot = self._slot(session, slot_number, PREDEFINED_SLOTS)
        question = self.catalog.get(question_id)
        if question is None:
            raise NotFoundError(
                f"unknown question id {question_id!r}", field="question_id"
            )
        for other in session.slots:
            if other.number != slot_number and other.question_id == question_id:
                raise ConflictError(
                    f"question {question_id!r} is already used by slot {other.number}",
                    field="question_id",
                )
        slot.question_id = question.id
        slot.question_text = question.text
        slot.category = question.category
        slot.clear_answer()
        session.touch()
        return session

    def set_custom_question(
        self, session: Session, slot_number: int, text: str
    ) -> Session:
        """Set the user's own question text on slot 4 or 5."""
        self._open_session(session)
        slot = self._slot(session, slot_number, CUSTOM_SLOTS)
        normalized = normalize_answer(text)
        if not normalized:
            raise ValidationError("custom question text is empty", field="text")
        for q in self.catalog.questions:
            if normalize_answer(q.text) == normalized:
                raise ConflictError(
                    "custom question duplicates a catalog question", field="text"
                )
        for other in session.slots:
            if (
                other.kind == "custom"
                and other.number != slot_number
                and other.question_text is not None
                and normalize_answer(other.question_text) == normalized
            ):
                raise ConflictError(
                    f"custom question duplicates slot {other.number}", field="text"
                )
        slot.question_text = text
        slot.category = GENERIC_CATEGORY
        slot.clear_answer()
        session.touch()
        return session

    def submit_answer(
        self, session: Session, slot_number: int, answer: str
    ) -> SubmitOutcome:
        """Score an answer; accept it or park it pending weak confirmation."""
        self._open_session(session)
        slot = self._slot(session, slot_number, PREDEFINED_SLOTS + CUSTOM_SLOTS)
        if slot.question_text is None:
            raise StateError(f"slot {slot_number} has no question set")
        if not answer.strip():
            raise ValidationError("answer is empty", field="answer")

        report = evaluate(answer)
        common, category_hit = is_common(answer, self.wordlists)
        effective_band = Band.WEAK if common else report.band
        slot.attempts += 1
        session.touch()

        if effective_band is Band.WEAK:
            slot.answer_state = AnswerState.PENDING_WEAK_CONFIRMATION
            slot.answer_plain = answer
            slot.band_at_save = None
            slot.weak_override = False
            suggestion = suggest(
                slot.category or GENERIC_CATEGORY,
                _suggestion_seed(session.id, slot_number, slot.attempts),
                self.templates,
                self.wordlists,
            )
            return SubmitOutcome(
                status=SubmitStatus.WEAK_NEEDS_CONFIRMATION,
                report=report,
                common_hit=category_hit,
                suggestion=suggestion,
            )

        slot.answer_state = AnswerState.ACCEPTED
        slot.answer_plain = answer
        slot.band_at_save = effective_band
        slot.weak_override = False
        return SubmitOutcome(
            status=SubmitStatus.ACCEPTED,
            report=report,
            common_hit=category_hit,
            suggestion=None,
        )

    def confirm_weak(self, session: Session, slot_number: int, answer: str) -> Session:
        """Accept a pending weak answer the user insists on keeping."""
        self._open_session(session)
        slot = self._slot(session, slot_number, PREDEFINED_SLOTS + CUSTOM_SLOTS)
        if slot.answer_state is not AnswerState.PENDING_WEAK_CONFIRMATION:
            raise StateError(f"slot {slot_number} has no pending weak answer")
        if match_normal(answer) != match_normal(slot.answer_plain or ""):
            raise ConflictError(
                "confirmed text differs from the pending answer; submit it again",
                field="answer",
            )
        slot.answer_state = AnswerState.ACCEPTED
        slot.band_at_save = Band.WEAK
        slot.weak_override = True
        session.touch()
        return session

    def finalize(
        self, session: Session, threshold: int | None = None
    ) -> StoredProfile:
        """Digest all five accepted answers into a profile and erase plaintext."""
        self._open_session(session)
        threshold = self.recovery_threshold if threshold is None else threshold
        if not 1 <= threshold <= SLOT_COUNT:
            raise ValidationError(
                f"threshold must be in [1, {SLOT_COUNT}], got {threshold}",
                field="threshold",
            )
        missing = [
            s.number for s in session.slots if s.answer_state is not AnswerState.ACCEPTED
        ]
        if missing:
            raise StateError(
                "cannot finalize, slots not accepted: "
                + ", ".join(str(n) for n in missing)
            )
        rows = [
            (s.question_text or "", s.answer_plain or "", s.band_at_save or Band.WEAK,
             s.weak_override)
            for s in session.slots
        ]
        profile = build_profile(rows, threshold, self.hash_params)
        for slot in session.slots:
            slot.answer_plain = None
        session.state = SessionState.FINALIZED
        session.touch()
        return profile
