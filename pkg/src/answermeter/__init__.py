"""Strength meter, guessability screen and mnemonic suggestions for
security-question answers, with a five-question setup flow, an HTTP
service and a CLI on top."""

from .defaults import (
    default_catalog,
    default_templates,
    default_wordlists,
)
from .errors import (
    AnswerMeterError,
    ConfigurationError,
    ConflictError,
    GenerationExhaustedError,
    NotFoundError,
    StateError,
    StoreError,
    ValidationError,
)
from .mnemonics import MnemonicTemplate, Suggestion, load_template, load_templates, suggest
from .profiles import (
    HashParams,
    RecoveryOutcome,
    StoredProfile,
    match_normal,
    verify_recovery,
)
from .rules import Band, Color, RuleVector, StrengthReport, check_rules, classify_band, evaluate
from .service import ServiceConfig, create_app, score_payload
from .session import (
    Question,
    QuestionCatalog,
    Session,
    SessionEngine,
    SubmitOutcome,
    SubmitStatus,
    validate_catalog,
)
from .store import FileProfileStore, MemoryProfileStore, ProfileStore
from .wordlists import Wordlist, is_common, load_wordlist, normalize_answer

__version__ = "0.1.0"

__all__ = [
    "AnswerMeterError",
    "Band",
    "Color",
    "ConfigurationError",
    "ConflictError",
    "FileProfileStore",
    "GenerationExhaustedError",
    "HashParams",
    "MemoryProfileStore",
    "MnemonicTemplate",
    "NotFoundError",
    "ProfileStore",
    "Question",
    "QuestionCatalog",
    "RecoveryOutcome",
    "RuleVector",
    "ServiceConfig",
    "Session",
    "SessionEngine",
    "StateError",
    "StoredProfile",
    "StoreError",
    "StrengthReport",
    "SubmitOutcome",
    "SubmitStatus",
    "Suggestion",
    "ValidationError",
    "Wordlist",
    "check_rules",
    "classify_band",
    "create_app",
    "default_catalog",
    "default_templates",
    "default_wordlists",
    "evaluate",
    "is_common",
    "load_template",
    "load_templates",
    "load_wordlist",
    "match_normal",
    "normalize_answer",
    "score_payload",
    "suggest",
    "validate_catalog",
    "verify_recovery",
]
