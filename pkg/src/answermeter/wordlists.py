"""Common-answer wordlists and the guessability screen.

A rule-compliant answer is still a poor recovery credential when it is
one of the handful of things most people answer ("cricket", "blue",
"james").  Wordlists are plain UTF-8 text, one entry per line, blank
lines and '#' comments ignored; matching is exact after normalization,
never fuzzy.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from pathlib import Path

from .errors import NotFoundError, ValidationError


def normalize_answer(text: str) -> str:
    """Trim, casefold and NFC-compose text. Idempotent."""
    return unicodedata.normalize("NFC", text.strip().casefold())


@dataclass(frozen=True)
class Wordlist:
    """An immutable, category-tagged set of normalized common answers."""

    category: str
    entries: frozenset[str]
    source_path: str = ""

    def __post_init__(self):
        bad = [e for e in self.entries if normalize_answer(e) != e]
        if bad:
            raise ValidationError(
                f"wordlist {self.category!r} has non-normalized entries: {bad[:3]!r}"
            )

    def __contains__(self, normalized: str) -> bool:
        return normalized in self.entries

    def __len__(self) -> int:
        return len(self.entries)


def load_wordlist(path: str | Path, category: str) -> Wordlist:
    """Load one wordlist file; see the module docstring for the format."""
    p = Path(path)
    try:
        raw = p.read_bytes()
    except FileNotFoundError:
        raise NotFoundError(f"wordlist file not found: {p}") from None
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        line = raw[: exc.start].count(b"\n") + 1
        raise ValidationError(f"{p}: invalid UTF-8 on line {line}") from None

    entries = set()
    for raw_line in text.splitlines():
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        entries.add(normalize_answer(line))
    return Wordlist(category=category, entries=frozenset(entries), source_path=str(p))


def is_common(answer: str, wordlists: list[Wordlist]) -> tuple[bool, str | None]:
    """Check an answer against every list.

    Returns (True, category) for the first match with lists ordered by
    category name, or (False, None).
    """
    needle = normalize_answer(answer)
    if not needle:
        return False, None
    for wl in sorted(wordlists, key=lambda w: w.category):
        if needle in wl:
            return True, wl.category
    return False, None
