"""Answer strength rubric: five checks, a 0-5 score and a three-band meter.

Character classes are Unicode general categories, not ASCII ranges:
capital = Lu, digit = Nd, letter = any L*, special = anything that is
neither a letter, a decimal digit nor whitespace.  Length counts Unicode
scalar values, whitespace included.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, fields
from enum import Enum

MIN_LENGTH = 8


class Band(Enum):
    WEAK = "weak"
    MEDIUM = "medium"
    STRONG = "strong"


class Color(Enum):
    RED = "red"
    ORANGE = "orange"
    GREEN = "green"


@dataclass(frozen=True)
class RuleVector:
    """Outcome of the five checks; each flag depends on the answer text alone."""

    has_capital: bool
    has_digit: bool
    has_special: bool
    has_letter: bool
    long_enough: bool

    def count(self) -> int:
        return sum(getattr(self, f.name) for f in fields(self))


@dataclass(frozen=True)
class StrengthReport:
    rules: RuleVector
    score: int
    band: Band
    color: Color


def _is_special(ch: str) -> bool:
    if ch.isspace():
        return False
    cat = unicodedata.category(ch)
    return not cat.startswith("L") and cat != "Nd"


def check_rules(answer: str) -> RuleVector:
    """Apply the five checks to an answer. Total over all finite strings."""
    has_capital = has_digit = has_special = has_letter = False
    for ch in answer:
        cat = unicodedata.category(ch)
        if cat == "Lu":
            has_capital = True
            has_letter = True
        elif cat.startswith("L"):
            has_letter = True
        elif cat == "Nd":
            has_digit = True
        elif not ch.isspace():
            has_special = True
    return RuleVector(
        has_capital=has_capital,
        has_digit=has_digit,
        has_special=has_special,
        has_letter=has_letter,
        long_enough=len(answer) >= MIN_LENGTH,
    )


def classify_band(score: int) -> tuple[Band, Color]:
    """Map a 0-5 score to its meter band and bar color.

    0-2 is weak/red, 3-4 medium/orange, 5 strong/green: the top band
    requires the full rubric.
    """
    if not 0 <= score <= 5:
        raise ValueError(f"score must be in [0, 5], got {score!r}")
    if score <= 2:
        return Band.WEAK, Color.RED
    if score <= 4:
        return Band.MEDIUM, Color.ORANGE
    return Band.STRONG, Color.GREEN


def evaluate(answer: str) -> StrengthReport:
    """Score an answer against the rubric and classify it."""
    rules = check_rules(answer)
    score = rules.count()
    band, color = classify_band(score)
    return StrengthReport(rules=rules, score=score, band=band, color=color)
