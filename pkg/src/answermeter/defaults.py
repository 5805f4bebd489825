"""Bundled fixture data: wordlists, suggestion templates, question catalog.

These ship for tests and demos; operators point the service at their own
files for production use.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .mnemonics import MnemonicTemplate, load_template
from .session import Question, QuestionCatalog
from .wordlists import Wordlist, load_wordlist

DEFAULT_QUESTIONS = (
    Question(id="q-sport", text="What is your favorite sport?", category="sport"),
    Question(id="q-color", text="What is your favorite color?", category="color"),
    Question(
        id="q-movie",
        text="What was your favorite movie in childhood?",
        category="movie",
    ),
    Question(
        id="q-teacher",
        text="What was the name of your favorite teacher?",
        category="name",
    ),
    Question(id="q-pet", text="What was the name of your first pet?", category="name"),
    Question(id="q-city", text="In what city were you born?", category="place"),
    Question(id="q-food", text="What is your favorite food?", category="food"),
)


def default_catalog() -> QuestionCatalog:
    return QuestionCatalog(questions=DEFAULT_QUESTIONS)


def _data_dir(subdir: str) -> Path:
    return Path(str(resources.files("answermeter").joinpath("data", subdir)))


def default_wordlist_paths() -> list[Path]:
    return sorted(_data_dir("wordlists").glob("*.txt"))


def default_template_dir() -> Path:
    return _data_dir("mnemonics")


def default_wordlists() -> list[Wordlist]:
    return [load_wordlist(p, category=p.stem) for p in default_wordlist_paths()]


def default_templates() -> dict[str, MnemonicTemplate]:
    return {p.stem: load_template(p) for p in sorted(default_template_dir().glob("*.txt"))}
