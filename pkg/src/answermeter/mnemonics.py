"""Mnemonic answer suggestions: memorable templates that pass the full rubric.

A template composes an answer from six ordered slots:

    topic  - abbreviation of the memory subject, leading capital ("Crick")
    event  - capitalized event token ("ICC")
    year   - two to four digits ("15")
    sep    - one special character ("@")
    place  - capitalized place abbreviation ("Aus")
    term   - one trailing special character (".")

and renders a plain-language explanation from the expanded forms of the
same fillers, so the user sees how the answer was built and can imitate
the pattern with a memory of their own.

Template file format (UTF-8, '#' comments and blank lines ignored):

    [answer]
    {topic}{event}{year}{sep}{place}{term}

    [explanation]
    My favorite sport is {topic}, ... {place} ... {event} ... {year}

    [topic]          # one filler per line: value|expansion
    Crick|cricket

    [event]
    ICC|ICC world cup
    ...

The seed indexes the cartesian product of the filler pools (slot order
above, topic varying fastest), so equal seeds always reproduce the same
suggestion and seed 0 is the first filler of every pool.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import ConfigurationError, GenerationExhaustedError, ValidationError
from .wordlists import Wordlist, is_common

SLOT_ORDER = ("topic", "event", "year", "sep", "place", "term")
MEMORY_SLOTS = ("topic", "event", "year", "place")
GENERIC_CATEGORY = "generic"
MAX_DRAWS = 32


@dataclass(frozen=True)
class Filler:
    value: str
    expansion: str


@dataclass(frozen=True)
class MnemonicTemplate:
    category: str
    answer_pattern: str
    explanation_pattern: str
    pools: dict[str, tuple[Filler, ...]]

    def __post_init__(self):
        _validate_template(self)

    def combinations(self) -> int:
        n = 1
        for slot in SLOT_ORDER:
            n *= len(self.pools[slot])
        return n


@dataclass(frozen=True)
class Suggestion:
    answer: str
    explanation: str
    category: str
    seed: int


def _validate_template(t: MnemonicTemplate) -> None:
    """Per-slot shape checks that together guarantee a 5/5 answer."""
    missing = [s for s in SLOT_ORDER if not t.pools.get(s)]
    if missing:
        raise ConfigurationError(
            f"template {t.category!r}: empty or missing slot pools {missing}"
        )
    for slot in SLOT_ORDER:
        if "{%s}" % slot not in t.answer_pattern:
            raise ConfigurationError(
                f"template {t.category!r}: answer pattern lacks {{{slot}}}"
            )
    for slot in MEMORY_SLOTS:
        if "{%s}" % slot not in t.explanation_pattern:
            raise ConfigurationError(
                f"template {t.category!r}: explanation pattern lacks {{{slot}}}"
            )
    checks = {
        "topic": lambda v: v[:1].isupper() and v.isalpha(),
        "event": lambda v: v[:1].isupper() and v.isalpha(),
        "place": lambda v: v[:1].isupper() and v.isalpha(),
        "year": lambda v: v.isdecimal() and 2 <= len(v) <= 4,
        "sep": lambda v: len(v) == 1 and not v.isalnum() and not v.isspace(),
        "term": lambda v: len(v) == 1 and not v.isalnum() and not v.isspace(),
    }
    for slot, ok in checks.items():
        for filler in t.pools[slot]:
            if not ok(filler.value):
                raise ConfigurationError(
                    f"template {t.category!r}: bad {slot} filler {filler.value!r}"
                )
    shortest = sum(min(len(f.value) for f in t.pools[s]) for s in SLOT_ORDER)
    if shortest < 8:
        raise ConfigurationError(
            f"template {t.category!r}: shortest composition is {shortest} chars (< 8)"
        )
    try:
        t.answer_pattern.format(**{s: t.pools[s][0].value for s in SLOT_ORDER})
        t.explanation_pattern.format(**{s: t.pools[s][0].expansion for s in SLOT_ORDER})
    except (KeyError, IndexError, ValueError) as exc:
        raise ConfigurationError(
            f"template {t.category!r}: pattern does not instantiate: {exc}"
        ) from None


def _pick_fillers(template: MnemonicTemplate, seed: int) -> dict[str, Filler]:
    chosen = {}
    q = seed
    for slot in SLOT_ORDER:
        pool = template.pools[slot]
        q, r = divmod(q, len(pool))
        chosen[slot] = pool[r]
    return chosen


def _compose(template: MnemonicTemplate, seed: int) -> tuple[str, str, dict[str, Filler]]:
    chosen = _pick_fillers(template, seed)
    answer = template.answer_pattern.format(**{s: f.value for s, f in chosen.items()})
    explanation = template.explanation_pattern.format(
        **{s: f.expansion for s, f in chosen.items()}
    )
    return answer, explanation, chosen


def suggest(
    category: str,
    seed: int,
    templates: dict[str, MnemonicTemplate],
    wordlists: list[Wordlist] | None = None,
) -> Suggestion:
    """Deterministically produce one rubric-compliant suggestion.

    Falls back to the "generic" template for unknown categories.  Draws
    that collide with a wordlist advance to the next seed; after
    MAX_DRAWS consecutive collisions the pools are considered exhausted.
    """
    if seed < 0:
        raise ValidationError(f"seed must be non-negative, got {seed}", field="seed")
    template = templates.get(category) or templates.get(GENERIC_CATEGORY)
    if template is None:
        raise ConfigurationError(
            f"no template for category {category!r} and no generic fallback"
        )
    for attempt in range(MAX_DRAWS):
        answer, explanation, _ = _compose(template, seed + attempt)
        common, _cat = is_common(answer, wordlists or [])
        if not common:
            return Suggestion(
                answer=answer,
                explanation=explanation,
                category=template.category,
                seed=seed,
            )
    raise GenerationExhaustedError(
        f"{MAX_DRAWS} consecutive draws for {template.category!r} hit a wordlist"
    )


def parse_template(text: str, category: str) -> MnemonicTemplate:
    """Parse the template file format described in the module docstring."""
    sections: dict[str, list[str]] = {}
    current: str | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1].strip()
            sections.setdefault(current, [])
            continue
        if current is None:
            raise ConfigurationError(
                f"template {category!r}: line {lineno} outside any [section]"
            )
        sections[current].append(line)

    def pattern_of(name: str) -> str:
        lines = sections.get(name, [])
        if len(lines) != 1:
            raise ConfigurationError(
                f"template {category!r}: [{name}] must hold exactly one pattern line"
            )
        return lines[0]

    pools = {}
    for slot in SLOT_ORDER:
        fillers = []
        for entry in sections.get(slot, []):
            value, _, expansion = entry.partition("|")
            fillers.append(Filler(value=value.strip(), expansion=(expansion.strip() or value.strip())))
        pools[slot] = tuple(fillers)
    return MnemonicTemplate(
        category=category,
        answer_pattern=pattern_of("answer"),
        explanation_pattern=pattern_of("explanation"),
        pools=pools,
    )


def dump_template(template: MnemonicTemplate) -> str:
    """Serialize a template back to the file format (round-trips with parse)."""
    out = ["[answer]", template.answer_pattern, "", "[explanation]",
           template.explanation_pattern]
    for slot in SLOT_ORDER:
        out += ["", f"[{slot}]"]
        out += [f"{f.value}|{f.expansion}" for f in template.pools[slot]]
    return "\n".join(out) + "\n"


def load_template(path: str | Path) -> MnemonicTemplate:
    """Load one template file; the category is the file stem."""
    p = Path(path)
    if not p.exists():
        raise ConfigurationError(f"template file not found: {p}")
    return parse_template(p.read_text(encoding="utf-8"), category=p.stem)


def load_templates(directory: str | Path) -> dict[str, MnemonicTemplate]:
    """Load every *.txt template in a directory, keyed by category."""
    d = Path(directory)
    if not d.is_dir():
        raise ConfigurationError(f"template directory not found: {d}")
    templates = {}
    for p in sorted(d.glob("*.txt")):
        templates[p.stem] = load_template(p)
    if not templates:
        raise ConfigurationError(f"no templates found in {d}")
    return templates
