"""Command line entry point: score, suggest, audit, serve, demo.

Human-readable output goes to stdout, diagnostics to stderr; pass --json
where supported to get machine output instead.  Exit codes: 0 success,
1 runtime error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import defaults
from .errors import AnswerMeterError
from .mnemonics import load_templates, suggest
from .profiles import verify_recovery
from .rules import Band
from .service import ServiceConfig, score_payload
from .session import SessionEngine, SubmitStatus
from .wordlists import load_wordlist

RULE_LABELS = (
    ("has_capital", "capital letter"),
    ("has_digit", "digit"),
    ("has_special", "special character"),
    ("has_letter", "letter"),
    ("long_enough", "at least 8 characters"),
)


def _load_wordlists(paths: list[str]):
    if not paths:
        return defaults.default_wordlists()
    return [load_wordlist(p, category=Path(p).stem) for p in paths]


def _print_score(payload: dict, print_fn) -> None:
    print_fn(f"score {payload['score']}/5, {payload['band']}")
    for key, label in RULE_LABELS:
        mark = "x" if payload["rules"][key] else " "
        print_fn(f"  [{mark}] {label}")
    if payload["common"]:
        print_fn(f"  common answer ({payload['common']}): easily guessed")


def cmd_score(args) -> int:
    wordlists = _load_wordlists(args.wordlist)
    payload = score_payload(args.answer, wordlists)
    if args.json:
        print(json.dumps(payload, ensure_ascii=False))
    else:
        _print_score(payload, print)
    return 0


def cmd_suggest(args) -> int:
    templates = load_templates(args.templates) if args.templates else defaults.default_templates()
    wordlists = _load_wordlists(args.wordlist)
    suggestion = suggest(args.category, args.seed, templates, wordlists)
    if args.json:
        print(
            json.dumps(
                {
                    "answer": suggestion.answer,
                    "explanation": suggestion.explanation,
                    "category": suggestion.category,
                    "seed": suggestion.seed,
                },
                ensure_ascii=False,
            )
        )
    else:
        print(suggestion.answer)
        print(suggestion.explanation)
    return 0


def _read_answers_file(path: str) -> list[str]:
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    answers = []
    for raw in lines:
        line = raw.strip()
        if line and not line.startswith("#"):
            answers.append(line)
    return answers


def cmd_audit(args) -> int:
    wordlists = _load_wordlists(args.wordlist)
    answers = _read_answers_file(args.answers)
    rows = [score_payload(a, wordlists) | {"answer": a} for a in answers]
    if args.json:
        print(json.dumps(rows, ensure_ascii=False))
        return 0
    width = max([len("answer")] + [len(r["answer"]) for r in rows])
    print(f"{'answer':<{width}}  score  band    common")
    for r in rows:
        common = r["common"] or "-"
        print(f"{r['answer']:<{width}}  {str(r['score']) + '/5':<5}  {r['band']:<7} {common}")
    bands = {b.value: 0 for b in Band}
    hits = 0
    for r in rows:
        bands[r["band"]] += 1
        hits += r["common"] is not None
    print(
        f"{len(rows)} answers: {bands['strong']} strong, {bands['medium']} medium, "
        f"{bands['weak']} weak; {hits} common-list hits"
    )
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    config = ServiceConfig.from_env(
        host=args.host,
        port=args.port,
        wordlist_paths=args.wordlist or None,
        template_dir=args.templates,
        store_path=args.store,
        recovery_threshold=args.threshold,
        session_ttl=args.session_ttl,
    )
    app = create_app(config)
    print(f"listening on http://{config.host}:{config.port}", file=sys.stderr)
    uvicorn.run(app, host=config.host, port=config.port, log_level="info")
    return 0


def cmd_demo(args) -> int:
    return run_demo(input_fn=input, print_fn=print)


def run_demo(input_fn, print_fn) -> int:
    """Drive the five-question flow in the terminal; injectable for tests."""
    catalog = defaults.default_catalog()
    engine = SessionEngine(catalog, defaults.default_wordlists(), defaults.default_templates())
    session = engine.create_session()
    print_fn("Set up your five recovery questions.")
    print_fn("")
    questions = list(catalog.questions)

    def ask(prompt: str) -> str:
        try:
            return input_fn(prompt)
        except EOFError:
            raise AnswerMeterError("input closed; demo aborted") from None

    for slot_number in (1, 2, 3):
        chosen = {s.question_id for s in session.slots if s.question_id}
        options = [q for q in questions if q.id not in chosen]
        print_fn(f"Slot {slot_number} - pick a question:")
        for i, q in enumerate(options, start=1):
            print_fn(f"  {i}. {q.text}")
        while True:
            raw = ask(f"choice [1-{len(options)}]: ").strip()
            if raw.isdigit() and 1 <= int(raw) <= len(options):
                engine.select_predefined(session, slot_number, options[int(raw) - 1].id)
                break
            print_fn("  enter a number from the list")

    for slot_number in (4, 5):
        while True:
            text = ask(f"Slot {slot_number} - write your own question: ").strip()
            try:
                engine.set_custom_question(session, slot_number, text)
                break
            except AnswerMeterError as exc:
                print_fn(f"  {exc.message}")

    for slot in list(session.slots):
        print_fn("")
        print_fn(f"Q{slot.number}: {slot.question_text}")
        while True:
            answer = ask("answer: ")
            try:
                outcome = engine.submit_answer(session, slot.number, answer)
            except AnswerMeterError as exc:
                print_fn(f"  {exc.message}")
                continue
            payload = score_payload(answer, engine.wordlists)
            _print_score(payload, print_fn)
            if outcome.status is SubmitStatus.ACCEPTED:
                print_fn("  saved.")
                break
            assert outcome.suggestion is not None
            print_fn("  that answer is weak. A stronger pattern you could imitate:")
            print_fn(f"    {outcome.suggestion.answer}")
            print_fn(f"    {outcome.suggestion.explanation}")
            decision = ask("  keep it anyway? [k]eep / [r]etry: ").strip().lower()
            if decision.startswith("k"):
                engine.confirm_weak(session, slot.number, answer)
                print_fn("  saved with weak override.")
                break

    profile = engine.finalize(session)
    print_fn("")
    print_fn(f"Profile finalized: {profile.profile_id}")
    for entry in profile.entries:
        override = " (weak override)" if entry.weak_override else ""
        print_fn(f"  {entry.question_text} - {entry.band_at_save.value}{override}")

    if ask("Try a recovery round now? [y/N]: ").strip().lower().startswith("y"):
        attempts: list[str | None] = []
        for entry in profile.entries:
            attempts.append(ask(f"{entry.question_text} ") or None)
        outcome = verify_recovery(profile, attempts)
        print_fn("recovery granted" if outcome.granted else "recovery denied")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="answermeter",
        description="Strength meter and mnemonic suggestions for security-question answers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_score = sub.add_parser("score", help="score one answer against the rubric")
    p_score.add_argument("answer")
    p_score.add_argument("--json", action="store_true")
    p_score.add_argument("--wordlist", action="append", default=[],
                         help="wordlist file (repeatable); default: bundled lists")
    p_score.set_defaults(func=cmd_score)

    p_suggest = sub.add_parser("suggest", help="print a mnemonic suggestion")
    p_suggest.add_argument("--category", required=True)
    p_suggest.add_argument("--seed", type=int, default=0)
    p_suggest.add_argument("--json", action="store_true")
    p_suggest.add_argument("--templates", help="template directory")
    p_suggest.add_argument("--wordlist", action="append", default=[])
    p_suggest.set_defaults(func=cmd_suggest)

    p_audit = sub.add_parser("audit", help="score a file of answers")
    p_audit.add_argument("--wordlist", action="append", default=[])
    p_audit.add_argument("--answers", required=True)
    p_audit.add_argument("--json", action="store_true")
    p_audit.set_defaults(func=cmd_audit)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host")
    p_serve.add_argument("--port", type=int)
    p_serve.add_argument("--wordlist", action="append")
    p_serve.add_argument("--templates")
    p_serve.add_argument("--store")
    p_serve.add_argument("--threshold", type=int)
    p_serve.add_argument("--session-ttl", type=float, dest="session_ttl")
    p_serve.set_defaults(func=cmd_serve)

    p_demo = sub.add_parser("demo", help="interactive setup walkthrough")
    p_demo.set_defaults(func=cmd_demo)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except AnswerMeterError as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
