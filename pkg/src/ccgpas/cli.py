"""Command-line front end: ``parse``, ``reduce`` and ``lexgen``.

Exit status: 0 on success, 1 when the input was processed but yielded no
result (no derivation, no combinator-free normal form, empty schema), 2 on
errors such as unreadable files, unknown tokens or syntax errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, TextIO

from .category import CategorySyntaxError, format_category, parse_category
from .comb import (
    DEFAULT_STEP_LIMIT,
    TermSyntaxError,
    combinator_free,
    format_term,
    has_redex,
    parse_term,
    reduction_trace,
)
from .lexicon import (
    LexiconError,
    TokenError,
    argument_categories,
    case_suffix_entries,
    demo_lexicon_path,
    load_lexicon_file,
)
from .parser import LowerTypeMode, ParseOptions, ResourceExhausted, format_derivation, parse
from .pas import PasError, derive_pas

OK, NO_RESULT, ERROR = 0, 1, 2


@dataclass(frozen=True)
class CliConfig:
    lexicon_path: Path = demo_lexicon_path()
    goal: str = "S"
    lower_type_mode: str = "onfail"
    step_limit: int = DEFAULT_STEP_LIMIT
    output: str = "text"


def _inputs(items: list[str], stdin: TextIO, joined: bool) -> list[str]:
    # parse takes the words of one sentence; reduce takes one term per argument
    if items:
        return [" ".join(items)] if joined else list(items)
    lines = (ln.strip() for ln in stdin)
    return [ln for ln in lines if ln and not ln.startswith("#")]


def cmd_parse(config: CliConfig, sentences: list[str],
              out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    try:
        lex = load_lexicon_file(config.lexicon_path)
        goal = parse_category(config.goal)
    except (OSError, LexiconError, CategorySyntaxError) as e:
        print(f"error: {e}", file=err)
        return ERROR
    opts = ParseOptions(goal=goal, lower_type_mode=LowerTypeMode(config.lower_type_mode))
    status = OK
    for sentence in sentences:
        try:
            derivations = parse(sentence.split(), lex, opts)
        except (TokenError, ResourceExhausted, ValueError) as e:
            print(f"error: {sentence}: {e}", file=err)
            status = ERROR
            continue
        if not derivations:
            if config.output == "text":
                print(f"sentence: {sentence}\nno derivation\n", file=out)
            status = max(status, NO_RESULT)
            continue
        for i, d in enumerate(derivations, 1):
            try:
                pas = format_term(derive_pas(d, config.step_limit))
            except PasError as e:
                print(f"error: {sentence}: derivation {i}: {e}", file=err)
                pas = None
                status = ERROR
            if config.output == "jsonl":
                print(json.dumps({
                    "sentence": sentence,
                    "derivation": i,
                    "category": format_category(d.category),
                    "label": str(d.root.label),
                    "semantics": format_term(d.semantics),
                    "pas": pas,
                }, ensure_ascii=False), file=out)
                continue
            print(f"sentence: {sentence}", file=out)
            print(f"derivation {i}/{len(derivations)}", file=out)
            for line in format_derivation(d).splitlines():
                print("  " + line, file=out)
            print(f"combinatory form: {format_term(d.semantics)}", file=out)
            print(f"PAS: {pas if pas is not None else '(none)'}\n", file=out)
    return status


def cmd_reduce(config: CliConfig, terms: list[str],
               out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    status = OK
    for text in terms:
        try:
            t = parse_term(text)
        except TermSyntaxError as e:
            print(f"error: {e}", file=err)
            status = ERROR
            continue
        print(f"   {format_term(t)}", file=out)
        steps = 0
        for steps, (t, depth) in enumerate(reduction_trace(t, config.step_limit), 1):
            # head-level steps flush left, steps inside arguments indented
            print(f"{steps:>2} {'  ' * depth}{format_term(t)}", file=out)
        nf = not has_redex(t)
        free = nf and combinator_free(t)
        if not nf:
            print(f"step limit reached after {steps} steps", file=out)
        print(f"normal form: {'yes' if nf else 'no'}", file=out)
        print(f"combinator-free: {'yes' if free else 'no'}\n", file=out)
        if not free:
            status = max(status, NO_RESULT)
    return status


def cmd_lexgen(config: CliConfig, n: int,
               out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    try:
        lex = load_lexicon_file(config.lexicon_path)
    except (OSError, LexiconError) as e:
        print(f"error: {e}", file=err)
        return ERROR
    if n < 1:
        print("error: genotype index must be positive", file=err)
        return ERROR
    types = argument_categories(n, lex.inventory)
    if not types:
        print(f"no category in the inventory governs NP{n}", file=err)
        return NO_RESULT
    print(f"C({n})", file=out)
    for t in types:
        print(f"  {format_category(t.category)} : {format_term(t.semantics)}  [{t.kind}]", file=out)
    for decl in lex.cases:
        if decl.genotype != n:
            continue
        forms = ", ".join(f or "∅" for f in decl.allomorphs)
        print(f"-{decl.name} ({forms})", file=out)
        for e in case_suffix_entries(decl.name, n, list(decl.allomorphs[:1]),
                                     lex.inventory, decl.agr):
            print(f"  := {format_category(e.category)} : {format_term(e.semantics)}", file=out)
    return OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--lexicon", type=Path, default=demo_lexicon_path(),
                        help="lexicon file (default: bundled Turkish demo)")
    common.add_argument("--goal", default="S", help="goal category (default: S)")
    common.add_argument("--lower", choices=[m.value for m in LowerTypeMode], default="onfail",
                        help="when bare NPn readings are admitted")
    common.add_argument("--steps", type=int, default=DEFAULT_STEP_LIMIT,
                        help="reduction step limit")
    common.add_argument("--format", choices=["text", "jsonl"], default="text")

    p = argparse.ArgumentParser(prog="ccgpas", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    sp = sub.add_parser("parse", parents=[common], help="parse sentences and print their PAS")
    sp.add_argument("sentence", nargs="*", help="sentence (default: one per line on stdin)")
    sr = sub.add_parser("reduce", parents=[common], help="trace normal-order reduction of a term")
    sr.add_argument("term", nargs="*", help="terms, one per argument (default: one per line on stdin)")
    sl = sub.add_parser("lexgen", parents=[common], help="list the categories for argument n")
    sl.add_argument("n", type=int)
    return p


def main(argv: Optional[list[str]] = None, stdin: TextIO = None,
         stdout: TextIO = None, stderr: TextIO = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    if args.steps < 1:
        print("error: --steps must be positive", file=stderr)
        return ERROR
    config = CliConfig(args.lexicon, args.goal, args.lower, args.steps, args.format)
    if args.command == "parse":
        return cmd_parse(config, _inputs(args.sentence, stdin, True), stdout, stderr)
    if args.command == "reduce":
        return cmd_reduce(config, _inputs(args.term, stdin, False), stdout, stderr)
    return cmd_lexgen(config, args.n, stdout, stderr)


if __name__ == "__main__":
    sys.exit(main())
