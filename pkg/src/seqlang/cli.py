"""Command-line interface.

Subcommands mirror the library pipeline: ``compile`` goes from an
utterance all the way to mission XML, ``parse`` starts from a logical
form, ``generate`` writes seeded corpora, ``eval`` scores the frontend
against a corpus file, ``run`` executes mission XML on the mock plant,
and ``repl`` compiles stdin lines interactively.

stdout carries only data (logical forms, XML, corpus summaries, traces,
reports); everything else goes to stderr.  Exit codes:

    0  success (for eval: accuracy met the threshold)
    1  eval accuracy below threshold
    2  no verb trigger matched (or an ambiguous match)
    3  validation errors
    4  logical-form syntax or XML shape errors
    5  file problems (unreadable, malformed config/corpus)
"""

from __future__ import annotations

import argparse
import sys
from importlib import resources
from pathlib import Path

from seqlang.btxml import EmitError, XmlShapeError, emit
from seqlang.dataset import Corpus, FormatError, InsufficientSpace, generate, read_tsv, vocab_stats, write_tsv
from seqlang.evaluation import evaluate, format_report, report_lines
from seqlang.frontend import (
    AmbiguousMatch,
    Lexicon,
    LexiconError,
    NoVerbMatch,
    default_lexicon,
    load_lexicon,
    translate,
)
from seqlang.interpreter import MockPlant, format_trace, run
from seqlang.logical_form import LogicalFormError, parse_logical_form, render
from seqlang.registry import ActionRegistry, ConfigParseError, builtin_registry, load_registry, validate


def _say(message: str) -> None:
    print(message, file=sys.stderr)


def _load_registry_arg(path: str | None) -> ActionRegistry:
    if path is None:
        return builtin_registry()
    registry = load_registry(Path(path).read_text(encoding="utf-8"))
    for warning in registry.warnings:
        _say(str(warning))
    return registry


def _load_lexicon_arg(path: str | None, registry: ActionRegistry) -> Lexicon:
    if path is not None:
        return load_lexicon(Path(path).read_text(encoding="utf-8"), registry)
    text = resources.files("seqlang").joinpath("data/lexicon.txt").read_text("utf-8")
    return load_lexicon(text, registry)


def _text_or_stdin(value: str | None) -> str:
    return sys.stdin.read() if value is None else value


def _report_diagnostics(diagnostics) -> bool:
    """Print findings to stderr; True when any is an error."""
    failed = False
    for diag in diagnostics:
        _say(str(diag))
        failed = failed or diag.severity == "error"
    return failed


def cmd_compile(args: argparse.Namespace) -> int:
    registry = _load_registry_arg(args.registry)
    lexicon = _load_lexicon_arg(args.lexicon, registry)
    tree = translate(_text_or_stdin(args.utterance), lexicon, registry)
    if _report_diagnostics(validate(tree, registry, "strict")):
        return 3
    Path(args.out).write_text(emit(tree, registry), encoding="utf-8")
    print(render(tree))
    return 0


def cmd_parse(args: argparse.Namespace) -> int:
    registry = _load_registry_arg(args.registry)
    tree = parse_logical_form(_text_or_stdin(args.form))
    mode = "strict" if args.strict else "lenient"
    if _report_diagnostics(validate(tree, registry, mode)):
        return 3
    xml = emit(tree, registry)
    if args.out is None:
        print(xml, end="")
    else:
        Path(args.out).write_text(xml, encoding="utf-8")
    return 0


def cmd_generate(args: argparse.Namespace) -> int:
    registry = _load_registry_arg(args.registry)
    train, test = generate(args.train, args.test, args.seed, registry)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    for corpus, name in ((train, "train.tsv"), (test, "test.tsv")):
        (out_dir / name).write_text(write_tsv(corpus), encoding="utf-8")
        print(f"{corpus.split} pairs: {len(corpus)} -> {out_dir / name}")
    input_size, output_size = vocab_stats(Corpus(train.pairs + test.pairs, "all"))
    print(f"input vocabulary: {input_size}")
    print(f"output vocabulary: {output_size}")
    return 0


def cmd_eval(args: argparse.Namespace) -> int:
    registry = _load_registry_arg(args.registry)
    lexicon = _load_lexicon_arg(args.lexicon, registry)
    corpus = read_tsv(Path(args.corpus).read_text(encoding="utf-8"), split="eval")
    report = evaluate(lambda text: translate(text, lexicon, registry), corpus)
    if args.lines:
        for line in report_lines(report):
            print(line)
    else:
        print(format_report(report))
    return 0 if report.accuracy >= args.threshold else 1


def cmd_run(args: argparse.Namespace) -> int:
    plant = MockPlant()
    if args.fail_at is not None:
        plant.fail_injections.add(args.fail_at)
    trace, status = run(Path(args.xml).read_text(encoding="utf-8"), plant)
    for entry, line in zip(trace, format_trace(trace)):
        print(line)
        if entry.warning:
            _say(f"warning: unknown action '{entry.action}' at step {entry.step} (no-op)")
    _say(f"overall: {status}")
    return 0


def cmd_repl(args: argparse.Namespace) -> int:
    registry = _load_registry_arg(args.registry)
    lexicon = _load_lexicon_arg(args.lexicon, registry)
    for line in sys.stdin:
        text = line.strip()
        if not text:
            continue
        try:
            tree = translate(text, lexicon, registry)
        except (NoVerbMatch, AmbiguousMatch) as exc:
            _say(f"error: {exc}")
            continue
        Path(args.out).write_text(emit(tree, registry), encoding="utf-8")
        print(render(tree))
        print(args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seqlang",
        description="Compile natural-language commands into mission XML, and run them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compile_p = sub.add_parser("compile", help="utterance -> logical form on stdout + mission XML file")
    compile_p.add_argument("utterance", nargs="?", help="command text; reads stdin when omitted")
    compile_p.add_argument("--lexicon", metavar="FILE", help="lexicon file (default: built-in)")
    compile_p.add_argument("--registry", metavar="FILE", help="extra action definitions")
    compile_p.add_argument("--out", default="mission.xml", help="XML output path (default: mission.xml)")
    compile_p.set_defaults(func=cmd_compile)

    parse_p = sub.add_parser("parse", help="logical form -> validated mission XML")
    parse_p.add_argument("form", nargs="?", help="logical form text; reads stdin when omitted")
    parse_p.add_argument("--registry", metavar="FILE")
    parse_p.add_argument("--strict", action="store_true", help="treat unknown names as errors")
    parse_p.add_argument("--out", metavar="FILE", help="write XML here instead of stdout")
    parse_p.set_defaults(func=cmd_parse)

    gen_p = sub.add_parser("generate", help="write seeded train/test corpora")
    gen_p.add_argument("--train", type=int, default=1000, metavar="N")
    gen_p.add_argument("--test", type=int, default=250, metavar="N")
    gen_p.add_argument("--seed", type=int, default=7)
    gen_p.add_argument("--registry", metavar="FILE")
    gen_p.add_argument("--out", default=".", metavar="DIR", help="directory for train.tsv/test.tsv")
    gen_p.set_defaults(func=cmd_generate)

    eval_p = sub.add_parser("eval", help="score the frontend on a corpus file")
    eval_p.add_argument("corpus", help="TSV corpus path")
    eval_p.add_argument("--lexicon", metavar="FILE")
    eval_p.add_argument("--registry", metavar="FILE")
    eval_p.add_argument("--threshold", type=float, default=1.0, help="exit 0 iff accuracy >= this")
    eval_p.add_argument("--lines", action="store_true", help="machine-readable per-pair lines")
    eval_p.set_defaults(func=cmd_eval)

    run_p = sub.add_parser("run", help="execute mission XML on the mock plant")
    run_p.add_argument("xml", help="mission XML path")
    run_p.add_argument("--fail-at", type=int, metavar="K", help="force FAILURE at action index K")
    run_p.set_defaults(func=cmd_run)

    repl_p = sub.add_parser("repl", help="compile stdin lines until EOF")
    repl_p.add_argument("--lexicon", metavar="FILE")
    repl_p.add_argument("--registry", metavar="FILE")
    repl_p.add_argument("--out", default="mission.xml")
    repl_p.set_defaults(func=cmd_repl)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (NoVerbMatch, AmbiguousMatch) as exc:
        _say(f"error: {exc}")
        return 2
    except (LogicalFormError, XmlShapeError, EmitError) as exc:
        _say(f"error: {exc}")
        return 4
    except (LexiconError, ConfigParseError, FormatError, InsufficientSpace) as exc:
        _say(f"error: {exc}")
        return 5
    except OSError as exc:
        _say(f"error: {exc}")
        return 5


if __name__ == "__main__":
    sys.exit(main())
