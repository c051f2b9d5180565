"""Seeded corpus generation and tab-separated corpus files.

A corpus is a list of (utterance, logical form) pairs.  The generator
draws mission lengths from a fixed weighted distribution, fills each
action from a surface template whose wording the default lexicon can
translate back exactly, and joins clauses with connectives.  Same seed,
same registry, same templates: byte-identical output.

File format is one pair per line, ``utterance<TAB>logicalform``, UTF-8,
LF line endings.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from seqlang.logical_form import ActionNode, ParamNode, SequenceNode, parse_logical_form, render
from seqlang.registry import ActionRegistry, builtin_registry, validate

# Weighted mission lengths, percent. Short missions dominate.
LENGTH_WEIGHTS = ((1, 30), (2, 25), (3, 15), (4, 10), (5, 8), (6, 7), (7, 5))

# Value pools are deliberately small so output vocabulary stays compact.
NUMBERS = ("0.5", "1", "2", "3.5", "5", "7", "-2.5", "-10")
NOUNS = ("buoy", "marker", "pinger", "wrench", "hammer", "table", "bench", "hull")
SAY_PHRASES = ("hello", "hello there", "mission complete", "all clear", "ready", "task done")

CONNECTIVES = (" then ", " and then ", " after that ", " and ", ", ")


@dataclass(eq=False)
class FormatError(Exception):
    """A corpus line that is not exactly utterance<TAB>logicalform."""

    line: int
    message: str

    def __str__(self) -> str:
        return f"corpus line {self.line}: {self.message}"


@dataclass(eq=False)
class InsufficientSpace(Exception):
    """The template space cannot supply the requested number of distinct

    pairs (detected by a stall in the rejection loop, not by counting).
    """

    requested: int
    generated: int

    def __str__(self) -> str:
        return (
            f"ran out of distinct pairs: requested {self.requested}, "
            f"managed {self.generated}"
        )


@dataclass(frozen=True)
class CorpusPair:
    """One utterance and its gold logical form; tab- and newline-free."""

    utterance: str
    logical_form: str

    def __post_init__(self) -> None:
        for label, value in (("utterance", self.utterance), ("logical form", self.logical_form)):
            if not value:
                raise ValueError(f"{label} must be non-empty")
            if "\t" in value or "\n" in value:
                raise ValueError(f"{label} may not contain tabs or newlines")


@dataclass(frozen=True)
class Corpus:
    """An ordered list of pairs tagged with its split name."""

    pairs: tuple[CorpusPair, ...]
    split: str = "train"

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairs", tuple(self.pairs))

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)


def _gen_move(rng: random.Random) -> tuple[str, ActionNode]:
    # keyword spoken in the utterance, parameter name in the logical form
    axes = (("x", "x"), ("y", "y"), ("z", "z"), ("roll", "roll"), ("pitch", "pitch"), ("yaw", "raw"))
    if rng.random() < 0.08:
        return "move", ActionNode("move")
    count = rng.choice((1, 1, 2, 2, 3))
    picked = sorted(rng.sample(range(len(axes)), count))
    trigger = rng.choice(("move to", "head to", "swim to"))
    words = [trigger]
    params = []
    for index in picked:
        keyword, param = axes[index]
        value = rng.choice(NUMBERS)
        words.append(f"{keyword} {value}")
        params.append(ParamNode(param, 0, value))
    return " ".join(words), ActionNode("move", tuple(params))


def _gen_flatten(rng: random.Random) -> tuple[str, ActionNode]:
    value = rng.choice(NUMBERS)
    clause = rng.choice(("flatten out at {}", "flatten to {}", "level off at {}")).format(value)
    return clause, ActionNode("flatten", (ParamNode("num", 0, value),))


def _gen_say(rng: random.Random) -> tuple[str, ActionNode]:
    phrase = rng.choice(SAY_PHRASES)
    clause = rng.choice(("say {}", "announce {}", "broadcast {}")).format(phrase)
    return clause, ActionNode("say", (ParamNode("words", 0, phrase),))


def _gen_clean(rng: random.Random) -> tuple[str, ActionNode]:
    noun = rng.choice(NOUNS)
    clause = rng.choice(("clean the {}", "clean up the {}", "wipe down the {}")).format(noun)
    return clause, ActionNode("clean", (ParamNode("obj", 0, noun),))


def _gen_bring(rng: random.Random) -> tuple[str, ActionNode]:
    noun = rng.choice(NOUNS)
    clause = rng.choice(("bring me the {}", "fetch the {}", "grab the {}")).format(noun)
    return clause, ActionNode("bring", (ParamNode("val", 0, noun),))


def _gen_find(rng: random.Random) -> tuple[str, ActionNode]:
    noun = rng.choice(NOUNS)
    clause = rng.choice(("find the {}", "locate the {}", "look for the {}")).format(noun)
    return clause, ActionNode("find", (ParamNode("val", 0, noun),))


def _gen_goal(rng: random.Random) -> tuple[str, ActionNode]:
    return rng.choice(("touch the goal", "score a goal", "goal")), ActionNode("goal")


def _gen_gate(rng: random.Random) -> tuple[str, ActionNode]:
    return rng.choice(("go through the gate", "pass the gate", "gate")), ActionNode("gate")


def default_templates() -> dict[str, Callable[[random.Random], tuple[str, ActionNode]]]:
    """Surface templates for the built-in actions, one callable each.

    Every callable returns (clause text, action node) where the clause is
    exactly what the shipped lexicon translates back into that node.
    """
    return {
        "move": _gen_move,
        "flatten": _gen_flatten,
        "say": _gen_say,
        "clean": _gen_clean,
        "bring": _gen_bring,
        "find": _gen_find,
        "goal": _gen_goal,
        "gate": _gen_gate,
    }


# Give up after this many consecutive duplicate draws for one slot.
_STALL_LIMIT = 10_000


def _build_pair(
    rng: random.Random,
    length: int,
    templates: dict[str, Callable[[random.Random], tuple[str, ActionNode]]],
    names: tuple[str, ...],
) -> CorpusPair:
    clauses = []
    actions = []
    for _ in range(length):
        clause, action = templates[rng.choice(names)](rng)
        clauses.append(clause)
        actions.append(action)
    utterance = clauses[0]
    for clause in clauses[1:]:
        utterance += rng.choice(CONNECTIVES) + clause
    return CorpusPair(utterance, render(SequenceNode(tuple(actions))))


def _draw_length(rng: random.Random) -> int:
    lengths = [length for length, _ in LENGTH_WEIGHTS]
    weights = [weight for _, weight in LENGTH_WEIGHTS]
    return rng.choices(lengths, weights=weights, k=1)[0]


def generate(
    n_train: int,
    n_test: int,
    seed: int,
    registry: ActionRegistry | None = None,
    templates: dict[str, Callable[[random.Random], tuple[str, ActionNode]]] | None = None,
) -> tuple[Corpus, Corpus]:
    """Generate disjoint train and test corpora from one seed.

    No pair (utterance and logical form both equal) appears twice across
    the two splits.  Each split of seven or more pairs starts with one
    mission of every length 1..7 so all lengths are always represented;
    the rest follow LENGTH_WEIGHTS.  Every generated logical form
    strict-validates against the registry.  Raises
    :class:`InsufficientSpace` when the templates cannot fill the request
    with distinct pairs.
    """
    rng = random.Random(seed)
    registry = builtin_registry() if registry is None else registry
    templates = default_templates() if templates is None else templates
    names = tuple(templates)
    seen: set[tuple[str, str]] = set()

    def fill(count: int, split: str) -> Corpus:
        pairs = []
        for slot in range(count):
            length = slot + 1 if count >= 7 and slot < 7 else _draw_length(rng)
            stalls = 0
            while True:
                pair = _build_pair(rng, length, templates, names)
                key = (pair.utterance, pair.logical_form)
                if key not in seen:
                    break
                stalls += 1
                if stalls >= _STALL_LIMIT:
                    raise InsufficientSpace(n_train + n_test, len(seen))
            seen.add(key)
            problems = validate(parse_logical_form(pair.logical_form), registry, "strict")
            errors = [d for d in problems if d.severity == "error"]
            if errors:
                raise ValueError(f"template produced invalid form {pair.logical_form!r}: {errors[0]}")
            pairs.append(pair)
        return Corpus(tuple(pairs), split)

    return fill(n_train, "train"), fill(n_test, "test")


def write_tsv(corpus: Corpus) -> str:
    """Serialize to utterance<TAB>logicalform lines, trailing newline."""
    return "".join(f"{pair.utterance}\t{pair.logical_form}\n" for pair in corpus.pairs)


def read_tsv(text: str, split: str = "train") -> Corpus:
    """Parse corpus text; the exact inverse of :func:`write_tsv`.

    Raises :class:`FormatError` with a 1-based line number for a line
    whose tab count is not exactly one or whose fields are empty.
    """
    pairs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        tabs = line.count("\t")
        if tabs != 1:
            raise FormatError(lineno, f"expected exactly one tab, found {tabs}")
        utterance, logical_form = line.split("\t")
        if not utterance or not logical_form:
            raise FormatError(lineno, "empty field")
        pairs.append(CorpusPair(utterance, logical_form))
    return Corpus(tuple(pairs), split)


def vocab_stats(corpus: Corpus) -> tuple[int, int]:
    """Distinct whitespace-token counts: (utterance side, logical-form side)."""
    input_vocab: set[str] = set()
    output_vocab: set[str] = set()
    for pair in corpus.pairs:
        input_vocab.update(pair.utterance.split())
        output_vocab.update(pair.logical_form.split())
    return len(input_vocab), len(output_vocab)
