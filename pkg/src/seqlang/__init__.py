"""seqlang: a small compiler from natural-language commands to robot missions.

The pipeline has three representations and this package covers every hop:

    utterance  --frontend-->  logical form  --btxml-->  BehaviorTree XML
                                 |                            |
                              registry                   interpreter
                           (validation)               (mock execution)

plus a seeded corpus generator (:mod:`seqlang.dataset`), an exact-match
evaluation harness (:mod:`seqlang.evaluation`), and a command-line entry
point (:mod:`seqlang.cli`).
"""

from seqlang.logical_form import (
    ActionNode,
    LogicalFormError,
    ParamNode,
    SequenceNode,
    parse_logical_form,
    render,
)
from seqlang.registry import ActionRegistry, Diagnostic, builtin_registry, load_registry, validate
from seqlang.btxml import emit, parse_bt_xml
from seqlang.frontend import Lexicon, default_lexicon, load_lexicon, normalize, translate
from seqlang.dataset import Corpus, CorpusPair, generate, read_tsv, vocab_stats, write_tsv
from seqlang.evaluation import EvalReport, evaluate
from seqlang.interpreter import MockPlant, TraceEntry, run

__version__ = "0.1.0"
