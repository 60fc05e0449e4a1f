"""Surprisal-based targeted syntactic evaluation for language-model scorers."""

from .engine import (
    ComparisonTable,
    ItemResult,
    ModifierPair,
    RunReport,
    SuiteResult,
    compare_runs,
    evaluate_item,
    evaluate_run,
    evaluate_suite,
)
from .predictions import (
    SurprisalTable,
    evaluate_prediction,
    parse_prediction,
    referenced_targets,
)
from .scoring import (
    NgramModel,
    NgramScorer,
    ScoredToken,
    ScorerDescriptor,
    UniformScorer,
    ngram_prob,
    sequential_mlm_score,
    train_ngram,
)
from .suites import (
    Circuit,
    Item,
    RegionedSentence,
    TestSuite,
    ValidationReport,
    load_suite,
    render_sentence,
    serialize_suite,
    validate_suite,
)

__version__ = "0.1.0"
