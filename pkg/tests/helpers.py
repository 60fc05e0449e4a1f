"""Shared test doubles and independent oracles.

The n-gram oracle recomputes probabilities from raw counts with exact
rational arithmetic; the mock bigram fill is the in-repo deterministic
fill-service double; the condition-rank scorer is the constructed
"grammaticality oracle" used for end-to-end accuracy checks.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from fractions import Fraction
from typing import Mapping, Sequence

from syngauntlet.scoring import ScoredToken, ScorerDescriptor, TokenSpan, tokenize_with_spans
from syngauntlet.suites import TestSuite, render_sentence

BOS = "<bos>"
UNK = "<unk>"

_WORD_RE = re.compile(r"[^\W_]+|\S", re.UNICODE)


def simple_tokens(text: str) -> list[str]:
    return _WORD_RE.findall(text)


# --- independent count-based n-gram oracle ------------------------------------

class NgramOracle:
    """Brute-force interpolated n-gram probabilities over exact fractions."""

    def __init__(self, sentences: Sequence[str], order: int, weights_highest_first: Sequence[float]):
        self.order = order
        self.lambdas = list(reversed([Fraction(w).limit_denominator(10**12)
                                      for w in weights_highest_first]))
        self.vocab: set[str] = set()
        self.unigram: Counter = Counter()
        self.total = 0
        self.ngram_counts = {k: Counter() for k in range(2, order + 1)}
        self.history_counts = {k: Counter() for k in range(2, order + 1)}
        for sentence in sentences:
            tokens = simple_tokens(sentence)
            self.vocab.update(tokens)
            padded = [BOS] * (order - 1) + tokens
            for i in range(order - 1, len(padded)):
                self.unigram[padded[i]] += 1
                self.total += 1
                for k in range(2, order + 1):
                    gram = tuple(padded[i - k + 1 : i + 1])
                    self.ngram_counts[k][gram] += 1
                    self.history_counts[k][gram[:-1]] += 1
        self.vocab_size = len(self.vocab) + 1  # plus UNK

    def _sym(self, token: str) -> str:
        if token == BOS:
            return BOS
        return token if token in self.vocab else UNK

    def prob(self, history: Sequence[str], token: str) -> Fraction:
        token = self._sym(token) if token != BOS else UNK
        history = [self._sym(h) for h in history][-(self.order - 1):] if self.order > 1 else []
        p = self.lambdas[0] * Fraction(self.unigram.get(token, 0) + 1,
                                       self.total + self.vocab_size)
        for k in range(2, self.order + 1):
            if len(history) < k - 1:
                continue
            h = tuple(history[-(k - 1):])
            denom = self.history_counts[k].get(h, 0)
            if denom == 0:
                continue
            p += self.lambdas[k - 1] * Fraction(self.ngram_counts[k].get((*h, token), 0), denom)
        return p

    def sentence_probs(self, text: str) -> list[Fraction]:
        tokens = simple_tokens(text)
        history = [BOS] * (self.order - 1)
        out = []
        for token in tokens:
            out.append(self.prob(history, token))
            history = (history + [self._sym(token)])[-(self.order - 1):] if self.order > 1 else []
        return out


# --- deterministic mock fill service --------------------------------------------

class MockBigramFill:
    """In-process fill double: P(token at i) depends only on the previous
    revealed token, so the sequential loop must reproduce the chain rule."""

    def __init__(self, transitions: Mapping[str, Mapping[str, float]], bos: str = "<s>"):
        self.bos = bos
        self.transitions = {prev: dict(row) for prev, row in transitions.items()}
        for prev, row in self.transitions.items():
            total = math.fsum(row.values())
            if abs(total - 1.0) > 1e-9:
                raise ValueError(f"row {prev!r} sums to {total!r}")
        self.model_id = "mock-bigram"

    def tokenize(self, text: str) -> list[TokenSpan]:
        return tokenize_with_spans(text)

    def fill_distribution(self, tokens: Sequence[str], position: int) -> Mapping[str, float]:
        prev = tokens[position - 2] if position >= 2 else self.bos
        return self.transitions[prev]

    def chain_surprisal(self, tokens: Sequence[str]) -> float:
        """Direct chain-rule total via an explicit probability product."""
        product = 1.0
        prev = self.bos
        for token in tokens:
            product *= self.transitions[prev][token]
            prev = token
        return -math.log2(product)


def random_transitions(rng, symbols: Sequence[str], bos: str = "<s>") -> dict[str, dict[str, float]]:
    table: dict[str, dict[str, float]] = {}
    for prev in [bos, *symbols]:
        weights = [rng.uniform(0.05, 1.0) for _ in symbols]
        total = math.fsum(weights)
        table[prev] = {s: w / total for s, w in zip(symbols, weights)}
    return table


# --- constructed grammaticality oracle --------------------------------------------

class ConditionRankScorer:
    """Assigns rank(condition) bits per token, keyed by exact rendered text."""

    def __init__(self, suite: TestSuite, ranks: Mapping[str, float], bits_per_rank: float = 1.0):
        self._bits_by_text: dict[str, float] = {}
        for item in suite.items:
            for condition, sentence in item.sentences.items():
                text, _ = render_sentence(sentence)
                bits = ranks[condition] * bits_per_rank
                known = self._bits_by_text.get(text)
                if known is not None and known != bits:
                    raise ValueError(f"text {text!r} maps to two different ranks")
                self._bits_by_text[text] = bits
        self.descriptor = ScorerDescriptor(id="condition-rank-oracle", kind="uniform")

    def score(self, text: str) -> list[ScoredToken]:
        bits = self._bits_by_text[text]
        return [ScoredToken(t.text, t.start, t.end, bits) for t in tokenize_with_spans(text)]

    def sentence_total(self, text: str) -> float:
        return math.fsum(t.surprisal_bits for t in self.score(text))


def inverted_ranks(ranks: Mapping[str, float]) -> dict[str, float]:
    top = max(ranks.values())
    return {condition: top + 1 - rank for condition, rank in ranks.items()}


# rank 1 = designated most acceptable; higher = harder. Chosen so that every
# shipped prediction holds by construction given each suite's region shapes.
ORACLE_RANKS: dict[str, dict[str, float]] = {
    "Basic Subject-Verb Agreement": {
        "match": 1, "person_mismatch": 2, "number_mismatch": 2, "both_mismatch": 3,
    },
    "Subject-Verb Agreement with Subject Relative Clause": {
        "match_sing": 1, "mismatch_sing": 2, "match_plural": 1, "mismatch_plural": 2,
    },
    "Subject-Verb Agreement with Object Relative Clause": {
        "match_sing": 1, "mismatch_sing": 2, "match_plural": 1, "mismatch_plural": 2,
    },
    "Determiner-Noun Agreement": {
        "match": 1, "gender_mismatch": 2, "number_mismatch": 2, "both_mismatch": 3,
    },
    "Adjective-Noun Agreement": {
        "match": 1, "gender_mismatch": 2, "number_mismatch": 2, "both_mismatch": 3,
    },
    "Attribute Agreement": {
        "match": 1, "gender_mismatch": 2, "number_mismatch": 2, "both_mismatch": 3,
    },
    "Attribute Agreement with Object Relative Clause": {
        "match": 1, "gender_mismatch": 2, "number_mismatch": 2, "both_mismatch": 3,
    },
    "Attribute Agreement with Subject Relative Clause": {
        "match": 1, "gender_mismatch": 2, "number_mismatch": 2, "both_mismatch": 3,
    },
    "Predicative Agreement": {
        "match": 1, "gender_mismatch": 2, "number_mismatch": 2, "both_mismatch": 3,
    },
    "Center Embedding": {"plausible": 1, "implausible": 2},
    "Center Embedding with PP Modifier": {"plausible": 1, "implausible": 2},
    "Subordination": {
        "sub_matrix": 1, "no_sub_matrix": 2, "sub_no_matrix": 2, "no_sub_no_matrix": 1,
    },
    "Subordination with Object Relative Clause": {
        "sub_matrix": 1, "no_sub_matrix": 2, "sub_no_matrix": 2, "no_sub_no_matrix": 1,
    },
    "Subordination with Subject Relative Clause": {
        "sub_matrix": 1, "no_sub_matrix": 2, "sub_no_matrix": 2, "no_sub_no_matrix": 1,
    },
    "Basic Filler-Gap Dependencies": {
        "what_gap": 1, "that_gap": 2, "what_nogap": 2, "that_nogap": 1,
    },
    "Filler-Gap Dependencies with Three Sentencial Embeddings": {
        "what_gap": 1, "that_gap": 2, "what_nogap": 2, "that_nogap": 1,
    },
    "Pseudo-Cleft Structures": {
        "np_heavy": 1, "np_light": 2, "vp_light": 1, "vp_heavy": 3,
    },
    "NP/Z Garden Path Effect (Overt Object)": {
        "no_obj_no_comma": 2, "no_obj_comma": 1, "obj_no_comma": 1, "obj_comma": 1,
    },
    "NP/Z Garden Path Effect (Intransitive Verb)": {
        "trans_no_comma": 2, "trans_comma": 1, "intrans_no_comma": 1, "intrans_comma": 1,
    },
    "Negative Polarity Items": {
        "neg_matrix_neg_embed": 1, "neg_matrix_pos_embed": 1,
        "pos_matrix_neg_embed": 2, "pos_matrix_pos_embed": 2,
    },
    "NPIs and Polarity Agreement": {
        "neg_npi": 1, "neg_ppi": 2, "pos_npi": 3, "pos_ppi": 1,
    },
    "Subjunctive Mood and Verbs that Express Feeling": {
        "feel_subj": 1, "feel_ind": 3, "nonfeel_subj": 3, "nonfeel_ind": 1,
    },
    "Subjunctive Mood, Negation and Belief Verbs": {
        "matrix_neg_subj": 1, "matrix_neg_ind": 3, "embed_neg_subj": 3, "embed_neg_ind": 1,
    },
    "Subject-Auxiliary Verb-Main Verb Linearization": {
        "sv_canonical": 1, "vs_postposed": 2, "aux_inverted": 4, "aux_split": 4,
    },
    "Subject-Verb-Object Linearization": {
        "aff_svo": 1, "aff_vos": 2, "int_inverted": 1, "int_straight": 4,
    },
    "Noun-Adjective and Noun-PP Linearization": {
        "adj_post": 1, "adj_pre": 2, "pp_post": 1, "pp_pre": 3,
    },
}


# --- scorer wrappers ----------------------------------------------------------------

class ScaledScorer:
    """Multiplies every token surprisal of an inner scorer by a constant."""

    def __init__(self, inner, factor: float):
        self.inner = inner
        self.factor = factor
        self.descriptor = ScorerDescriptor(
            id=f"{inner.descriptor.id}-x{factor}", kind=inner.descriptor.kind,
        )

    def score(self, text: str) -> list[ScoredToken]:
        return [
            ScoredToken(t.text, t.char_start, t.char_end, t.surprisal_bits * self.factor)
            for t in self.inner.score(text)
        ]

    def sentence_total(self, text: str) -> float:
        return math.fsum(t.surprisal_bits for t in self.score(text))


# --- small suite builders --------------------------------------------------------

def base_suite_doc() -> dict:
    """A minimal valid two-condition document for corruption tests."""
    return {
        "name": "fixture-basic",
        "circuit": "Agreement",
        "language": "es",
        "has_modifier": False,
        "modifier_pair_id": None,
        "region_names": ["prefix", "target"],
        "condition_names": ["match", "mismatch"],
        "predictions": ["(2;match) < (2;mismatch)"],
        "items": [
            {"index": 1, "conditions": {
                "match": {"regions": ["El gato", "duerme"]},
                "mismatch": {"regions": ["El gato", "duermen"]},
            }},
            {"index": 2, "conditions": {
                "match": {"regions": ["La casa", "brilla"]},
                "mismatch": {"regions": ["La casa", "brillan"]},
            }},
            {"index": 3, "conditions": {
                "match": {"regions": ["El perro", "corre"]},
                "mismatch": {"regions": ["El perro", "corren"]},
            }},
        ],
    }


def tie_fixture_doc() -> dict:
    """Compared regions have equal token counts in every condition, so any
    per-token-constant scorer ties and every strict prediction fails."""
    doc = base_suite_doc()
    doc["name"] = "fixture-ties"
    return doc
