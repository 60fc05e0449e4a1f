"""Token-to-region assignment and per-region aggregation."""

import math
import random
from fractions import Fraction

import pytest

from syngauntlet.alignment import assign_regions, region_surprisals
from syngauntlet.errors import UnalignableToken
from syngauntlet.scoring import NgramScorer, ScoredToken, UniformScorer, train_ngram, total_surprisal
from syngauntlet.suites import RegionedSentence, render_sentence

from helpers import NgramOracle, simple_tokens


def _tok(text, start, end, bits=1.0):
    return ScoredToken(text, start, end, bits)


REGIONS = [(0, 9), (10, 13), (14, 19)]  # "The girls run fast."


class TestAssignRegions:
    def test_subwords_in_first_region(self):
        tokens = [_tok("The", 0, 3), _tok("gir", 4, 7), _tok("ls", 7, 9)]
        assert assign_regions(REGIONS, tokens) == [1, 1, 1]

    def test_second_region(self):
        assert assign_regions(REGIONS, [_tok("run", 10, 13)]) == [2]

    def test_straddling_token_follows_first_char(self):
        assert assign_regions(REGIONS, [_tok("s run", 8, 13)]) == [1]

    def test_join_space_attaches_to_next_region(self):
        # a tokenizer that carries the leading space with the word
        assert assign_regions(REGIONS, [_tok(" run", 9, 13)]) == [2]

    def test_join_space_skips_gap_region(self):
        sentence = RegionedSentence(("Yo sé lo que tu amigo tiró", "", "al suelo."))
        _, spans = render_sentence(sentence)
        assert assign_regions(spans, [_tok(" al", 26, 29)]) == [3]

    def test_unalignable(self):
        with pytest.raises(UnalignableToken):
            assign_regions(REGIONS, [_tok("x", 25, 26)])


class TestRegionSurprisals:
    def test_uniform_distribution_over_regions(self):
        scorer = UniformScorer(8)
        sentence = RegionedSentence(("The girls", "run", "fast."))
        text, spans = render_sentence(sentence)
        tokens = scorer.score(text)
        table = region_surprisals(assign_regions(spans, tokens), tokens, 3, "c")
        assert table.lookup("c", 1) == 6.0
        assert table.lookup("c", 2) == 3.0
        assert table.lookup("c", 3) == 6.0  # "fast" + "."

    def test_gap_region_is_exactly_zero(self):
        sentence = RegionedSentence(("Yo sé lo que tu amigo tiró", "", "al suelo."))
        text, spans = render_sentence(sentence)
        scorer = UniformScorer(32)
        tokens = scorer.score(text)
        table = region_surprisals(assign_regions(spans, tokens), tokens, 3, "gap")
        assert table.lookup("gap", 2) == 0.0

    def test_conservation_exact_in_rationals(self):
        rng = random.Random(11)
        corpus = [" ".join(rng.choice("abcdef") for _ in range(rng.randint(3, 9)))
                  for _ in range(20)]
        scorer = NgramScorer(train_ngram(corpus, order=2, weights=(0.7, 0.3)))
        sentence = RegionedSentence(("a b c", "d e", "f a b ."))
        text, spans = render_sentence(sentence)
        tokens = scorer.score(text)
        assignment = assign_regions(spans, tokens)
        table = region_surprisals(assignment, tokens, 3, "c")
        exact = {r: Fraction(0) for r in (1, 2, 3)}
        for region, token in zip(assignment, tokens):
            exact[region] += Fraction(token.surprisal_bits)
        # no token lost, duplicated, or misassigned
        assert sum(exact.values()) == sum(Fraction(t.surprisal_bits) for t in tokens)
        # every entry is the correctly rounded region sum
        for (_, region), value in table.items():
            assert value == float(exact[region])
        assert math.isclose(
            math.fsum(v for _, v in table.items()), total_surprisal(tokens), rel_tol=1e-9
        )

    def test_permutation_of_equal_tokens_within_region(self):
        tokens = [_tok("a", 0, 1, 2.5), _tok("b", 2, 3, 2.5), _tok("c", 4, 5, 1.0)]
        swapped = [tokens[1], tokens[0], tokens[2]]
        table = region_surprisals([1, 1, 2], tokens, 2, "c")
        table_swapped = region_surprisals([1, 1, 2], swapped, 2, "c")
        assert table == table_swapped

    def test_single_region_is_sentence_total(self):
        scorer = UniformScorer(10)
        sentence = RegionedSentence(("a b c d",))
        text, spans = render_sentence(sentence)
        tokens = scorer.score(text)
        table = region_surprisals(assign_regions(spans, tokens), tokens, 1, "c")
        assert table.lookup("c", 1) == total_surprisal(tokens)

    def test_matches_brute_force_oracle(self):
        corpus = ["el sol brilla .", "la luna brilla .", "el sol sale ."]
        scorer = NgramScorer(train_ngram(corpus, order=2, weights=(0.7, 0.3)))
        oracle = NgramOracle(corpus, order=2, weights_highest_first=(0.7, 0.3))
        sentence = RegionedSentence(("el sol", "brilla", "."))
        text, spans = render_sentence(sentence)
        tokens = scorer.score(text)
        table = region_surprisals(assign_regions(spans, tokens), tokens, 3, "c")

        # recompute per-region sums directly from exact probabilities and spans
        probs = oracle.sentence_probs(text)
        words = simple_tokens(text)
        expected = {1: 0.0, 2: 0.0, 3: 0.0}
        cursor = 0
        for word, p in zip(words, probs):
            start = text.index(word, cursor)
            cursor = start + len(word)
            region = next(i for i, (s, e) in enumerate(spans, 1) if s <= start < e)
            expected[region] += -math.log2(float(p))
        for region in (1, 2, 3):
            assert abs(table.lookup("c", region) - expected[region]) < 1e-9
