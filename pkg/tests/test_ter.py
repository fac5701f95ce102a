"""Translation edit rate: shift search behaviour and oracle agreement."""

import random

import pytest

import oracles
from loreseval.metrics import EmptyReference, TokenizerConfig, ter, ter_statistics

WS = TokenizerConfig(scheme="whitespace-only")


def random_tokens(rng, max_len=8):
    return [rng.choice("abcde") for _ in range(rng.randint(1, max_len))]


class TestTer:
    def test_identity(self):
        assert ter("an madra mor", "an madra mor") == 0.0

    def test_single_shift(self):
        # one move fixes everything: 1 edit over 2 reference tokens
        assert ter("b a", "a b") == 0.5

    def test_single_substitution(self):
        assert ter("a b c", "a x c") == pytest.approx(1 / 3)

    def test_no_beneficial_shift_equals_levenshtein(self):
        hyp, ref = "a b c d", "a b x d"
        stats = ter_statistics(hyp, ref, WS)
        assert stats.shifts == 0
        assert stats.edits == oracles.levenshtein(hyp.split(), ref.split())

    def test_empty_reference(self):
        with pytest.raises(EmptyReference):
            ter("rud eigin", "   ")

    def test_empty_hypothesis_means_all_insertions(self):
        # tokenizer yields nothing for punctuationless whitespace: force via WS
        assert ter("x", "a b c d", WS) == 1.0

    def test_can_exceed_one(self):
        assert ter("a b c d e f", "x", WS) > 1.0

    def test_shift_of_longer_span(self):
        # moving the two-token block "c d" to the front beats editing
        stats = ter_statistics("c d a b", "a b c d", WS)
        assert stats.shifts >= 1
        assert stats.edits < oracles.levenshtein(list("cdab"), list("abcd"))

    def test_shifts_never_hurt(self):
        rng = random.Random(99)
        for _ in range(40):
            hyp = random_tokens(rng)
            ref = random_tokens(rng)
            stats = ter_statistics(" ".join(hyp), " ".join(ref), WS)
            assert stats.edits <= oracles.levenshtein(hyp, ref)

    def test_matches_exhaustive_greedy_oracle(self):
        rng = random.Random(123)
        for _ in range(30):
            hyp = random_tokens(rng)
            ref = random_tokens(rng)
            expected_edits, expected_shifts = oracles.ter_edits(hyp, ref)
            stats = ter_statistics(" ".join(hyp), " ".join(ref), WS)
            assert (stats.edits, stats.shifts) == (expected_edits, expected_shifts)

    def test_fraction_scale(self):
        # a half-wrong hypothesis reports 0.5, not 50
        assert ter("a x", "a b", WS) == 0.5
