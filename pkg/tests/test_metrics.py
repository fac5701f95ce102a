"""Tokenizer, BLEU, ChrF, unigram F1, evaluate_all and comparison math."""

import random

import pytest

import oracles
from loreseval.metrics import (
    BleuConfig,
    ChrfConfig,
    EmptyInput,
    LengthMismatch,
    TokenizerConfig,
    ZeroBaseline,
    bleu_corpus,
    bleu_sentence,
    chrf,
    chrf_corpus,
    evaluate_all,
    relative_improvement,
    tokenize,
    unigram_f1,
)

from conftest import random_toy_corpus

WS = TokenizerConfig(scheme="whitespace-only")


class TestTokenize:
    def test_whitespace_only(self):
        assert tokenize("how COVID-19 spreads", WS) == ["how", "COVID-19", "spreads"]

    def test_comma_detached(self):
        assert tokenize("spreads, and") == ["spreads", ",", "and"]

    def test_parentheses(self):
        assert tokenize("Scheme (EWSS) is") == ["Scheme", "(", "EWSS", ")", "is"]

    def test_hyphen_split(self):
        assert tokenize("COVID-19") == ["COVID", "-", "19"]

    def test_whitespace_runs_collapse(self):
        assert tokenize("a   b\t c") == ["a", "b", "c"]
        assert tokenize("a   b\t c", WS) == ["a", "b", "c"]

    def test_lowercase(self):
        assert tokenize("Hello World", TokenizerConfig(lowercase=True)) == ["hello", "world"]

    def test_empty(self):
        assert tokenize("") == []

    def test_punctuation_run(self):
        assert tokenize("wait...") == ["wait", ".", ".", "."]

    def test_bad_scheme(self):
        with pytest.raises(ValueError):
            TokenizerConfig(scheme="nonsense")


class TestBleuCorpus:
    def test_identity(self):
        refs = ["the cat sat on the mat", "a quick brown fox jumps over it"]
        assert bleu_corpus(refs, refs) == pytest.approx(100.0)

    def test_hand_computed_example(self):
        # precisions 5/6, 3/5, 2/4, 1/3 and no brevity penalty
        score = bleu_corpus(["the cat sat on the mat"], ["the cat sat on a mat"])
        assert score == pytest.approx(53.7, abs=0.1)

    def test_case_insensitive_config(self):
        refs = ["the cat sat on the mat"]
        hyps = ["THE CAT SAT ON THE MAT"]
        assert bleu_corpus(hyps, refs, BleuConfig(lowercase=True)) == pytest.approx(100.0)
        assert bleu_corpus(hyps, refs, BleuConfig(lowercase=False)) < 100.0

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            bleu_corpus(["a"], ["a", "b"])

    def test_empty_input(self):
        with pytest.raises(EmptyInput):
            bleu_corpus([], [])

    def test_order_invariance(self):
        rng = random.Random(5)
        hyps, refs = random_toy_corpus(rng, max_pairs=8)
        baseline = bleu_corpus(hyps, refs)
        order = list(range(len(hyps)))
        rng.shuffle(order)
        shuffled = bleu_corpus([hyps[i] for i in order], [refs[i] for i in order])
        assert shuffled == baseline

    def test_zero_pooled_precision_gives_zero(self):
        assert bleu_corpus(["x y z"], ["a b c"]) == 0.0

    def test_matches_oracle_on_random_corpora(self):
        rng = random.Random(77)
        for _ in range(10):
            hyps, refs = random_toy_corpus(rng)
            expected = oracles.corpus_bleu(
                [h.split() for h in hyps], [r.split() for r in refs]
            )
            assert bleu_corpus(hyps, refs) == pytest.approx(expected, abs=1e-9)


class TestBleuSentence:
    def test_identity(self):
        assert bleu_sentence("madra maith", "madra maith") == pytest.approx(100.0)

    def test_disjoint_unsmoothed_is_zero(self):
        config = BleuConfig(smoothing="none")
        assert bleu_sentence("x y z", "a b c", config) == 0.0

    def test_perfect_match_sample(self):
        # the short-sentence perfect match reported for the tuned system
        text = "Conas a scaipeann COVID-19 agus na comharthaí a bhaineann leis"
        assert bleu_sentence(text, text) == pytest.approx(100.0)

    def test_smoothing_keeps_partial_credit(self):
        # unigram overlap only: zero 2-gram count is smoothed, not zeroed
        score = bleu_sentence("a x b y", "a b c d", BleuConfig(smoothing="add-one-on-zero"))
        assert 0.0 < score < 100.0

    def test_empty_input(self):
        with pytest.raises(EmptyInput):
            bleu_sentence(" ", "a b")


class TestChrf:
    def test_identity(self):
        assert chrf("scéim", "scéim") == pytest.approx(1.0)

    def test_disjoint(self):
        assert chrf("abc", "xyz") == 0.0

    def test_hand_unigram_example(self):
        config = ChrfConfig(char_order=1, beta=1.0)
        assert chrf("abc", "abd", config) == pytest.approx(2 / 3)

    def test_whitespace_invariance(self):
        config = ChrfConfig(strip_whitespace=True)
        a = chrf("an madra mor", "an  madra  mor", config)
        assert a == pytest.approx(1.0)
        b = chrf("anmadramor", "an madra mor", config)
        assert b == pytest.approx(1.0)

    def test_beta_weighs_recall(self):
        # hypothesis misses half the reference: recall-heavy beta hurts more
        f1 = chrf("abcd", "abcdefgh", ChrfConfig(beta=1.0))
        f3 = chrf("abcd", "abcdefgh", ChrfConfig(beta=3.0))
        assert f3 < f1

    def test_empty_input(self):
        with pytest.raises(EmptyInput):
            chrf("", "abc")

    def test_corpus_pooling_matches_oracle(self):
        rng = random.Random(31)
        for _ in range(10):
            hyps, refs = random_toy_corpus(rng)
            expected = oracles.corpus_chrf(hyps, refs)
            assert chrf_corpus(hyps, refs) == pytest.approx(expected, abs=1e-9)


class TestUnigramF1:
    def test_identity(self):
        assert unigram_f1("an madra", "an madra") == pytest.approx(1.0)

    def test_hand_example(self):
        assert unigram_f1("a b c", "a b d") == pytest.approx(2 / 3)

    def test_disjoint(self):
        assert unigram_f1("x y z", "a b c") == 0.0

    def test_clipping(self):
        # repeated hypothesis token only matches as often as the reference has it
        assert unigram_f1("a a a", "a b c", WS) == pytest.approx(1 / 3)

    def test_matches_oracle(self):
        rng = random.Random(13)
        for _ in range(20):
            hyp_tokens = [rng.choice("abc") for _ in range(rng.randint(1, 6))]
            ref_tokens = [rng.choice("abc") for _ in range(rng.randint(1, 6))]
            got = unigram_f1(" ".join(hyp_tokens), " ".join(ref_tokens), WS)
            assert got == pytest.approx(oracles.sentence_f1(hyp_tokens, ref_tokens))


class TestRelativeImprovement:
    @pytest.mark.parametrize(
        "new,baseline,integer",
        [(41.2, 29.7, 39), (75.1, 47.8, 57), (26.4, 19.8, 33), (52.6, 42.7, 23)],
    )
    def test_published_caption_values(self, new, baseline, integer):
        assert round(relative_improvement(new, baseline)) == integer

    @pytest.mark.parametrize(
        "new,baseline,one_decimal", [(41.2, 38.7, 6.5), (26.4, 25.9, 1.9)]
    )
    def test_one_decimal_values(self, new, baseline, one_decimal):
        assert round(relative_improvement(new, baseline), 1) == one_decimal

    def test_sign_preserved(self):
        assert relative_improvement(20.0, 40.0) == pytest.approx(-50.0)

    def test_zero_baseline(self):
        with pytest.raises(ZeroBaseline):
            relative_improvement(10.0, 0.0)


class TestEvaluateAll:
    def test_identical_corpora(self):
        refs = ["the cat sat on the mat", "dogs bark at the moon tonight"]
        report = evaluate_all(refs, refs)
        assert report.bleu == pytest.approx(100.0)
        assert report.ter == 0.0
        assert report.chrf == pytest.approx(1.0)
        assert report.f1 == pytest.approx(1.0)
        assert report.n_segments == 2

    def test_single_pair_equals_sentence_ops(self):
        hyp = "the cat sat on the mat"
        ref = "the cat sat on a mat"
        report = evaluate_all([hyp], [ref])
        assert report.bleu == pytest.approx(bleu_corpus([hyp], [ref]))
        assert report.chrf == pytest.approx(chrf(hyp, ref))
        assert report.f1 == pytest.approx(unigram_f1(hyp, ref))

    def test_toy_corpus_matches_oracles(self):
        rng = random.Random(2024)
        hyps, refs = random_toy_corpus(rng, max_pairs=5)
        report = evaluate_all(hyps, refs)
        hyp_tokens = [h.split() for h in hyps]
        ref_tokens = [r.split() for r in refs]
        assert report.bleu == pytest.approx(oracles.corpus_bleu(hyp_tokens, ref_tokens), abs=1e-9)
        assert report.ter == pytest.approx(oracles.corpus_ter(hyp_tokens, ref_tokens), abs=1e-9)
        assert report.chrf == pytest.approx(oracles.corpus_chrf(hyps, refs), abs=1e-9)
        mean_f1 = sum(oracles.sentence_f1(h, r) for h, r in zip(hyp_tokens, ref_tokens)) / len(hyps)
        assert report.f1 == pytest.approx(mean_f1, abs=1e-9)

    def test_report_carries_configs(self):
        report = evaluate_all(["a b"], ["a b"], bleu_config=BleuConfig(lowercase=True))
        payload = report.to_dict()
        assert payload["configs"]["bleu"]["lowercase"] is True
        assert set(payload) == {"bleu", "ter", "chrf", "f1", "n_segments", "configs"}

    def test_bounds(self):
        rng = random.Random(404)
        for _ in range(10):
            hyps, refs = random_toy_corpus(rng)
            report = evaluate_all(hyps, refs)
            assert 0.0 <= report.bleu <= 100.0
            assert report.ter >= 0.0
            assert 0.0 <= report.chrf <= 1.0
            assert 0.0 <= report.f1 <= 1.0
