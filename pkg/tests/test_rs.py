"""
Tests for the rs module

The [255,223,33] code over GF(2^8): generator structure, the codeword
kernel, single-error syndromes, agreement of the two strategies and the
exact multiplication ledgers.
"""

import dataclasses

import numpy as np
import pytest

from frobeval.gf import add, mul, power, is_in_subfield
from frobeval.poly import OpCount, horner_eval
from frobeval.rs import (
    build_tables, code_split, check_split, encode, prepare_points, random_message, random_word,
    rs_new, syndromes_auto, syndromes_batch, syndromes_horner, words_from_bytes
)
from frobeval.utils import CodeError, InputError


@pytest.fixture(scope="module")
def code():
    return rs_new()


@pytest.fixture(scope="module")
def tables(code):
    return build_tables(code)


@pytest.fixture(scope="module")
def split(code):
    return code_split(code.field)


class TestCodeStructure:
    """Test rs_new and encode."""

    def test_parameters(self, code):
        """n = 255, k = 223, 32 roots."""
        assert (code.n_code, code.k_code, code.t2) == (255, 223, 32)
        assert code.field.order == 256

    def test_alpha_is_x(self, code):
        """x is primitive for x^8+x^5+x^3+x+1."""
        assert code.alpha.value == 2

    def test_generator_roots(self, code):
        """deg g = 32, g(alpha^i) = 0 for i = 1..32, g(alpha^33) != 0."""
        g = code.generator
        assert g.degree() == 32
        assert g.coeffs[-1] == code.field.one
        for i in range(1, 33):
            assert horner_eval(g, power(code.alpha, i)).is_zero()
        assert not horner_eval(g, power(code.alpha, 33)).is_zero()

    def test_systematic(self, code):
        """The message occupies the top 223 coefficients."""
        message = random_message(code, seed=1)
        codeword = encode(message, code)
        assert len(codeword) == 255
        assert [c.value for c in codeword[32:]] == message

    def test_message_length(self, code):
        with pytest.raises(CodeError):
            encode([1, 2, 3], code)


class TestSyndromeValues:
    """Syndrome values for both strategies."""

    @pytest.mark.slow
    def test_codewords_have_zero_syndromes(self, code, tables, split):
        """Both strategies give 32 zeros on 100 seeded codewords."""
        for seed in range(100):
            codeword = encode(random_message(code, seed=seed), code)
            assert syndromes_horner(codeword, code).is_zero()
            assert syndromes_auto(codeword, code, tables, split).is_zero()

    def test_zero_word(self, code, tables, split):
        """The all-zero word is a codeword."""
        word = bytes(255)
        assert syndromes_auto(word, code, tables, split).hex() == ["00"] * 32

    @pytest.mark.parametrize("position, value", [(0, 1), (17, 0x5A), (100, 0xFF), (254, 3)])
    def test_single_error(self, code, tables, split, position, value):
        """An error e at position i gives S_j = e * alpha^(i*j)."""
        word = bytearray(255)
        word[position] = value
        e = code.field.element(value)
        expected = tuple(mul(e, power(code.alpha, position * j)) for j in range(1, 33))
        assert syndromes_horner(bytes(word), code).values == expected
        assert syndromes_auto(bytes(word), code, tables, split).values == expected

    @pytest.mark.parametrize("seed", [3, 11, 42])
    def test_error_on_codeword(self, code, tables, split, seed):
        """Syndromes of codeword + error equal those of the error alone, all 32, both strategies."""
        rng = np.random.default_rng(seed)
        codeword = encode(random_message(code, seed=seed), code)
        error = [code.field.zero] * 255
        for position in rng.choice(255, size=3, replace=False):
            error[int(position)] = code.field.element(int(rng.integers(1, 256)))
        corrupted = [add(c, e) for c, e in zip(codeword, error)]
        horner_error = syndromes_horner(error, code).values
        auto_error = syndromes_auto(error, code, tables, split).values
        assert horner_error == auto_error
        assert len(horner_error) == 32
        assert syndromes_horner(corrupted, code).values == horner_error
        assert syndromes_auto(corrupted, code, tables, split).values == auto_error

    @pytest.mark.slow
    def test_strategies_agree(self, code):
        """Horner and auto agree on 100 random words."""
        words = [random_word(seed) for seed in range(100)]
        horner = syndromes_batch(words, "horner", code)
        auto = syndromes_batch(words, "auto", code)
        for h, a in zip(horner.sets, auto.sets):
            assert h.values == a.values

    def test_subfield_arithmetic_same_values(self, code, tables, split):
        """Pair arithmetic over GF(16) gives the same syndromes."""
        for seed in range(5):
            word = random_word(seed + 500)
            field_mode = syndromes_auto(word, code, tables, split)
            pair_mode = syndromes_auto(word, code, tables, split, subfield_arith=True)
            assert pair_mode.values == field_mode.values
            assert pair_mode.arithmetic == "subfield"


class TestLedgers:
    """Exact operation counts."""

    def test_table_build(self, tables):
        """253 powers of alpha and 255 * 14 = 3570 mixed products."""
        assert tables.build_ops.mul == 253 + 3570
        assert tables.build_ops.paper_mult_equiv == 3823
        assert len(tables.mixed) == 255
        assert all(len(row) == 15 for row in tables.mixed)

    def test_mixed_table_entries(self, code, tables):
        """mixed[i][j] = alpha^i * beta^j."""
        beta = power(code.alpha, 17)
        for i in (0, 1, 77, 254):
            for j in (0, 1, 14):
                assert tables.mixed[i][j] == mul(power(code.alpha, i), power(beta, j))

    def test_auto_per_word(self, code, tables, split):
        """91 per syndrome, 2912 per word: 60 squarings and 31 multiplications per point."""
        result = syndromes_auto(random_word(7), code, tables, split)
        assert result.ops.pth_pow == 60 * 32
        assert result.ops.mul == 31 * 32
        assert result.ops.paper_mult_equiv == 2912
        assert result.ops.frob == 0

    def test_horner_per_word(self, code):
        """31 + 32 * 254 = 8159."""
        result = syndromes_horner(random_word(8), code)
        assert result.ops == OpCount(mul=8159, add=32 * 254)
        assert result.ops.paper_mult_equiv == 8159

    def test_prepare_points(self, code):
        """alpha^1..alpha^32 for 31 multiplications."""
        ops = OpCount()
        points = prepare_points(code, ops)
        assert points == [power(code.alpha, j) for j in range(1, 33)]
        assert ops.mul == 31

    def test_single_word_total(self, code):
        """3823 + 2912 = 6735 against 8159."""
        word = [random_word(9)]
        assert syndromes_batch(word, "auto", code).ops.paper_mult_equiv == 6735
        assert syndromes_batch(word, "horner", code).ops.paper_mult_equiv == 8159

    @pytest.mark.parametrize("K", [1, 2, 10])
    def test_batch_amortization(self, code, K):
        """3823 + 2912K against 31 + 8128K."""
        words = [random_word(seed) for seed in range(K)]
        auto = syndromes_batch(words, "auto", code)
        horner = syndromes_batch(words, "horner", code)
        assert auto.precompute_ops.paper_mult_equiv == 3823
        assert auto.ops.paper_mult_equiv == 3823 + 2912 * K
        assert horner.precompute_ops.paper_mult_equiv == 31
        assert horner.ops.paper_mult_equiv == 31 + 8128 * K
        if K == 10:
            assert (auto.ops.paper_mult_equiv, horner.ops.paper_mult_equiv) == (32943, 81311)

    def test_counter_receives_ledger(self, code, tables, split):
        counter = OpCount(add=5)
        result = syndromes_auto(random_word(10), code, tables, split, counter)
        assert counter == result.ops + OpCount(add=5)


class TestSplit:
    """The gamma split used by the auto strategy."""

    def test_gamma_certificate(self, code, split):
        """gamma^2 + gamma = alpha^17 and gamma is not in GF(16)."""
        beta = power(code.alpha, 17)
        assert is_in_subfield(beta, 4)
        assert add(mul(split.gamma, split.gamma), split.gamma) == beta
        assert not is_in_subfield(split.gamma, 4)

    def test_wrong_gamma_rejected(self, code, tables, split):
        """A split whose gamma does not match beta is refused."""
        bad = dataclasses.replace(split, gamma=code.field.one)
        with pytest.raises(CodeError):
            check_split(bad, tables)
        with pytest.raises(CodeError):
            syndromes_auto(bytes(255), code, tables, bad)


class TestBatchAndInput:
    """Batches, word files and error paths."""

    def test_workers_keep_order(self, code):
        """Threaded batches return sets in input order."""
        words = [random_word(seed + 50) for seed in range(6)]
        serial = syndromes_batch(words, "auto", code)
        threaded = syndromes_batch(words, "auto", code, workers=4)
        assert [s.values for s in threaded.sets] == [s.values for s in serial.sets]
        assert threaded.ops == serial.ops

    def test_empty_batch(self, code):
        with pytest.raises(CodeError):
            syndromes_batch([], "auto", code)

    def test_unknown_strategy(self, code):
        with pytest.raises(CodeError):
            syndromes_batch([bytes(255)], "fft", code)

    def test_tables_missing(self, code, split):
        """Auto evaluation needs the precomputed tables."""
        with pytest.raises(CodeError):
            syndromes_auto(bytes(255), code, None, split)

    def test_wrong_length(self, code, tables, split):
        """Received words must have 255 symbols."""
        with pytest.raises(CodeError):
            syndromes_horner(bytes(254), code)
        with pytest.raises(CodeError):
            syndromes_auto(bytes(256), code, tables, split)

    def test_words_from_bytes(self):
        """Concatenated 255-byte records split in order."""
        data = bytes(range(255)) + bytes(255)
        words = words_from_bytes(data)
        assert len(words) == 2
        assert words[0] == bytes(range(255))
        with pytest.raises(InputError):
            words_from_bytes(data + b"\x01")

    def test_random_word_deterministic(self):
        """Same seed, same word."""
        assert random_word(4) == random_word(4)
        assert random_word(np.random.default_rng(4)) == random_word(4)
        assert len(random_word(4)) == 255
