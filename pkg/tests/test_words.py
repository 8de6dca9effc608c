import math
import random

import pytest
from hypothesis import given, strategies as st

from zeroshear import TurnWord, canonical, geodesic_length, trace
from zeroshear.errors import PeripheralWordError
from zeroshear.words import matrix, reverse_swap


def mat_mul(m, n):
    """Independent 2x2 integer product for oracle values."""
    (a, b, c, d), (e, f, g, h) = m, n
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def mat_of(letters):
    m = (1, 0, 0, 1)
    for ch in letters:
        m = mat_mul(m, (1, 1, 0, 1) if ch == "L" else (1, 0, 1, 1))
    return m


words_strategy = st.text(alphabet="LR", min_size=1, max_size=40)


class TestTrace:
    def test_single_letter_is_parabolic(self):
        assert trace("L") == 2
        assert trace("R") == 2

    def test_powers_of_one_letter_stay_parabolic(self):
        for k in range(1, 40):
            assert trace("L" * k) == 2

    def test_known_systole_word(self):
        assert trace("RL4RL4") == 34

    def test_alternating_word_chebyshev(self):
        # Tr(LR) = 3, and t_{2k} = t_k^2 - 2: t_2 = 7, t_4 = 47
        assert trace("LR") == 3
        assert trace("LRLR") == 7
        assert trace("LRLRLRLR") == 47

    @given(words_strategy)
    def test_matches_independent_matrix_product(self, letters):
        m = mat_of(letters)
        assert matrix(letters) == m
        assert trace(letters) == m[0] + m[3]

    @given(words_strategy, st.integers(0, 39))
    def test_rotation_invariant(self, letters, k):
        k %= len(letters)
        assert trace(letters) == trace(letters[k:] + letters[:k])

    @given(words_strategy)
    def test_reversal_with_swap_invariant(self, letters):
        assert trace(letters) == trace(reverse_swap(letters))

    @given(words_strategy)
    def test_mixed_words_are_hyperbolic(self, letters):
        t = trace(letters)
        if set(letters) == {"L", "R"}:
            assert t >= 3
        else:
            assert t == 2

    @given(words_strategy)
    def test_entries_nondecreasing_under_append(self, letters):
        # justifies pruning the walk search on the running trace
        prev = (1, 0, 0, 1)
        for i in range(1, len(letters) + 1):
            cur = matrix(letters[:i])
            assert all(c >= p >= 0 for c, p in zip(cur, prev))
            prev = cur


class TestSubwordMonotonicity:
    """Tr(w) >= Tr(w_s(1) ... w_s(k)) for ordered disjoint blocks of w and
    any cyclic permutation s; the exact-integer property behind both the
    search pruning and the shortest-curve argument."""

    @staticmethod
    def random_case(rng):
        n = rng.randint(2, 30)
        w = "".join(rng.choice("LR") for _ in range(n))
        k = rng.randint(1, min(4, (n + 1) // 2))
        cuts = sorted(rng.sample(range(n + 1), 2 * k))
        blocks = [w[cuts[2 * i]:cuts[2 * i + 1]] for i in range(k)]
        blocks = [b for b in blocks if b]
        return w, blocks

    def test_thousand_randomized_trials(self):
        rng = random.Random(0xC0FFEE)
        checked = 0
        while checked < 1000:
            w, blocks = self.random_case(rng)
            if not blocks:
                continue
            tw = trace(w)
            for shift in range(len(blocks)):
                rotated = blocks[shift:] + blocks[:shift]
                assert tw >= trace("".join(rotated)), (w, rotated)
            checked += 1

    def test_explicit_case_from_longer_word(self):
        # RL5...RL5 contains RL4RL4 blockwise, so it is at least as long
        assert trace("RL5RL5") >= trace("RL4RL4")
        assert trace("LR4LRRL3") >= trace("LRL")


class TestGeodesicLength:
    def test_trace_34_length(self):
        assert geodesic_length("RL4RL4") == pytest.approx(2 * math.acosh(17.0), abs=1e-12)

    def test_lr(self):
        assert geodesic_length("LR") == pytest.approx(2 * math.acosh(1.5), abs=1e-12)

    def test_peripheral_raises(self):
        with pytest.raises(PeripheralWordError):
            geodesic_length("L6")


class TestCanonical:
    def test_rotations_agree(self):
        base = canonical("RL4RL4")
        s = TurnWord.parse("RL4RL4").letters
        for k in range(len(s)):
            assert canonical(s[k:] + s[:k]) == base

    def test_orientation_reversal_agrees(self):
        assert canonical("LR4LR4") == canonical("RL4RL4")

    def test_simple_rotation(self):
        assert canonical("LLR") == canonical("RLL")

    @given(words_strategy)
    def test_idempotent(self, letters):
        once = canonical(letters)
        assert canonical(once) == once

    @given(words_strategy)
    def test_preserves_trace(self, letters):
        assert trace(canonical(letters)) == trace(letters)


class TestParsingAndFormat:
    def test_exponent_shorthand(self):
        assert TurnWord.parse("RL4RL4").letters == "RLLLLRLLLL"
        assert TurnWord.parse("L10").letters == "L" * 10

    def test_str_round_trip(self):
        for text in ("RLLLLRLLLL", "LR", "L", "RRRL"):
            w = TurnWord(text)
            assert TurnWord.parse(str(w)) == w

    def test_rejects_garbage(self):
        with pytest.raises(ValueError):
            TurnWord("")
        with pytest.raises(ValueError):
            TurnWord("LXR")
        with pytest.raises(ValueError):
            TurnWord.parse("4L")
        with pytest.raises(ValueError):
            TurnWord.parse("L0")
