"""Braid engine tests: parsing, group laws, normal form, family words.

The rewriting tests apply random sequences of relation moves (free pair
insertion/deletion, adjacent-generator rotation, far commutation) and
check that the Garside normal form never changes.
"""

import random

import pytest
from hypothesis import given, settings, strategies as st

from knotcert import (
    BraidWord,
    braids_equal,
    contains_full_twist,
    exponent_sum,
    full_twist,
    normal_form,
    parse_braid,
    permutation_of,
    quotient_braid_even,
    quotient_braid_odd,
    torus_braid,
)
from knotcert.braid import PermutationBraid


def legal_rewrite(rng: random.Random, letters: list[int], strands: int,
                  max_length: int = 60) -> list[int]:
    """Apply one relation-preserving move; fall back to pair insertion."""
    moves = rng.sample(("insert", "delete", "rotate", "commute"), 4)
    for move in moves:
        if move == "insert" and len(letters) + 2 <= max_length:
            e = rng.choice(range(1, strands))
            pos = rng.randint(0, len(letters))
            return letters[:pos] + [e, -e] + letters[pos:]
        if move == "delete":
            spots = [i for i in range(len(letters) - 1)
                     if letters[i] == -letters[i + 1]]
            if spots:
                i = rng.choice(spots)
                return letters[:i] + letters[i + 2:]
        if move == "rotate":
            spots = [i for i in range(len(letters) - 2)
                     if letters[i] == letters[i + 2]
                     and letters[i] * letters[i + 1] > 0
                     and abs(abs(letters[i]) - abs(letters[i + 1])) == 1]
            if spots:
                i = rng.choice(spots)
                a, b = letters[i], letters[i + 1]
                return letters[:i] + [b, a, b] + letters[i + 3:]
        if move == "commute":
            spots = [i for i in range(len(letters) - 1)
                     if abs(abs(letters[i]) - abs(letters[i + 1])) >= 2]
            if spots:
                i = rng.choice(spots)
                a, b = letters[i], letters[i + 1]
                return letters[:i] + [b, a] + letters[i + 2:]
    e = rng.choice(range(1, strands))
    return letters + [e, -e]


class TestParsing:
    def test_round_trip(self, random_word):
        for _ in range(20):
            w = random_word(strands=4, length=12)
            assert parse_braid(str(w), 4) == w

    def test_rejects_non_integer_token(self):
        with pytest.raises(ValueError, match="'x'"):
            parse_braid("1 x 2", 3)

    def test_rejects_zero(self):
        with pytest.raises(ValueError, match="0"):
            parse_braid("1 0", 3)

    def test_rejects_out_of_range_generator(self):
        with pytest.raises(ValueError, match="3"):
            parse_braid("1 3", 3)

    @given(st.lists(st.integers(min_value=-3, max_value=3).filter(lambda e: e != 0),
                    max_size=20))
    def test_parse_inverts_str(self, letters):
        w = BraidWord(4, tuple(letters))
        assert parse_braid(str(w), 4) == w


class TestWordLaws:
    def test_strand_count_must_be_positive(self):
        with pytest.raises(ValueError):
            BraidWord(0, ())

    def test_product_requires_matching_strands(self):
        with pytest.raises(ValueError):
            BraidWord(3, (1,)) * BraidWord(4, (1,))

    def test_inverse_reverses_and_negates(self):
        w = BraidWord(4, (1, -2, 3))
        assert w.inverse().letters == (-3, 2, -1)
        assert (w * w.inverse()).strands == 4

    def test_power_unrolls(self):
        w = BraidWord(3, (1, 2))
        assert (w ** 3).letters == (1, 2) * 3
        assert (w ** -1) == w.inverse()

    def test_permutation_is_homomorphism(self, random_word):
        for _ in range(30):
            u = random_word(strands=4, length=8)
            v = random_word(strands=4, length=8)
            assert permutation_of(u * v) == permutation_of(u).then(permutation_of(v))

    def test_exponent_sum_additive(self, random_word):
        for _ in range(20):
            u = random_word(strands=4, length=10)
            v = random_word(strands=4, length=10)
            assert exponent_sum(u * v) == exponent_sum(u) + exponent_sum(v)

    def test_exponent_sum_conjugation_invariant(self, random_word):
        for _ in range(20):
            w = random_word(strands=4, length=10)
            g = random_word(strands=4, length=6)
            assert exponent_sum(g * w * g.inverse()) == exponent_sum(w)


class TestNormalForm:
    def test_identity_word(self):
        nf = normal_form(BraidWord(4, ()))
        assert nf.infimum == 0
        assert nf.canonical_length == 0

    def test_half_twist_squared_is_delta_power_two(self):
        nf = normal_form(full_twist(4))
        assert nf.infimum == 2
        assert nf.canonical_length == 0

    def test_to_word_round_trips(self, random_word):
        for _ in range(15):
            w = random_word(strands=4, length=12)
            nf = normal_form(w)
            assert braids_equal(nf.to_word(), w)
            assert normal_form(nf.to_word()) == nf

    def test_free_reduction(self, random_word):
        for _ in range(10):
            w = random_word(strands=4, length=10)
            assert braids_equal(w * w.inverse(), BraidWord(4, ()))

    def test_invariant_under_random_rewriting(self, rng):
        for strands in (2, 3, 4):
            start = [rng.choice(range(1, strands)) * rng.choice((1, -1))
                     for _ in range(12)]
            reference = normal_form(BraidWord(strands, tuple(start)))
            letters = list(start)
            for _ in range(60):
                letters = legal_rewrite(rng, letters, strands)
                assert normal_form(BraidWord(strands, tuple(letters))) == reference

    def test_factors_are_left_weighted_permutation_braids(self, random_word):
        for _ in range(10):
            nf = normal_form(random_word(strands=4, length=14))
            for f in nf.factors:
                assert not f.is_identity()
                assert not f.is_half_twist()
            for a, b in zip(nf.factors, nf.factors[1:]):
                # left-weighted: the finish set of a must cover the start set of b
                assert b.start_indices() <= a.finish_indices()


class TestFullTwist:
    def test_central(self, random_word):
        for strands in (2, 3, 4):
            delta2 = full_twist(strands)
            for _ in range(8):
                w = random_word(strands=strands, length=10)
                assert braids_equal(delta2 * w, w * delta2)

    def test_containment_anchors(self):
        assert contains_full_twist(BraidWord(2, (1, 1, 1)))
        assert not contains_full_twist(BraidWord(2, (1,)))
        assert contains_full_twist(full_twist(4))
        assert not contains_full_twist(torus_braid(4, 2))

    def test_rejects_non_positive_words(self):
        with pytest.raises(ValueError):
            contains_full_twist(BraidWord(3, (1, -2)))

    def test_multiplying_by_full_twist_sets_containment(self, random_word):
        for _ in range(8):
            w = random_word(strands=4, length=10, positive=True)
            assert contains_full_twist(full_twist(4) * w)


def delta_form_odd(p: int, q: int, r: int) -> BraidWord:
    block = (2, 3, 1, 2)
    middle = (2, 3, 3, 2)
    tail = 2 * p + 2 * q + r - 4
    return full_twist(4) * BraidWord(4, block * (q - 2) + middle * p + (1,) * tail)


def delta_form_even(n: int, q: int, r: int) -> BraidWord:
    block = (2, 3, 1, 2)
    middle = (2, 3, 3, 2)
    tail = 2 * (2 * n - q) + r - 4
    return full_twist(4) * BraidWord(4, block * (q - 2) + middle * (2 * n) + (1,) * tail)


class TestFamilyWords:
    def test_odd_word_shape(self):
        w = quotient_braid_odd(3, 3, -7)
        assert w.strands == 4
        assert len(w) == 29
        assert w.is_positive

    def test_odd_length_formula(self):
        for (p, q, r) in [(3, 3, 1), (3, 5, -7), (5, 3, 4), (7, 7, 0)]:
            assert len(quotient_braid_odd(p, q, r)) == 6 * p + 6 * q + r

    def test_odd_closure_is_knot_for_odd_r(self):
        for r in (-7, -3, 1, 5):
            perm = permutation_of(quotient_braid_odd(3, 3, r))
            assert perm.cycle_count() == 1

    def test_odd_validation(self):
        with pytest.raises(ValueError):
            quotient_braid_odd(2, 3, 0)
        with pytest.raises(ValueError):
            quotient_braid_odd(3, 1, 0)
        with pytest.raises(ValueError):
            quotient_braid_odd(3, 3, -13)

    def test_even_word_shape(self):
        w = quotient_braid_even(1, 3, 13)
        assert w.strands == 4
        assert len(w) == 31
        assert w.is_positive

    def test_even_closure_is_knot_for_odd_r(self):
        for (n, q) in [(1, 3), (2, 3), (1, 5)]:
            for r in (4 * q - 1, 4 * q + 1):
                perm = permutation_of(quotient_braid_even(n, q, r))
                assert perm.cycle_count() == 1

    def test_even_validation(self):
        with pytest.raises(ValueError):
            quotient_braid_even(0, 3, 13)
        with pytest.raises(ValueError):
            quotient_braid_even(1, 4, 13)
        with pytest.raises(ValueError):
            quotient_braid_even(1, 5, 1)

    def test_odd_equals_full_twist_form(self):
        # sampled here; the full acceptance grid runs in test_acceptance
        for (p, q, r) in [(3, 3, -7), (3, 5, 3), (5, 3, -2), (5, 5, 7)]:
            assert braids_equal(quotient_braid_odd(p, q, r), delta_form_odd(p, q, r))

    def test_even_equals_full_twist_form(self):
        for (n, q, r) in [(1, 3, 11), (1, 3, 13), (2, 5, 19)]:
            assert braids_equal(quotient_braid_even(n, q, r), delta_form_even(n, q, r))

    def test_family_words_contain_full_twist(self):
        assert contains_full_twist(quotient_braid_odd(3, 3, -7))
        assert contains_full_twist(quotient_braid_even(1, 3, 13))

    def test_plain_spelling_hides_the_twist(self):
        # conjugate, not equal: the raw concatenation has infimum < 2
        raw = BraidWord(4, (2, 3, 1, 2) * 3 + (2, 3, 3, 2) * 3 + (1,) * 5)
        family = quotient_braid_odd(3, 3, -7)
        assert not contains_full_twist(raw)
        assert not braids_equal(raw, family)
        assert len(raw) == len(family)
        assert permutation_of(raw) == permutation_of(family)


class TestTorusBraid:
    def test_letters(self):
        assert torus_braid(2, 3).letters == (1, 1, 1)
        assert torus_braid(4, 2).letters == (1, 2, 3, 1, 2, 3)

    def test_validation(self):
        with pytest.raises(ValueError):
            torus_braid(1, 3)
        with pytest.raises(ValueError):
            torus_braid(3, 0)

    def test_closure_component_count_is_gcd(self):
        import math
        for a in (2, 3, 4):
            for b in (1, 2, 3, 4, 6):
                perm = permutation_of(torus_braid(a, b))
                assert perm.cycle_count() == math.gcd(a, b)


class TestPermutationBraid:
    def test_half_twist_is_its_own_flip(self):
        for n in (2, 3, 4, 5):
            assert PermutationBraid.half_twist(n).flip() == PermutationBraid.half_twist(n)

    def test_inverse_round_trip(self, rng):
        for _ in range(10):
            img = list(range(5))
            rng.shuffle(img)
            p = PermutationBraid(tuple(img))
            assert p.then(p.inverse()) == PermutationBraid.identity(5)

    def test_reduced_word_rebuilds(self, rng):
        for _ in range(10):
            img = list(range(5))
            rng.shuffle(img)
            p = PermutationBraid(tuple(img))
            rebuilt = PermutationBraid.identity(5)
            for i in p.reduced_word():
                rebuilt = rebuilt.then(PermutationBraid.transposition(5, i))
            assert rebuilt == p
            assert len(p.reduced_word()) == p.length()
