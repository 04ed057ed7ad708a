import unittest

from hypothesis import assume, given, settings, strategies as st

from src.errors import BraidWordError, PreconditionError, StrandCountError
from src.free2 import (
    F2Word,
    cyclic_member,
    exponent_pair,
    f2_commutator,
    f2_inv,
    f2_mul,
    f2_pow,
    f2_relabel,
    parse_f2,
    render_f2,
    solve_alpha_coboundary,
    swap_alpha,
)
from src.perms import Permutation

PAIR = (1, 2)
X = F2Word.generator(1, 2)
Y = F2Word.generator(2, 1)


def word(*syllables) -> F2Word:
    return F2Word.from_syllables(PAIR, syllables)


f2_words = st.lists(
    st.tuples(st.sampled_from([(1, 2), (2, 1)]), st.sampled_from([1, -1])),
    max_size=24,
).map(lambda syllables: F2Word.from_syllables(PAIR, syllables))


class TestArithmetic(unittest.TestCase):
    def test_cancellation(self):
        self.assertTrue(f2_mul(X, f2_inv(X)).is_identity())

    def test_no_merge_across_labels(self):
        self.assertEqual(f2_mul(X, Y).syllables, (((1, 2), 1), ((2, 1), 1)))

    def test_hand_reduction(self):
        self.assertEqual(f2_mul(word(((1, 2), 1), ((2, 1), 1)), word(((2, 1), -1), ((1, 2), 1))), f2_pow(X, 2))

    def test_pair_mismatch(self):
        with self.assertRaises(StrandCountError):
            f2_mul(X, F2Word.generator(1, 3))

    def test_unreduced_storage_rejected(self):
        with self.assertRaises(ValueError):
            F2Word(PAIR, (((1, 2), 1), ((1, 2), 1)))

    def test_negative_power(self):
        self.assertEqual(f2_pow(word(((1, 2), 1), ((2, 1), 1)), -2), word(
            ((2, 1), -1), ((1, 2), -1), ((2, 1), -1), ((1, 2), -1)))

    def test_commutator_of_basis_is_nontrivial(self):
        self.assertEqual(f2_commutator(X, Y).letter_length, 4)

    def test_exponent_pair(self):
        self.assertEqual(exponent_pair(word(((1, 2), 2), ((2, 1), -1))), (2, -1))
        self.assertEqual(exponent_pair(F2Word.identity(PAIR)), (0, 0))
        self.assertEqual(exponent_pair(word(((1, 2), -1), ((2, 1), -1))), (-1, -1))

    def test_relabel_across_components(self):
        s = Permutation((2, 1, 3))
        moved = f2_relabel(F2Word.generator(1, 3), s)
        self.assertEqual(moved, F2Word.generator(2, 3))
        self.assertEqual(f2_relabel(X, s), Y)


class TestAlpha(unittest.TestCase):
    def test_swap(self):
        self.assertEqual(swap_alpha(X), Y)
        self.assertTrue(swap_alpha(F2Word.identity(PAIR)).is_identity())
        self.assertEqual(swap_alpha(word(((1, 2), 1), ((2, 1), -1))), word(((2, 1), 1), ((1, 2), -1)))

    def test_coboundary_examples(self):
        self.assertTrue(solve_alpha_coboundary(F2Word.identity(PAIR)).is_identity())
        self.assertEqual(solve_alpha_coboundary(word(((1, 2), 1), ((2, 1), -1))), X)
        w = word(((1, 2), 1), ((2, 1), 1), ((1, 2), -1), ((2, 1), -1))
        self.assertEqual(solve_alpha_coboundary(w), word(((1, 2), 1), ((2, 1), 1)))

    def test_coboundary_precondition(self):
        with self.assertRaises(PreconditionError):
            solve_alpha_coboundary(X)


class TestCyclicMember(unittest.TestCase):
    def test_examples(self):
        gamma = word(((1, 2), -1), ((2, 1), -1))
        self.assertEqual(cyclic_member(f2_pow(gamma, 3), gamma), 3)
        self.assertEqual(cyclic_member(F2Word.identity(PAIR), gamma), 0)
        self.assertIsNone(cyclic_member(X, gamma))

    def test_conjugated_generator(self):
        g = f2_mul(f2_mul(Y, X), f2_inv(Y))
        self.assertEqual(cyclic_member(f2_pow(g, -4), g), -4)
        self.assertIsNone(cyclic_member(f2_pow(X, 4), g))

    def test_trivial_generator(self):
        with self.assertRaises(PreconditionError):
            cyclic_member(X, F2Word.identity(PAIR))


class TestTextForm(unittest.TestCase):
    def test_render_and_parse(self):
        w = word(((1, 2), 1), ((2, 1), -3))
        self.assertEqual(render_f2(w), "l1,2 l2,1^-3")
        self.assertEqual(parse_f2("l1,2 l2,1^-3"), w)
        self.assertTrue(parse_f2("", pair=PAIR).is_identity())

    def test_malformed(self):
        with self.assertRaises(BraidWordError):
            parse_f2("x1,2")
        with self.assertRaises(BraidWordError):
            parse_f2("")


class TestFreeGroupLaws(unittest.TestCase):
    @settings(deadline=None)
    @given(f2_words, f2_words, f2_words)
    def test_associative(self, a, b, c):
        self.assertEqual(f2_mul(f2_mul(a, b), c), f2_mul(a, f2_mul(b, c)))

    @settings(deadline=None)
    @given(f2_words)
    def test_inverse(self, a):
        self.assertTrue(f2_mul(a, f2_inv(a)).is_identity())
        self.assertTrue(f2_mul(f2_inv(a), a).is_identity())

    @settings(deadline=None)
    @given(f2_words, f2_words)
    def test_alpha_is_an_involutive_automorphism(self, a, b):
        self.assertEqual(swap_alpha(swap_alpha(a)), a)
        self.assertEqual(swap_alpha(f2_mul(a, b)), f2_mul(swap_alpha(a), swap_alpha(b)))

    @settings(deadline=None)
    @given(f2_words, f2_words)
    def test_exponent_pair_is_additive(self, a, b):
        (a1, a2), (b1, b2) = exponent_pair(a), exponent_pair(b)
        self.assertEqual(exponent_pair(f2_mul(a, b)), (a1 + b1, a2 + b2))
        self.assertEqual(exponent_pair(f2_inv(a)), (-a1, -a2))

    @settings(deadline=None)
    @given(f2_words)
    def test_coboundary_round_trip(self, u):
        w = f2_mul(u, swap_alpha(f2_inv(u)))
        solution = solve_alpha_coboundary(w)
        self.assertEqual(f2_mul(solution, swap_alpha(f2_inv(solution))), w)

    @settings(deadline=None)
    @given(f2_words, st.integers(min_value=-4, max_value=4))
    def test_cyclic_member_recovers_exponent(self, g, k):
        assume(not g.is_identity())
        self.assertEqual(cyclic_member(f2_pow(g, k), g), k)


if __name__ == "__main__":
    unittest.main()
