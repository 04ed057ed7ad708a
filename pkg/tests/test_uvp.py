import unittest
from itertools import combinations

from src.errors import StrandCountError
from src.free2 import F2Word, f2_mul
from src.oracle import Rng, random_involution, random_perm, random_pure_element
from src.perms import Permutation, pair_orbits
from src.uvp import (
    PureElement,
    act_perm,
    component,
    epsilon,
    pure_to_record,
    restrict_to_block,
    uvp_commutator,
    uvp_inv,
    uvp_mul,
    uvp_pow,
)


def lam(n: int, a: int, b: int, exponent: int = 1) -> PureElement:
    return PureElement.generator(n, a, b, exponent)


class TestMultiplication(unittest.TestCase):
    def test_cancellation(self):
        self.assertTrue(uvp_mul(lam(4, 1, 2), lam(4, 1, 2, -1)).is_identity())

    def test_distinct_components_commute(self):
        a, b = lam(4, 1, 2), lam(4, 3, 4)
        product = uvp_mul(a, b)
        self.assertEqual(len(product.components), 2)
        self.assertEqual(product, uvp_mul(b, a))

    def test_same_component_does_not_commute(self):
        a, b = lam(4, 1, 2), lam(4, 2, 1)
        self.assertNotEqual(uvp_mul(a, b), uvp_mul(b, a))
        self.assertFalse(uvp_commutator(a, b).is_identity())

    def test_inverse_and_powers(self):
        a = uvp_mul(lam(3, 1, 3), lam(3, 2, 1, -1))
        self.assertTrue(uvp_mul(a, uvp_inv(a)).is_identity())
        self.assertEqual(uvp_pow(a, 3), uvp_mul(a, uvp_mul(a, a)))
        self.assertEqual(uvp_pow(a, -1), uvp_inv(a))

    def test_no_torsion(self):
        rng = Rng(61)
        for _ in range(40):
            a = random_pure_element(rng, 4, 8)
            if a.is_identity():
                continue
            for k in range(1, 7):
                self.assertFalse(uvp_pow(a, k).is_identity())

    def test_strand_mismatch(self):
        with self.assertRaises(StrandCountError):
            uvp_mul(lam(3, 1, 2), lam(4, 1, 2))

    def test_trivial_components_dropped(self):
        pure = PureElement.from_components(3, {(1, 2): F2Word.identity((1, 2))})
        self.assertTrue(pure.is_identity())


class TestAction(unittest.TestCase):
    def test_moves_component(self):
        self.assertEqual(act_perm(Permutation((2, 1, 3)), lam(3, 1, 3)), lam(3, 2, 3))

    def test_identity_acts_trivially(self):
        a = uvp_mul(lam(3, 1, 3), lam(3, 2, 1))
        self.assertEqual(act_perm(Permutation.identity(3), a), a)

    def test_swaps_basis_letters(self):
        self.assertEqual(act_perm(Permutation((2, 1, 3)), lam(3, 1, 2)), lam(3, 2, 1))

    def test_action_is_an_automorphism(self):
        rng = Rng(11)
        s = Permutation((3, 1, 4, 2))
        for _ in range(20):
            a, b = random_pure_element(rng, 4, 8), random_pure_element(rng, 4, 8)
            self.assertEqual(act_perm(s, uvp_mul(a, b)), uvp_mul(act_perm(s, a), act_perm(s, b)))


class TestProjections(unittest.TestCase):
    def test_component(self):
        a = uvp_mul(lam(3, 1, 2), lam(3, 2, 1))
        self.assertEqual(component(a, (1, 2)), f2_mul(F2Word.generator(1, 2), F2Word.generator(2, 1)))
        self.assertEqual(component(a, (2, 1)), component(a, (1, 2)))
        self.assertTrue(component(a, (1, 3)).is_identity())

    def test_component_out_of_range(self):
        with self.assertRaises(StrandCountError):
            component(lam(3, 1, 2), (1, 4))

    def test_component_is_a_homomorphism(self):
        rng = Rng(5)
        for _ in range(20):
            a, b = random_pure_element(rng, 4, 10), random_pure_element(rng, 4, 10)
            for pair in ((1, 2), (1, 4), (3, 4)):
                self.assertEqual(component(uvp_mul(a, b), pair), f2_mul(component(a, pair), component(b, pair)))

    def test_epsilon(self):
        self.assertEqual(epsilon(uvp_mul(lam(3, 1, 2, -1), lam(3, 2, 1, -1)), (1, 2)), -2)
        self.assertEqual(epsilon(lam(3, 1, 2), (1, 3)), 0)
        self.assertEqual(epsilon(lam(3, 2, 1), (1, 2)), 1)

    def test_epsilon_is_additive(self):
        rng = Rng(67)
        for _ in range(30):
            a, b = random_pure_element(rng, 4, 10), random_pure_element(rng, 4, 10)
            for pair in combinations(range(1, 5), 2):
                self.assertEqual(epsilon(uvp_mul(a, b), pair), epsilon(a, pair) + epsilon(b, pair))

    def test_epsilon_fixed_by_stabilizer(self):
        rng = Rng(71)
        for _ in range(30):
            a = random_pure_element(rng, 5, 12)
            s = random_involution(rng, 5)
            stabilized = [(i, j) for i, j in combinations(range(1, 6), 2) if {s(i), s(j)} == {i, j}]
            self.assertTrue(stabilized)
            for pair in stabilized:
                self.assertEqual(epsilon(act_perm(s, a), pair), epsilon(a, pair))

    def test_epsilon_moves_with_action(self):
        rng = Rng(73)
        for _ in range(30):
            a, s = random_pure_element(rng, 4, 10), random_perm(rng, 4)
            for i, j in combinations(range(1, 5), 2):
                self.assertEqual(epsilon(act_perm(s, a), (s(i), s(j))), epsilon(a, (i, j)))

    def test_restrict_to_block(self):
        a = uvp_mul(uvp_mul(lam(4, 1, 3), lam(4, 2, 4)), lam(4, 1, 2))
        block = [b for b in pair_orbits(Permutation((2, 1, 4, 3))).blocks if b.representative == (1, 3)][0]
        self.assertEqual(restrict_to_block(a, block), uvp_mul(lam(4, 1, 3), lam(4, 2, 4)))

    def test_record(self):
        a = uvp_mul(lam(3, 2, 3), lam(3, 1, 2, -2))
        self.assertEqual(pure_to_record(a), [
            {"pair": [1, 2], "word": [[1, 2, -2]]},
            {"pair": [2, 3], "word": [[2, 3, 1]]},
        ])


if __name__ == "__main__":
    unittest.main()
