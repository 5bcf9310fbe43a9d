import random

from django.conf import settings
from django.test import SimpleTestCase

from core.exceptions import RankMismatchError, WeightError
from .lattices import (
    GLCharacter, GLCocharacter, Groupe, GSpinCharacter, GSpinCocharacter, PureWeight,
    is_pure, jmath_char, jmath_char_inverse, jmath_vee_cochar, pairing_gl, pairing_gspin,
    positive_roots, rho, simple_roots,
)


class LatticeTests(SimpleTestCase):
    def test_lengths(self):
        self.assertEqual(len(GLCharacter.zero(3).coeffs), 6)
        self.assertEqual(len(GSpinCharacter.zero(3).coeffs), 4)
        with self.assertRaises(RankMismatchError):
            GLCharacter(2, (1, 2, 3))
        with self.assertRaises(RankMismatchError):
            GSpinCocharacter(0, ())

    def test_basis_indexing(self):
        f0 = GSpinCharacter.base(2, 0)
        self.assertEqual(f0.coeffs, (1, 0, 0))
        self.assertEqual(GLCharacter.base(2, 4).coeffs, (0, 0, 0, 1))
        self.assertEqual(f0[0], 1)

    def test_mixed_operations_rejected(self):
        with self.assertRaises(RankMismatchError):
            GLCharacter.zero(2) + GLCocharacter.zero(2)
        with self.assertRaises(RankMismatchError):
            GLCharacter.zero(2) + GLCharacter.zero(3)


class PurityTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(is_pure((12, 1, -1, -12)), 0)
        self.assertIsNone(is_pure((1, 0, 0, 0)))
        self.assertEqual(is_pure((5, 5, 5, 5, 5, 5)), 10)

    def test_pure_weight(self):
        lam = PureWeight.from_coeffs((12, 1, -1, -12), dominant=True)
        self.assertEqual(lam.sw, 0)
        self.assertEqual(lam.partial_sum(2), 13)
        self.assertEqual(lam[4], -12)
        with self.assertRaises(WeightError):
            PureWeight.from_coeffs((1, 0, 0, 0))
        with self.assertRaises(WeightError):
            PureWeight.from_coeffs((0, 1, -1, 0), dominant=True)
        with self.assertRaises(RankMismatchError):
            PureWeight.from_coeffs((1, 2, 3))


class TransferTests(SimpleTestCase):
    def test_jmath_char_examples(self):
        self.assertEqual(jmath_char(GSpinCharacter(2, (0, 1, 0)), 2).coeffs, (1, 0, 0, -1))
        self.assertEqual(jmath_char(GSpinCharacter(2, (1, 0, 0)), 2).coeffs, (0, 0, 1, 1))
        self.assertTrue(jmath_char(GSpinCharacter.zero(3), 3).is_zero())
        with self.assertRaises(RankMismatchError):
            jmath_char(GSpinCharacter.zero(2), 3)

    def test_jmath_vee_examples(self):
        self.assertEqual(jmath_vee_cochar(GLCocharacter.base(2, 1), 2), GSpinCocharacter.base(2, 1))
        self.assertTrue(jmath_vee_cochar(GLCocharacter.zero(2), 2).is_zero())
        with self.assertRaises(RankMismatchError):
            jmath_vee_cochar(GLCocharacter.zero(2), 1)

    def test_adjunction(self):
        rng = random.Random(settings.SAMPLE_SEED)
        for n in (1, 2, 3):
            for _ in range(100):
                mu = GSpinCharacter(n, [rng.randint(-9, 9) for _ in range(n + 1)])
                nu = GLCocharacter(n, [rng.randint(-9, 9) for _ in range(2 * n)])
                self.assertEqual(
                    pairing_gl(jmath_char(mu, n), nu),
                    pairing_gspin(mu, jmath_vee_cochar(nu, n)),
                )

    def test_image_is_pure_and_invertible(self):
        rng = random.Random(settings.SAMPLE_SEED)
        for n in (1, 2, 3):
            for _ in range(20):
                mu = GSpinCharacter(n, [rng.randint(-9, 9) for _ in range(n + 1)])
                image = jmath_char(mu, n)
                self.assertEqual(is_pure(image), mu[0])
                self.assertEqual(jmath_char_inverse(image), mu)
        self.assertIsNone(jmath_char_inverse((1, 0, 0, 0)))


class RootTests(SimpleTestCase):
    def test_rho_gl_rank_one(self):
        self.assertEqual(rho(Groupe.GL, 1).coeffs, (1, -1))

    def test_rho_gspin_rank_two(self):
        self.assertEqual(rho(Groupe.GSPIN, 2).coeffs, (0, 3, 1))

    def test_rho_compatible_with_jmath(self):
        for n in (1, 2, 3, 4):
            self.assertEqual(jmath_char(rho(Groupe.GSPIN, n), n), rho(Groupe.GL, n))

    def test_root_counts(self):
        self.assertEqual(len(simple_roots(Groupe.GL, 3)), 5)
        self.assertEqual(len(positive_roots(Groupe.GL, 3)), 15)
        self.assertEqual(len(simple_roots(Groupe.GSPIN, 3)), 3)
        self.assertEqual(len(positive_roots(Groupe.GSPIN, 3)), 9)
        self.assertEqual(simple_roots(Groupe.GSPIN, 2)[-1].coeffs, (0, 0, 1))
