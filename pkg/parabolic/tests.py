import itertools
import random

from django.conf import settings
from django.test import SimpleTestCase

from core.exceptions import NonSpinParabolicError, RankMismatchError, WeightError
from rootdata.lattices import PureWeight
from .paraboliques import (
    StandardParabolic, all_spin_parabolics, borel, contains, from_composition, from_xp,
    gspin_partner, intersect, parabolic_q, parse_parabolic, t_P, t_p_swap_holds, whole_group,
)
from .poids import (
    alpha_basis, alpha_basis_decompose, crit_range, j_lambda, pure_parabolic_dim,
    random_weight_in_coset, weight_in_parabolic_coset,
)


class ParaboliqueTests(SimpleTestCase):
    def test_from_composition(self):
        p = from_composition((1, 4, 1))
        self.assertEqual(p.delta, frozenset({2, 3, 4}))
        self.assertEqual(p.xp, frozenset({1}))
        self.assertEqual(from_composition((1, 2, 2, 1)).delta, frozenset({2, 4}))
        g = from_composition((6,))
        self.assertTrue(g.is_whole_group)
        self.assertEqual(g.xp, frozenset())

    def test_non_spin_composition(self):
        with self.assertRaises(NonSpinParabolicError):
            from_composition((1, 3, 2))
        p = from_composition((1, 3, 2), spin=False)
        self.assertIsInstance(p, StandardParabolic)
        self.assertFalse(p.is_spin)
        with self.assertRaises(NonSpinParabolicError):
            p.as_spin()

    def test_from_xp(self):
        self.assertTrue(from_xp({1, 2}, 2).is_borel)
        self.assertEqual(from_xp({2}, 2).composition, (2, 2))
        self.assertEqual(parabolic_q(2), from_composition((2, 2)))
        with self.assertRaises(RankMismatchError):
            from_xp({3}, 2)

    def test_xp_bijection(self):
        for n in (1, 2, 3, 4):
            for taille in range(n + 1):
                for x in itertools.combinations(range(1, n + 1), taille):
                    p = from_xp(x, n)
                    self.assertTrue(p.is_spin)
                    self.assertEqual(p.xp, frozenset(x))

    def test_intersect(self):
        p, q = from_composition((1, 4, 1)), from_composition((1, 2, 2, 1))
        self.assertEqual(intersect(p, whole_group(3)), p)
        self.assertEqual(intersect(p, q), q)
        self.assertEqual(intersect(borel(3), p), borel(3))

    def test_contains(self):
        self.assertTrue(contains(borel(2), parabolic_q(2)))
        self.assertFalse(contains(from_composition((1, 2, 1)), parabolic_q(2)))

    def test_canonical_order(self):
        labels = [p.label for p in all_spin_parabolics(2)]
        self.assertEqual(labels, ['B', '1,2,1', '2,2', 'G'])
        self.assertEqual(len(all_spin_parabolics(4)), 16)

    def test_parse(self):
        self.assertEqual(parse_parabolic('2,2'), parabolic_q(2))
        self.assertEqual(parse_parabolic('q', n=2), parabolic_q(2))
        self.assertEqual(parse_parabolic('B', n=3), borel(3))
        with self.assertRaises(RankMismatchError):
            parse_parabolic('B')
        with self.assertRaises(RankMismatchError):
            parse_parabolic('2,2', n=3)
        with self.assertRaises(NonSpinParabolicError):
            parse_parabolic('1,3,2')

    def test_gspin_partner(self):
        self.assertEqual(gspin_partner(from_composition((1, 2, 1))).delta, frozenset({2}))
        self.assertEqual(gspin_partner(parabolic_q(2)).delta, frozenset({1}))
        self.assertEqual(gspin_partner(borel(3)).delta, frozenset())

    def test_t_p(self):
        self.assertEqual(t_P(parabolic_q(2)).coeffs, (1, 1, 0, 0))
        self.assertEqual(t_P(from_composition((1, 2, 1))).coeffs, (2, 1, 1, 0))
        self.assertTrue(t_P(whole_group(2)).is_zero())
        for n in (1, 2, 3, 4):
            for p in all_spin_parabolics(n):
                self.assertTrue(t_p_swap_holds(p))


class PoidsTests(SimpleTestCase):
    def setUp(self):
        self.base = PureWeight.from_coeffs((12, 1, -1, -12), dominant=True)

    def test_weight_in_coset(self):
        q = parabolic_q(2)
        self.assertTrue(weight_in_parabolic_coset(self.base, self.base, q))
        self.assertTrue(weight_in_parabolic_coset(PureWeight.from_coeffs((13, 2, 0, -11)), self.base, q))
        self.assertFalse(weight_in_parabolic_coset(PureWeight.from_coeffs((13, 1, -1, -13)), self.base, q))

    def test_dimensions(self):
        self.assertEqual(pure_parabolic_dim(borel(2)), 3)
        self.assertEqual(pure_parabolic_dim(parabolic_q(2)), 2)
        self.assertEqual(pure_parabolic_dim(whole_group(2)), 1)
        self.assertEqual(pure_parabolic_dim(borel(5)), 6)

    def test_decompose_examples(self):
        self.assertEqual(alpha_basis_decompose(self.base, self.base).mu, (0, 0, 0))
        decale = PureWeight.from_coeffs(tuple(c + 1 for c in self.base.coeffs))
        decomposition = alpha_basis_decompose(decale, self.base)
        self.assertEqual(decomposition.mu, (1, 0, 0))
        self.assertEqual(decomposition.sw_gap, 2)

    def test_odd_gap(self):
        impair = PureWeight.from_coeffs((13, 2, -1, -12))
        with self.assertRaises(WeightError):
            alpha_basis_decompose(impair, self.base)
        self.assertEqual(alpha_basis_decompose(impair, self.base, require_even_gap=False).mu, (0, 0, 1))

    def test_decompose_reconstructs(self):
        rng = random.Random(settings.SAMPLE_SEED)
        for n in (1, 2, 3):
            base = PureWeight.zero(n)
            for _ in range(25):
                mu = [rng.randint(0, 4) for _ in range(n + 1)]
                mu[-1] *= 2
                coeffs = [0] * (2 * n)
                for m, alpha in zip(mu, alpha_basis(n)):
                    coeffs = [c + m * a for c, a in zip(coeffs, alpha)]
                lam = PureWeight.from_coeffs(coeffs)
                decomposition = alpha_basis_decompose(lam, base)
                self.assertEqual(list(decomposition.mu), mu)
                self.assertTrue(decomposition.nonnegative)

    def test_crit_range(self):
        self.assertEqual(list(crit_range(self.base)), [-1, 0, 1])
        self.assertEqual(list(crit_range(PureWeight.from_coeffs((3, 2, 2, 1)))), [-2])

    def test_j_lambda(self):
        decale = PureWeight.from_coeffs(tuple(c + 1 for c in self.base.coeffs))
        self.assertEqual(j_lambda(0, decale, self.base), -1)

    def test_random_weight_stays_in_coset(self):
        rng = random.Random(settings.SAMPLE_SEED)
        for p in all_spin_parabolics(2):
            for _ in range(5):
                lam = random_weight_in_coset(self.base, p, rng)
                self.assertTrue(lam.is_dominant)
                self.assertTrue(weight_in_parabolic_coset(lam, self.base, p))
