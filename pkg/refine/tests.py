import itertools
import math
import random

from django.conf import settings
from django.test import SimpleTestCase, override_settings

from core.exceptions import AlreadyBSpinError, BoundExceededError, MalformedPermutationError, RankMismatchError
from parabolic.paraboliques import all_spin_parabolics, borel, from_composition, parabolic_q, whole_group
from weyl.permutations import Perm, all_perms, enumerate_wg0, in_wg0
from .classification import (
    MethodeSpin, Refinement, extensions, gamma, is_P_spin, is_r_spin, optimal_parabolic,
    parahoric_cosets, parahoric_is_spin, parahoric_restrict, stratify,
)
from .switching import improve_spin_step, switching_path, to_B_spin


def raffinement(texte):
    return Refinement.parse(texte)


def tous_les_raffinements(n):
    return [Refinement(n, sigma) for sigma in all_perms(2 * n)]


class RefinementTests(SimpleTestCase):
    def test_parse(self):
        r = raffinement('216345')
        self.assertEqual(r.n, 3)
        self.assertEqual(str(r), '216345')
        with self.assertRaises(MalformedPermutationError):
            raffinement('213')
        with self.assertRaises(RankMismatchError):
            Refinement(3, Perm.identity(4))

    def test_gamma(self):
        self.assertEqual(gamma(Refinement(2, Perm.identity(4))).values, (1, 2))
        self.assertEqual(gamma(raffinement('216345'))(1), 1)
        self.assertEqual(gamma(raffinement('216345')).values, (1, 4, 5))
        for r in tous_les_raffinements(2):
            g = gamma(r)
            for i in range(1, 3):
                self.assertEqual(r.sigma(i) + r.sigma(5 - g(i)), 5)

    def test_r_spin_examples(self):
        r = raffinement('216345')
        self.assertEqual([is_r_spin(r, k) for k in (1, 2, 3)], [True, False, False])
        r = raffinement('132456')
        self.assertEqual([is_r_spin(r, k) for k in (1, 2, 3)], [True, False, True])
        identite = Refinement(3, Perm.identity(6))
        self.assertTrue(all(is_r_spin(identite, k) for k in (1, 2, 3)))

    def test_adjacent_spin(self):
        # (n-1)-spin entraîne n-spin
        for n in (2, 3):
            for r in tous_les_raffinements(n):
                if is_r_spin(r, n - 1):
                    self.assertTrue(is_r_spin(r, n))

    def test_p_spin_examples(self):
        r = raffinement('216345')
        self.assertTrue(is_P_spin(r, from_composition((1, 4, 1))))
        self.assertFalse(is_P_spin(r, borel(3)))
        for sigma in enumerate_wg0(2):
            self.assertTrue(is_P_spin(Refinement(2, sigma), borel(2), method=MethodeSpin.WEYL))

    def test_optimal_examples(self):
        self.assertEqual(optimal_parabolic(raffinement('216345')).optimal, from_composition((1, 4, 1)))
        self.assertEqual(optimal_parabolic(raffinement('132456')).optimal, from_composition((1, 2, 2, 1)))
        profil = optimal_parabolic(raffinement('2314'))
        self.assertEqual(profil.optimal, whole_group(2))
        self.assertEqual(profil.spin_set, frozenset())
        self.assertEqual(profil.dimension, 1)


class CriteriaEquivalenceTests(SimpleTestCase):
    def verifier(self, r, p):
        verdicts = {method: is_P_spin(r, p, method=method) for method in MethodeSpin}
        if len(set(verdicts.values())) != 1:
            self.fail(f"{r} / {p.label} : {verdicts}")

    def test_exhaustive_small_ranks(self):
        for n in (1, 2, 3):
            parabolics = all_spin_parabolics(n)
            for r in tous_les_raffinements(n):
                for p in parabolics:
                    self.verifier(r, p)

    def test_sampled_rank_four(self):
        rng = random.Random(settings.SAMPLE_SEED)
        parabolics = all_spin_parabolics(4)
        valeurs = list(range(1, 9))
        for _ in range(settings.SAMPLE_COUNT):
            rng.shuffle(valeurs)
            self.verifier(Refinement(4, Perm(tuple(valeurs))), rng.choice(parabolics))


class StratificationTests(SimpleTestCase):
    def test_gl4_table(self):
        strates = stratify(2)
        membres = {p.label: [str(r) for r in liste] for p, liste in strates.items()}
        self.assertEqual(list(membres), ['B', '1,2,1', '2,2', 'G'])
        self.assertEqual(membres['B'], ['1234', '1324', '2143', '2413', '3142', '3412', '4231', '4321'])
        self.assertEqual(membres['1,2,1'], [])
        self.assertEqual(membres['2,2'], ['1243', '1342', '2134', '2431', '3124', '3421', '4213', '4312'])
        self.assertEqual(membres['G'], ['1423', '1432', '2314', '2341', '3214', '3241', '4123', '4132'])

    def test_rank_one(self):
        strates = stratify(1)
        self.assertEqual([str(r) for r in strates[borel(1)]], ['12', '21'])
        self.assertEqual(strates[whole_group(1)], [])

    def test_workers_give_same_partition(self):
        self.assertEqual(stratify(3, workers=1), stratify(3, workers=3))

    def test_bound(self):
        with self.assertRaises(BoundExceededError):
            stratify(6)
        with override_settings(ENUMERATION_BOUND=1):
            with self.assertRaises(BoundExceededError):
                stratify(2)
        self.assertEqual(len(stratify(2, bound=2)), 4)

    def test_b_spin_count(self):
        for n in (1, 2, 3):
            nombre = sum(1 for r in tous_les_raffinements(n) if optimal_parabolic(r).optimal.is_borel)
            self.assertEqual(nombre, 2 ** n * math.factorial(n))
        nombre = sum(1 for images in itertools.permutations(range(1, 9)) if in_wg0(Perm(images)) is not None)
        self.assertEqual(nombre, 2 ** 4 * math.factorial(4))


class ParahoricTests(SimpleTestCase):
    def test_restrict(self):
        pr = parahoric_restrict(Refinement(2, Perm.identity(4)), parabolic_q(2))
        self.assertEqual(str(pr), '{12}⊔{34}')
        self.assertEqual([str(r) for r in extensions(pr)], ['1234', '1243', '2134', '2143'])
        cosets = {parahoric_restrict(r, whole_group(2)).coset for r in tous_les_raffinements(2)}
        self.assertEqual(len(cosets), 1)

    def test_q_spin_cosets(self):
        cosets = parahoric_cosets(2, parabolic_q(2))
        self.assertEqual(len(cosets), 6)
        spin = {str(pr) for pr in cosets if parahoric_is_spin(pr)}
        self.assertEqual(spin, {'{12}⊔{34}', '{13}⊔{24}', '{24}⊔{13}', '{34}⊔{12}'})
        non_spin = {str(pr) for pr in cosets if not parahoric_is_spin(pr)}
        self.assertEqual(non_spin, {'{14}⊔{23}', '{23}⊔{14}'})

    def test_borel_cosets_of_wg0(self):
        for sigma in enumerate_wg0(2):
            self.assertTrue(parahoric_is_spin(parahoric_restrict(Refinement(2, sigma), borel(2))))

    def test_spin_coset_iff_p_spin(self):
        for p in all_spin_parabolics(2):
            for r in tous_les_raffinements(2):
                self.assertEqual(parahoric_is_spin(parahoric_restrict(r, p)), is_P_spin(r, p))


class SwitchingTests(SimpleTestCase):
    def test_step_examples(self):
        i, j, resultat = improve_spin_step(raffinement('2134'))
        self.assertEqual((i, j, str(resultat)), (1, 2, '1234'))
        i, j, resultat = improve_spin_step(raffinement('216345'))
        self.assertEqual((i, j, str(resultat)), (2, 4, '236145'))
        self.assertTrue(is_r_spin(resultat, 1) and is_r_spin(resultat, 2))

    def test_b_spin_input_rejected(self):
        with self.assertRaises(AlreadyBSpinError):
            improve_spin_step(raffinement('1234'))

    def test_to_b_spin_examples(self):
        self.assertEqual(to_B_spin(raffinement('1234')), ([], raffinement('1234')))
        self.assertEqual(to_B_spin(raffinement('2134')), ([(1, 2)], raffinement('1234')))

    def test_exhaustive(self):
        for n in (2, 3):
            for r in tous_les_raffinements(n):
                spin_set = optimal_parabolic(r).spin_set
                taus, resultat = to_B_spin(r)
                self.assertTrue(optimal_parabolic(resultat).optimal.is_borel)
                self.assertLessEqual(len(taus), n - len(spin_set))
                for etape in switching_path(r):
                    self.assertLess(etape.i, etape.j)
                    self.assertTrue(etape.spin_set < optimal_parabolic(etape.after).spin_set)
