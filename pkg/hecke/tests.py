import itertools
import random
from collections import Counter
from fractions import Fraction

import sympy
from django.conf import settings
from django.test import SimpleTestCase

from core.exceptions import AmbiguousGammaMapError, HeckeAlgebraError, MissingDataError, RankMismatchError
from parabolic.paraboliques import all_spin_parabolics, borel, parabolic_q
from parabolic.poids import random_weight_in_coset
from refine.classification import (
    Refinement, gamma, is_P_spin, is_r_spin, optimal_parabolic, parahoric_cosets, parahoric_is_spin,
)
from refine.switching import to_B_spin
from rootdata.lattices import PureWeight
from weyl.permutations import Perm, all_perms
from .algebre import (
    alpha_U, alpha_U_circ, char_poly_roots, divides_as_multisets, factors_through_spin,
    gamma_uniqueness_scan, gspin_parahoric_classes, gspin_word_is_admissible, hecke_relation_holds, jmath_hecke,
    reducibility_regularity_flags, spin_relation_check, theta_from_ratios,
)
from .pentes import (
    InconsistencyCertificate, ProfileSolution, audit_slopes, non_critical_slope, slope,
    slope_bounds, solve_profile,
)
from .satake import (
    ETA, P, U, U_CIRC, U_SPIN, V_SPIN, HeckeWord, SatakeMonomial, ValuationProfile, theta_symbols,
)
from .transferts import phi_ij, phi_tau

GL4_POIDS = (12, 1, -1, -12)


def raffinement(texte):
    return Refinement.parse(texte)


def tous_les_raffinements(n):
    return [Refinement(n, sigma) for sigma in all_perms(2 * n)]


def evaluation_normalisee(r, lam):
    """Affectation U°_{p,k} -> alpha(U°_{p,k}) pour le raffinement r."""
    return lambda generateur: alpha_U_circ(r, generateur[1], lam)


class SatakeMonomialTests(SimpleTestCase):
    def test_algebra(self):
        a = SatakeMonomial(1, (1, 0, 0, 2), 0)
        b = SatakeMonomial(-3, (0, 1, 0, -1), 1)
        self.assertEqual(a * b, SatakeMonomial(-2, (1, 1, 0, 1), 1))
        self.assertEqual(a / a, SatakeMonomial.one(2))
        self.assertEqual(a ** 2, SatakeMonomial(2, (2, 0, 0, 4), 0))
        with self.assertRaises(RankMismatchError):
            a * SatakeMonomial.one(1)

    def test_normal_form(self):
        m = SatakeMonomial(0, (2, 1, 1, 1), 0)
        self.assertEqual(m.normal_form(), SatakeMonomial(0, (1, 0, 0, 0), 2))
        self.assertTrue(m.spin_equal(SatakeMonomial(0, (1, 0, 0, 0), 2)))

    def test_normal_form_is_order_independent(self):
        rng = random.Random(settings.SAMPLE_SEED)
        for _ in range(200):
            n = rng.randint(1, 4)
            exposants = [rng.randint(-2, 3) for _ in range(2 * n)]
            m = SatakeMonomial(rng.randint(-5, 5), tuple(exposants), rng.randint(-2, 2))
            # réduction des paires dans l'ordre inverse
            reduits, eta = list(exposants), m.eta
            for i in reversed(range(n)):
                commun = min(reduits[i], reduits[2 * n - 1 - i])
                reduits[i] -= commun
                reduits[2 * n - 1 - i] -= commun
                eta += commun
            self.assertEqual(m.normal_form(), SatakeMonomial(m.half_p, tuple(reduits), eta))
            self.assertEqual(m.normal_form().normal_form(), m.normal_form())

    def test_valuation_and_expr(self):
        profil = ValuationProfile((Fraction(1, 2), 0, 0, Fraction(-1, 2)), 0, 0)
        self.assertTrue(profil.is_pure())
        m = SatakeMonomial(-3, (1, 0, 0, 0), 1)
        self.assertEqual(m.valuation(profil), Fraction(-1))
        theta = theta_symbols(2)
        self.assertEqual(m.as_expr(), P ** sympy.Rational(-3, 2) * theta[0] * ETA)
        self.assertEqual(SatakeMonomial.from_json(m.to_json()), m)

    def test_format(self):
        self.assertEqual(SatakeMonomial(-1, (1, 0), 0).format(), 'p^{-1/2} * θ_1')
        self.assertEqual(SatakeMonomial(4, (0, 0), 2).format(), 'p^{2} * η^{2}')
        self.assertEqual(SatakeMonomial.one(1).format(), '1')

    def test_eta0_bridge(self):
        self.assertEqual(ValuationProfile((0, 0), Fraction(3), 4).eta0_val, 7)


class HeckeWordTests(SimpleTestCase):
    def test_word_algebra(self):
        u1 = HeckeWord.generator('GL°', U_CIRC, 1)
        u2 = HeckeWord.generator('GL°', U_CIRC, 2)
        mot = (u2 / u1).shift_p(3)
        self.assertEqual(mot * mot.inverse(), HeckeWord.unit('GL°'))
        self.assertEqual(mot.generators(), [(U_CIRC, 1), (U_CIRC, 2)])
        self.assertEqual(HeckeWord.generator('GL°', U_CIRC, 0), HeckeWord.unit('GL°'))

    def test_family_checks(self):
        with self.assertRaises(HeckeAlgebraError):
            HeckeWord.generator('GL', U_SPIN, 1)
        with self.assertRaises(HeckeAlgebraError):
            HeckeWord.generator('GL', U, 1) * HeckeWord.generator('GL°', U_CIRC, 1)

    def test_evaluate(self):
        r = raffinement('2134')
        mot = HeckeWord.generator('GL', U, 2) / HeckeWord.generator('GL', U, 1)
        valeur = mot.evaluate({(U, 1): alpha_U(r, 1), (U, 2): alpha_U(r, 2)}, 2)
        self.assertEqual(valeur, alpha_U(r, 2) / alpha_U(r, 1))


class EigenvalueTests(SimpleTestCase):
    def test_alpha_u_examples(self):
        self.assertEqual(alpha_U(Refinement(1, Perm.identity(2)), 1), SatakeMonomial(-1, (1, 0), 0))
        for r in tous_les_raffinements(2):
            total = alpha_U(r, 4)
            self.assertEqual(total.half_p, 0)
            self.assertEqual(total.normal_form(), SatakeMonomial.eta_power(2, 2))
        self.assertEqual(alpha_U(raffinement('1234'), 2), alpha_U(raffinement('2134'), 2))
        with self.assertRaises(HeckeAlgebraError):
            alpha_U(raffinement('1234'), 5)

    def test_alpha_u_circ_examples(self):
        lam = PureWeight.from_coeffs(GL4_POIDS, dominant=True)
        r = raffinement('1234')
        self.assertEqual(alpha_U_circ(r, 1, PureWeight.zero(2)), alpha_U(r, 1))
        self.assertEqual(alpha_U_circ(r, 1, lam), SatakeMonomial(21, (1, 0, 0, 0), 0))
        decale = PureWeight.from_coeffs((13, 2, 0, -11))
        self.assertEqual(alpha_U_circ(r, 4, decale).normal_form(), SatakeMonomial(2 * 2 * 2, (0, 0, 0, 0), 2))

    def test_spin_relation_examples(self):
        lam = PureWeight.from_coeffs(GL4_POIDS)
        identite = Refinement(3, Perm.identity(6))
        self.assertTrue(all(spin_relation_check(identite, k) for k in (1, 2, 3)))
        self.assertTrue(spin_relation_check(raffinement('1234'), 1, lam))
        self.assertFalse(spin_relation_check(raffinement('2134'), 1))
        for r in tous_les_raffinements(2):
            self.assertTrue(spin_relation_check(r, 2, lam))

    def test_spin_relation_for_spin_refinements(self):
        for n in (1, 2, 3):
            for r in tous_les_raffinements(n):
                for k in range(1, n + 1):
                    if is_r_spin(r, k):
                        self.assertTrue(spin_relation_check(r, k))

    def test_theta_from_ratios(self):
        lam = PureWeight.from_coeffs((20, 11, 3, -3, -11, -20), dominant=True)
        for n in (1, 2, 3):
            for r in tous_les_raffinements(n):
                for k in range(1, 2 * n + 1):
                    self.assertEqual(theta_from_ratios(r, k), SatakeMonomial.theta_slot(n, r.sigma(k)))
        for r in tous_les_raffinements(3)[::7]:
            for k in range(1, 7):
                self.assertEqual(theta_from_ratios(r, k, lam), SatakeMonomial.theta_slot(3, r.sigma(k)))
        rng = random.Random(settings.SAMPLE_SEED)
        valeurs = list(range(1, 9))
        for _ in range(50):
            rng.shuffle(valeurs)
            r = Refinement(4, Perm(tuple(valeurs)))
            k = rng.randint(1, 8)
            self.assertEqual(theta_from_ratios(r, k), SatakeMonomial.theta_slot(4, r.sigma(k)))


class GammaScanTests(SimpleTestCase):
    def test_identity(self):
        self.assertEqual(gamma_uniqueness_scan(Refinement(2, Perm.identity(4))).values, (1, 2))

    def test_worked_example(self):
        r = raffinement('216345')
        self.assertEqual(gamma_uniqueness_scan(r), gamma(r))

    def test_relation_holds_for_gamma(self):
        lam = PureWeight.from_coeffs(GL4_POIDS)
        for r in tous_les_raffinements(2):
            valeurs = gamma(r).values
            for s in (1, 2):
                self.assertTrue(hecke_relation_holds(r, s, valeurs))
                self.assertTrue(hecke_relation_holds(r, s, valeurs, lam=lam, normalised=True))
        with self.assertRaises(HeckeAlgebraError):
            hecke_relation_holds(raffinement('1234'), 1, (1, 2), normalised=True)

    def test_scan_recovers_gamma_exhaustively(self):
        for n in (1, 2, 3):
            for r in tous_les_raffinements(n):
                self.assertEqual(gamma_uniqueness_scan(r), gamma(r))

    def test_degenerate_profile(self):
        profil = ValuationProfile((1, 1, -1, -1), 0, 0)
        with self.assertRaises(AmbiguousGammaMapError) as contexte:
            gamma_uniqueness_scan(Refinement(2, Perm.identity(4)), profile=profil)
        self.assertEqual(len(contexte.exception.candidats), 2)


class SpinTransferTests(SimpleTestCase):
    def test_jmath_hecke_rules(self):
        n = 3
        b = borel(n)
        self.assertEqual(jmath_hecke(HeckeWord.generator('GL', U, n), b), HeckeWord.generator('GSpin', U_SPIN, n))
        self.assertEqual(
            jmath_hecke(HeckeWord.generator('GL', U, 2 * n), b),
            HeckeWord.generator('GSpin', V_SPIN, 0, n),
        )
        mot = HeckeWord.generator('GL', U, 1) * HeckeWord.generator('GL', U, 2 * n - 1)
        attendu = HeckeWord.generator('GSpin', U_SPIN, 1, 2) * HeckeWord.generator('GSpin', V_SPIN, 0, n - 1)
        self.assertEqual(jmath_hecke(mot, b), attendu)
        self.assertTrue(gspin_word_is_admissible(attendu, b))

    def test_jmath_hecke_rejects_levi_generators(self):
        with self.assertRaises(HeckeAlgebraError):
            jmath_hecke(HeckeWord.generator('GL', U, 1), parabolic_q(2))
        self.assertFalse(gspin_word_is_admissible(HeckeWord.generator('GSpin', U_SPIN, 1), parabolic_q(2)))

    def test_factors_through_spin_examples(self):
        affectation = factors_through_spin(Refinement(2, Perm.identity(4)), parabolic_q(2))
        self.assertIsNotNone(affectation)
        self.assertEqual(affectation[(V_SPIN, 0)], SatakeMonomial.eta_power(2))
        self.assertIsNone(factors_through_spin(raffinement('2314'), parabolic_q(2)))

    def test_factors_iff_p_spin(self):
        for n in (1, 2, 3):
            for p in all_spin_parabolics(n):
                for r in tous_les_raffinements(n):
                    self.assertEqual(factors_through_spin(r, p) is not None, is_P_spin(r, p))

    def test_char_poly_roots(self):
        racines = char_poly_roots(borel(1), 1)
        self.assertEqual(Counter(racines), Counter([SatakeMonomial(-1, (1, 0), 0), SatakeMonomial(-1, (0, 1), 0)]))
        centrales = char_poly_roots(parabolic_q(2), 4)
        self.assertEqual({m.theta for m in centrales}, {(0, 0, 0, 0)})
        self.assertEqual({m.eta for m in centrales}, {2})
        with self.assertRaises(HeckeAlgebraError):
            char_poly_roots(parabolic_q(2), 1)

    def test_gspin_roots_divide_gl_roots(self):
        for n in (1, 2, 3):
            for p in all_spin_parabolics(n):
                for k in range(1, 2 * n + 1):
                    if k != 2 * n and k in p.delta:
                        continue
                    gspin = char_poly_roots(p, k, groupe='GSpin')
                    self.assertTrue(divides_as_multisets(gspin, char_poly_roots(p, k)))

    def test_gspin_classes_match_spin_cosets(self):
        for n in (1, 2, 3):
            for p in all_spin_parabolics(n):
                classes = gspin_parahoric_classes(p)
                spin = [pr for pr in parahoric_cosets(n, p) if parahoric_is_spin(pr)]
                self.assertEqual(len(classes), len(spin), p.label)
                self.assertTrue(all(is_P_spin(nu, p) for nu in classes))

    def test_gspin_roots_agree_with_spin_cosets(self):
        for n in (1, 2, 3):
            for p in all_spin_parabolics(n):
                for k in range(1, 2 * n + 1):
                    if k != 2 * n and k in p.delta:
                        continue
                    attendues = [
                        alpha_U(Refinement(n, pr.coset.rep), k).normal_form()
                        for pr in parahoric_cosets(n, p) if parahoric_is_spin(pr)
                    ]
                    self.assertEqual(Counter(char_poly_roots(p, k, groupe='GSpin')), Counter(attendues))

    def test_gspin_roots_strict_submultiset(self):
        q = parabolic_q(2)
        gspin = char_poly_roots(q, 2, groupe='GSpin')
        gl = char_poly_roots(q, 2)
        self.assertEqual((len(gspin), len(gl)), (4, 6))
        self.assertTrue(divides_as_multisets(gspin, gl))
        self.assertFalse(divides_as_multisets(gl, gspin))


class SlopeTests(SimpleTestCase):
    def setUp(self):
        self.lam = PureWeight.from_coeffs(GL4_POIDS, dominant=True)

    def test_slope_skeleton(self):
        nul = ValuationProfile((0, 0, 0, 0), 0, 0)
        self.assertEqual(slope(raffinement('1234'), 1, PureWeight.zero(2), nul), Fraction(-3, 2))
        profil = ValuationProfile((Fraction(1, 2), 3, -1, Fraction(3, 2)), 2, 4)
        lam = PureWeight.from_coeffs((5, 3, 1, -1))
        self.assertEqual(slope(raffinement('2413'), 4, lam, profil), 12)

    def test_bounds(self):
        self.assertEqual(slope_bounds(self.lam, borel(2)), {1: 12, 2: 3, 3: 12})
        self.assertEqual(slope_bounds(self.lam, parabolic_q(2)), {2: 3})

    def test_gl4_example_is_non_critical(self):
        self.assertTrue(non_critical_slope(raffinement('1234'), self.lam, {1: 11, 2: 0, 3: 11}, borel(2)))
        self.assertTrue(non_critical_slope(raffinement('2134'), self.lam, {1: 11, 2: 0, 3: 1}, borel(2)))

    def test_equality_is_critical(self):
        lignes = audit_slopes(raffinement('1234'), self.lam, {1: 12, 2: 0, 3: 11}, borel(2))
        self.assertEqual([ligne.index for ligne in lignes if not ligne.ok], [1])
        self.assertFalse(non_critical_slope(raffinement('1234'), self.lam, {1: 12, 2: 0, 3: 11}, borel(2)))

    def test_missing_slope(self):
        with self.assertRaises(MissingDataError):
            audit_slopes(raffinement('1234'), self.lam, {1: 11, 3: 11}, borel(2))

    def test_profile_audit(self):
        profil = ValuationProfile((Fraction(1, 2), Fraction(-23, 2), Fraction(23, 2), Fraction(-1, 2)), 0, 0)
        lignes = audit_slopes(raffinement('1234'), self.lam, profil, borel(2))
        self.assertEqual([ligne.slope for ligne in lignes], [11, 0, 11])


class SolveProfileTests(SimpleTestCase):
    def setUp(self):
        self.lam = PureWeight.from_coeffs(GL4_POIDS, dominant=True)

    def test_single_slope(self):
        solution = solve_profile({1: Fraction(-3, 2)}, PureWeight.zero(2), Perm.identity(4))
        self.assertIsInstance(solution, ProfileSolution)
        self.assertEqual(solution.profile.t[0], 0)
        self.assertTrue(solution.is_parametrized)

    def test_gl4_first_refinement(self):
        solution = solve_profile({1: 11, 2: 0, 3: 11}, self.lam, Perm.parse('1234'))
        self.assertEqual(
            solution.profile.t,
            (Fraction(1, 2), Fraction(-23, 2), Fraction(23, 2), Fraction(-1, 2)),
        )
        self.assertEqual(solution.profile.eta_val, 0)
        self.assertFalse(solution.is_parametrized)

    def test_gl4_second_refinement(self):
        solution = solve_profile({1: 11, 2: 0, 3: 1}, self.lam, Perm.parse('2134'))
        self.assertEqual(
            solution.profile.t,
            (Fraction(-23, 2), Fraction(1, 2), Fraction(3, 2), Fraction(27, 2)),
        )
        self.assertEqual(solution.profile.eta_val, 2)

    def test_gl4_joint_system_is_inconsistent(self):
        certificat = solve_profile(
            {1: 11, 2: 0, 3: 11}, self.lam, Perm.parse('1234'),
            joint=[(Perm.parse('2134'), {1: 11, 2: 0, 3: 1})],
        )
        self.assertIsInstance(certificat, InconsistencyCertificate)
        self.assertEqual(certificat.first_violation, '2134 k=1')
        self.assertEqual(certificat.combination, {'1234 k=1': 1, '1234 k=2': -1, '2134 k=1': 1})
        self.assertEqual(certificat.residual, 12)

    def test_round_trip(self):
        rng = random.Random(settings.SAMPLE_SEED)
        for n in (1, 2, 3):
            moitie_poids = sorted((rng.randint(0, 9) for _ in range(n)), reverse=True)
            decalage = rng.randint(-2, 2)
            lam = PureWeight.from_coeffs(
                [a + decalage for a in moitie_poids] + [decalage - a for a in reversed(moitie_poids)],
                dominant=True,
            )
            for _ in range(10):
                eta_val = Fraction(rng.randint(-6, 6), 2)
                moitie = [Fraction(rng.randint(-10, 10), 2) for _ in range(n)]
                t = tuple(moitie) + tuple(eta_val - x for x in reversed(moitie))
                profil = ValuationProfile(t, eta_val, lam.sw)
                sigma = Perm(tuple(rng.sample(range(1, 2 * n + 1), 2 * n)))
                r = Refinement(n, sigma)
                pentes = {k: slope(r, k, lam, profil) for k in range(1, 2 * n + 1)}
                solution = solve_profile(pentes, lam, sigma)
                self.assertEqual(solution.profile.t, profil.t)
                self.assertEqual(solution.profile.eta_val, eta_val)
                self.assertEqual({k: slope(r, k, lam, solution.profile) for k in pentes}, pentes)


class FlagTests(SimpleTestCase):
    def setUp(self):
        self.lam = PureWeight.from_coeffs(GL4_POIDS, dominant=True)
        self.r = raffinement('1234')
        self.theta = theta_symbols(2)

    def alphas(self, substitution=None):
        valeurs = {k: alpha_U_circ(self.r, k, self.lam).as_expr() for k in range(1, 5)}
        if substitution:
            valeurs = {k: v.subs(substitution) for k, v in valeurs.items()}
        return valeurs

    def test_generic_input(self):
        drapeaux = reducibility_regularity_flags(self.alphas(), self.lam)
        self.assertEqual(len(drapeaux), 12)
        self.assertFalse(any(d.reducible or d.irregular for d in drapeaux.values()))

    def test_reducibility(self):
        drapeaux = reducibility_regularity_flags(self.alphas({self.theta[1]: P * self.theta[0]}), self.lam)
        self.assertTrue(drapeaux[(1, 2)].reducible)
        self.assertFalse(drapeaux[(1, 2)].irregular)
        self.assertFalse(drapeaux[(2, 1)].reducible)

    def test_irregularity(self):
        drapeaux = reducibility_regularity_flags(self.alphas({self.theta[2]: self.theta[0]}), self.lam)
        self.assertTrue(drapeaux[(1, 3)].irregular)
        self.assertTrue(drapeaux[(3, 1)].irregular)
        self.assertFalse(drapeaux[(1, 3)].reducible)

    def test_monomial_input(self):
        valeurs = {k: alpha_U_circ(self.r, k, self.lam) for k in range(1, 5)}
        drapeaux = reducibility_regularity_flags(valeurs, self.lam)
        self.assertFalse(any(d.reducible for d in drapeaux.values()))

    def test_valuation_input(self):
        profil = ValuationProfile((0, 1, -1, 0), 0, 0)
        valeurs = {k: slope(self.r, k, self.lam, profil) for k in range(1, 5)}
        drapeaux = reducibility_regularity_flags(valeurs, self.lam)
        self.assertTrue(drapeaux[(1, 2)].reducible)

    def test_missing_value(self):
        with self.assertRaises(HeckeAlgebraError):
            reducibility_regularity_flags({1: Fraction(0)}, self.lam)


class TransferMapTests(SimpleTestCase):
    def setUp(self):
        self.lam = PureWeight.from_coeffs(GL4_POIDS, dominant=True)

    def test_outside_window_unchanged(self):
        u4 = HeckeWord.generator('GL°', U_CIRC, 4)
        self.assertEqual(phi_ij(u4, 1, 3, self.lam), u4)
        u3 = HeckeWord.generator('GL°', U_CIRC, 3)
        self.assertEqual(phi_ij(u3, 1, 3, self.lam), u3)
        with self.assertRaises(HeckeAlgebraError):
            phi_ij(HeckeWord.generator('GL', U, 1), 1, 2, self.lam)
        with self.assertRaises(HeckeAlgebraError):
            phi_ij(u4, 2, 2, self.lam)

    def test_eigenvalue_transfer_exhaustive(self):
        for r in tous_les_raffinements(2):
            for i, j in itertools.combinations(range(1, 5), 2):
                image = Refinement(2, r.sigma * Perm.transposition(4, i, j))
                for k in range(1, 5):
                    mot = phi_ij(HeckeWord.generator('GL°', U_CIRC, k), i, j, self.lam)
                    self.assertEqual(mot.evaluate(evaluation_normalisee(image, self.lam), 2), alpha_U_circ(r, k, self.lam))

    def test_involution(self):
        for i, j in itertools.combinations(range(1, 5), 2):
            for k in range(1, 5):
                mot = HeckeWord.generator('GL°', U_CIRC, k)
                self.assertEqual(phi_ij(phi_ij(mot, i, j, self.lam), i, j, self.lam), mot)

    def test_phi_tau_examples(self):
        mot = HeckeWord.generator('GL°', U_CIRC, 2)
        self.assertEqual(phi_tau([], self.lam)(mot), mot)
        taus, cible = to_B_spin(raffinement('2134'))
        transfert = phi_tau(taus, self.lam)
        for k in range(1, 5):
            valeur = transfert.image(k).evaluate(evaluation_normalisee(cible, self.lam), 2)
            self.assertEqual(valeur, alpha_U_circ(raffinement('2134'), k, self.lam))

    def verifier_invariance(self, r, base, rng):
        p = optimal_parabolic(r).optimal
        taus, _ = to_B_spin(r)
        indices = [k for k in range(1, 2 * r.n) if k not in p.delta]
        reference = [phi_tau(taus, base).coefficient(k) for k in indices]
        for _ in range(5):
            lam = random_weight_in_coset(base, p, rng)
            self.assertEqual([phi_tau(taus, lam).coefficient(k) for k in indices], reference)

    def test_coefficient_invariance_rank_two(self):
        rng = random.Random(settings.SAMPLE_SEED)
        for r in tous_les_raffinements(2):
            self.verifier_invariance(r, self.lam, rng)

    def test_coefficient_invariance_rank_three(self):
        rng = random.Random(settings.SAMPLE_SEED)
        base = PureWeight.from_coeffs((20, 11, 3, -3, -11, -20), dominant=True)
        for r in rng.sample(tous_les_raffinements(3), 60):
            self.verifier_invariance(r, base, rng)
