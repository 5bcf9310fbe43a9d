import random

import sympy
from django.conf import settings
from django.test import SimpleTestCase

from core.exceptions import IntertwiningError, NotContainedInQError, RankMismatchError
from hecke.satake import P, theta_symbols
from parabolic.paraboliques import all_spin_parabolics, borel, contains, parabolic_q, parse_parabolic, t_P
from weyl.cosets import LeviCoset, all_cosets, coset_min_rep
from weyl.permutations import Perm, all_perms
from .casselman import PSVector, ParahoricVector, T_s, c_s, expand, parahoric_T_s, recollect
from .ratfunc import ONE, RatFunc
from .zeta import (
    AntiDiagonal, factorisation_membership, levi_delta_k, m_tau_chain, m_tau_expansion, nu_beta,
    nu_beta_t_p, oracle_m_tau, tau_element, w_of_rho, zeta_support_verdict,
)


def classe(texte, p):
    return LeviCoset.of(Perm.parse(texte), levi_delta_k(p))


def diagonale(exposants, signe=1):
    return sympy.diag(*[P ** (signe * e) for e in exposants])


def anti_identite(n):
    return sympy.Matrix(n, n, lambda i, j: 1 if i + j == n - 1 else 0)


def matrice(descripteur):
    n = descripteur.n
    resultat = sympy.zeros(n, n)
    for (i, j), e in descripteur.entries().items():
        resultat[i - 1, j - 1] = P ** e
    return resultat


class RatFuncTests(SimpleTestCase):
    def test_arithmetic(self):
        theta = theta_symbols(1)
        f = RatFunc((1 - theta[0] / P) / (1 - theta[0]))
        self.assertEqual(f * (1 - theta[0]), RatFunc(1 - theta[0] / P))
        self.assertEqual(f - f, RatFunc(0))
        self.assertTrue((f - f).is_zero())
        self.assertEqual(RatFunc(P ** 3).p_power_exponent(), 3)
        self.assertEqual(ONE.p_power_exponent(), 0)
        self.assertIsNone(f.p_power_exponent())

    def test_division_by_zero(self):
        with self.assertRaises(IntertwiningError):
            ONE / RatFunc(0)

    def test_pole(self):
        theta = theta_symbols(2)
        with self.assertRaises(IntertwiningError):
            c_s(3, Perm.identity(4)).subs({theta[2]: theta[3]})
        self.assertEqual(c_s(3, Perm.identity(4)).subs({theta[2]: 0}), ONE)


class CasselmanTests(SimpleTestCase):
    def test_c_s_range(self):
        with self.assertRaises(IntertwiningError):
            c_s(1, Perm.identity(4))
        with self.assertRaises(IntertwiningError):
            c_s(4, Perm.identity(4))

    def test_c_s_formula(self):
        theta = theta_symbols(2)
        rapport = theta[3] / theta[2]
        self.assertEqual(c_s(3, Perm.parse('1243')), RatFunc((1 - rapport / P) / (1 - rapport)))

    def test_single_operator(self):
        identite = Perm.identity(4)
        s = Perm.simple(4, 3)
        image = T_s(PSVector(identite, {identite: ONE}), 3)
        attendu = PSVector(s, {s: RatFunc(1 / P), identite: c_s(3, identite) - ONE})
        self.assertEqual(image, attendu)
        retour = T_s(PSVector(identite, {s: ONE}), 3)
        self.assertEqual(retour, PSVector(s, {identite: ONE, s: c_s(3, identite) - RatFunc(1 / P)}))

    def test_parahoric_operator_matches_iwahori(self):
        for p in all_spin_parabolics(2):
            for coset in all_cosets(4, p):
                vecteur = ParahoricVector(Perm.identity(4), p.delta, {coset: ONE})
                self.assertEqual(expand(parahoric_T_s(vecteur, 3)), T_s(expand(vecteur), 3))

    def test_recollect(self):
        q = parabolic_q(2)
        coset = LeviCoset.of(Perm.parse('3421'), q)
        vecteur = ParahoricVector(Perm.identity(4), q.delta, {coset: RatFunc(P)})
        self.assertEqual(recollect(expand(vecteur), q.delta).cosets, {coset: RatFunc(P)})
        with self.assertRaises(IntertwiningError):
            recollect(PSVector(Perm.identity(4), {Perm.identity(4): ONE}), q.delta)


class MTauTests(SimpleTestCase):
    def test_elements(self):
        self.assertEqual(w_of_rho(Perm.identity(2)), Perm.parse('3421'))
        self.assertEqual(tau_element(2), Perm.parse('1243'))

    def test_chain(self):
        chaine = m_tau_chain(2, parabolic_q(2))
        self.assertEqual(chaine.min_part, ())
        self.assertEqual(chaine.letters, (1,))
        self.assertEqual(m_tau_chain(2, borel(2)).min_part, (1,))
        self.assertEqual(m_tau_chain(1, borel(1)).letters, ())
        with self.assertRaises(NotContainedInQError):
            m_tau_chain(2, parse_parabolic('1,2,1'))

    def test_expansion_q(self):
        q = parabolic_q(2)
        developpement = m_tau_expansion(2, q)
        self.assertEqual(developpement.coefficients, {classe('12', q): ONE})
        self.assertEqual(developpement.leading, c_s(3, Perm.identity(4)))
        self.assertEqual(len(developpement.c_s_factors), 1)
        self.assertEqual(developpement.leading_p_exponent, 0)
        self.assertEqual(developpement.fw_scale_exponent, 2)

    def test_expansion_borel(self):
        b = borel(2)
        developpement = m_tau_expansion(2, b)
        self.assertEqual(developpement.coefficients, {
            classe('12', b): ONE,
            classe('21', b): c_s(3, Perm.identity(4)) - RatFunc(1 / P),
        })
        self.assertEqual(developpement.c_s_factors, [])

    def test_rank_one(self):
        developpement = m_tau_expansion(1, borel(1))
        self.assertEqual(developpement.coefficients, {classe('1', borel(1)): ONE})

    def test_oracle(self):
        for n, p in ((2, borel(2)), (2, parabolic_q(2)), (3, parabolic_q(3))):
            self.assertEqual(oracle_m_tau(n, p), m_tau_expansion(n, p).coefficients)

    def test_not_contained_in_q(self):
        with self.assertRaises(NotContainedInQError):
            m_tau_expansion(2, parse_parabolic('1,2,1'))
        with self.assertRaises(NotContainedInQError):
            factorisation_membership(Perm.identity(2), parse_parabolic('1,2,1'))


class SupportTests(SimpleTestCase):
    def test_anti_diagonal(self):
        descripteur = AntiDiagonal((0, 2))
        self.assertTrue(descripteur.integral)
        self.assertEqual(descripteur.entries(), {(1, 2): 0, (2, 1): 2})
        self.assertEqual(descripteur.rows(), [['0', 'p^0'], ['p^2', '0']])
        self.assertEqual(nu_beta((1, 0), (0, 0), 1), AntiDiagonal((-1, 0)))
        with self.assertRaises(RankMismatchError):
            nu_beta((1,), (0, 0), 1)

    def test_nu_beta_t_p_examples(self):
        self.assertEqual(nu_beta_t_p(parabolic_q(2), 1).exponents, (0, 0))
        self.assertEqual(nu_beta_t_p(parse_parabolic('1,2,1'), 1).exponents, (-1, 1))
        self.assertEqual(nu_beta_t_p(borel(2), 1).exponents, (0, 2))

    def test_nu_beta_matches_matrix_product(self):
        rng = random.Random(settings.SAMPLE_SEED)
        for _ in range(200):
            n = rng.randint(1, 5)
            z1 = [rng.randint(-6, 6) for _ in range(n)]
            z2 = [rng.randint(-6, 6) for _ in range(n)]
            beta = rng.randint(1, 4)
            produit = P ** (-beta) * diagonale(z2, -1) * anti_identite(n) * diagonale(z1)
            self.assertEqual(matrice(nu_beta(z1, z2, beta)), produit.applyfunc(sympy.powsimp))

    def test_nu_beta_t_p_matches_matrix_product(self):
        for n in range(1, 5):
            for p in all_spin_parabolics(n):
                for beta in (1, 2, 3):
                    t = [beta * e for e in t_P(p).coeffs]
                    attendu = P ** (-beta * p.block_count) * anti_identite(n) * diagonale(t[:n], 2)
                    self.assertEqual(matrice(nu_beta_t_p(p, beta)), attendu.applyfunc(sympy.powsimp), p.label)

    def test_verdicts(self):
        verdict = zeta_support_verdict(parse_parabolic('2,2'), 1)
        self.assertFalse(verdict.forced_vanishing)
        self.assertEqual(verdict.block_count_parity, 'pair')
        self.assertTrue(verdict.contained_in_Q)
        verdict = zeta_support_verdict(parse_parabolic('1,2,1'), 2)
        self.assertTrue(verdict.forced_vanishing)
        self.assertEqual(verdict.to_json()['parite_blocs'], 'impair')
        self.assertTrue(verdict.to_json()['independant_de_s'])
        with self.assertRaises(RankMismatchError):
            zeta_support_verdict(borel(2), 0)

    def test_three_criteria_agree(self):
        for n in range(1, 5):
            q = parabolic_q(n)
            for p in all_spin_parabolics(n):
                for beta in (1, 2, 3):
                    verdict = zeta_support_verdict(p, beta)
                    self.assertEqual(verdict.integral, p.block_count % 2 == 0, p.label)
                    self.assertEqual(verdict.integral, contains(p, q), p.label)

    def test_factorisation_membership(self):
        for n in (2, 3):
            for p in all_spin_parabolics(n):
                if not contains(p, parabolic_q(n)):
                    continue
                delta_k = levi_delta_k(p)
                taille = sum(1 for d in all_perms(n) if coset_min_rep(d, delta_k).is_identity())
                admis = [d for d in all_perms(n) if factorisation_membership(d, p)]
                self.assertEqual(len(admis), taille)
                self.assertIn(Perm.longest(n), admis)
