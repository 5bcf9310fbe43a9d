import itertools
import random

from django.conf import settings
from django.test import SimpleTestCase

from core.exceptions import MalformedPermutationError, RankMismatchError
from rootdata.lattices import GSpinCharacter, GSpinCocharacter, jmath_char, pairing_gspin
from .cosets import LeviCoset, Trichotomie, all_cosets, coset_members, coset_min_rep, simple_trichotomy
from .permutations import (
    Perm, SignedPerm, all_perms, bruhat_length, embed_wg0, enumerate_signed_perms, enumerate_wg0,
    gspin_weyl_act, gspin_weyl_act_cochar, in_wg0, reduced_word, word_product,
)


def tous_les_delta(m):
    return [frozenset(d) for taille in range(m) for d in itertools.combinations(range(1, m), taille)]


class PermTests(SimpleTestCase):
    def test_parse_and_format(self):
        self.assertEqual(Perm.parse('2134').images, (2, 1, 3, 4))
        self.assertEqual(Perm.parse('{2134}').format(), '2134')
        grand = Perm(tuple(range(10, 0, -1)))
        self.assertEqual(Perm.parse(grand.format()), grand)

    def test_parse_errors(self):
        with self.assertRaises(MalformedPermutationError) as contexte:
            Perm.parse('2135')
        self.assertEqual(contexte.exception.position, 4)
        with self.assertRaises(MalformedPermutationError) as contexte:
            Perm.parse('2a34')
        self.assertEqual(contexte.exception.position, 2)
        with self.assertRaises(MalformedPermutationError):
            Perm.parse('1123')
        with self.assertRaises(MalformedPermutationError):
            Perm.parse('')

    def test_composition(self):
        sigma = Perm.parse('2314')
        tau = Perm.transposition(4, 1, 2)
        # sigma·(1 2) échange les deux premières positions
        self.assertEqual((sigma * tau).format(), '3214')
        self.assertTrue((sigma * sigma.inverse()).is_identity())
        with self.assertRaises(RankMismatchError):
            sigma * Perm.identity(3)

    def test_act_on_vector(self):
        self.assertEqual(Perm.parse('2134').act_on_vector((10, 20, 30, 40)), (20, 10, 30, 40))

    def test_lengths(self):
        self.assertEqual(bruhat_length(Perm.identity(4)), 0)
        self.assertEqual(bruhat_length(Perm.parse('4321')), 6)
        self.assertEqual(bruhat_length(Perm.parse('2134')), 1)

    def test_reduced_words(self):
        self.assertEqual(reduced_word(Perm.identity(4)), [])
        self.assertEqual(reduced_word(Perm.parse('2134')), [1])
        mot = reduced_word(Perm.parse('4321'))
        self.assertEqual(len(mot), 6)
        self.assertEqual(word_product(mot, 4), Perm.parse('4321'))

    def test_reduced_words_exhaustive(self):
        for sigma in all_perms(4):
            mot = reduced_word(sigma)
            self.assertEqual(len(mot), sigma.length())
            self.assertEqual(word_product(mot, 4), sigma)


class SignedPermTests(SimpleTestCase):
    def test_embedding_examples(self):
        self.assertTrue(embed_wg0(SignedPerm.identity(2), 2).is_identity())
        self.assertEqual(embed_wg0(SignedPerm.sign_flip(2, 1), 2).format(), '4231')
        self.assertEqual(in_wg0(Perm.parse('4231')), SignedPerm.sign_flip(2, 1))
        self.assertIsNone(in_wg0(Perm.parse('2134')))

    def test_embedding_is_injective(self):
        for n in (1, 2, 3):
            elements = enumerate_signed_perms(n)
            images = {embed_wg0(s, n) for s in elements}
            self.assertEqual(len(images), len(elements))
            self.assertEqual(len(enumerate_wg0(n)), len(elements))

    def test_round_trip(self):
        for s in enumerate_signed_perms(2):
            self.assertEqual(in_wg0(embed_wg0(s, 2)), s)

    def test_embedding_is_homomorphism(self):
        elements = enumerate_signed_perms(2)
        for a in elements:
            for b in elements:
                self.assertEqual(embed_wg0(a * b, 2), embed_wg0(a, 2) * embed_wg0(b, 2))

    def test_gspin_action_examples(self):
        sgn = SignedPerm.sign_flip(2, 1)
        f0, f1 = GSpinCharacter.base(2, 0), GSpinCharacter.base(2, 1)
        self.assertEqual(gspin_weyl_act(sgn, f0), f0 + f1)
        self.assertEqual(gspin_weyl_act(sgn, f1), -f1)
        chi = GSpinCharacter(2, (3, -1, 4))
        self.assertEqual(gspin_weyl_act(SignedPerm.identity(2), chi), chi)

    def test_gspin_action_matches_gl_action(self):
        rng = random.Random(settings.SAMPLE_SEED)
        for n in (1, 2, 3):
            for w in enumerate_signed_perms(n):
                chi = GSpinCharacter(n, [rng.randint(-5, 5) for _ in range(n + 1)])
                gauche = jmath_char(gspin_weyl_act(w, chi), n).coeffs
                droite = embed_wg0(w, n).act_on_vector(jmath_char(chi, n).coeffs)
                self.assertEqual(gauche, droite)

    def test_cocharacter_action_preserves_pairing(self):
        rng = random.Random(settings.SAMPLE_SEED)
        for w in enumerate_signed_perms(2):
            chi = GSpinCharacter(2, [rng.randint(-5, 5) for _ in range(3)])
            nu = GSpinCocharacter(2, [rng.randint(-5, 5) for _ in range(3)])
            self.assertEqual(
                pairing_gspin(gspin_weyl_act(w, chi), gspin_weyl_act_cochar(w, nu)),
                pairing_gspin(chi, nu),
            )


class CosetTests(SimpleTestCase):
    def test_min_rep_examples(self):
        self.assertTrue(coset_min_rep(Perm.identity(4), {1, 3}).is_identity())
        self.assertTrue(coset_min_rep(Perm.parse('2134'), {1}).is_identity())

    def test_min_rep_is_shortest(self):
        for delta in tous_les_delta(4):
            for sigma in all_perms(4):
                rep = coset_min_rep(sigma, delta)
                coset = LeviCoset.of(sigma, delta)
                self.assertIn(sigma, coset)
                autres = [w for w in coset_members(coset) if w != rep]
                self.assertTrue(all(bruhat_length(rep) < bruhat_length(w) for w in autres))

    def test_coset_count_and_format(self):
        cosets = all_cosets(4, {1, 3})
        self.assertEqual(len(cosets), 6)
        self.assertEqual(cosets[0].format(), '{12}⊔{34}')
        self.assertEqual(LeviCoset.of(Perm.parse('4132'), {1, 3}).format(), '{14}⊔{23}')

    def test_trichotomy_examples(self):
        unite = LeviCoset.of(Perm.identity(4), {1})
        self.assertEqual(simple_trichotomy(1, unite), Trichotomie.PERMUTES)
        self.assertEqual(simple_trichotomy(1, LeviCoset.of(Perm.identity(4), ())), Trichotomie.ALL_LONGER)

    def test_trichotomy_exhaustive(self):
        for m in (4, 6):
            for delta in tous_les_delta(m):
                for coset in all_cosets(m, delta):
                    membres = coset_members(coset)
                    for a in range(1, m):
                        s = Perm.simple(m, a)
                        verdict = simple_trichotomy(a, coset)
                        if verdict == Trichotomie.PERMUTES:
                            self.assertTrue(all(s * w in coset for w in membres))
                        elif verdict == Trichotomie.ALL_LONGER:
                            self.assertTrue(all(bruhat_length(s * w) > bruhat_length(w) for w in membres))
                        else:
                            self.assertTrue(all(bruhat_length(s * w) < bruhat_length(w) for w in membres))
