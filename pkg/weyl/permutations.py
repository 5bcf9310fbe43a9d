"""
Groupes de Weyl W_G = S_{2n} et W_GSpin = {±1}^n ⋊ S_n.

Une permutation est stockée en notation en ligne sigma(1), ..., sigma(m)
(valeurs à partir de 1). Le produit est la composition (sigma tau)(i) =
sigma(tau(i)) : dans sigma·(i, j) la transposition agit en premier.
L'action sur les caractères est mu^sigma(i) = mu(sigma(i)) ; c'est une action
à droite.
"""
import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache

from core.exceptions import MalformedPermutationError, RankMismatchError
from rootdata.lattices import GSpinCharacter, GSpinCocharacter

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Perm:
    images: tuple

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, 'images', images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise MalformedPermutationError(f"{images} n'est pas une bijection de {{1..{len(images)}}}")

    # -- construction -----------------------------------------------------

    @classmethod
    def parse(cls, texte):
        """Lit la notation en ligne : '2134' (taille <= 9) ou '10,2,...' au-delà."""
        texte = (texte or '').strip().strip('{}')
        if not texte:
            raise MalformedPermutationError("Permutation vide", position=1)
        morceaux = texte.split(',') if ',' in texte else list(texte)
        valeurs = []
        for position, morceau in enumerate(morceaux, start=1):
            morceau = morceau.strip()
            if not morceau.isdigit():
                raise MalformedPermutationError(f"Caractère inattendu {morceau!r}", position=position)
            valeur = int(morceau)
            if not 1 <= valeur <= len(morceaux):
                raise MalformedPermutationError(f"Valeur {valeur} hors de 1..{len(morceaux)}", position=position)
            if valeur in valeurs:
                raise MalformedPermutationError(f"Valeur {valeur} répétée", position=position)
            valeurs.append(valeur)
        return cls(tuple(valeurs))

    @classmethod
    def identity(cls, m):
        return cls(tuple(range(1, m + 1)))

    @classmethod
    def longest(cls, m):
        """Élément le plus long w_m."""
        return cls(tuple(range(m, 0, -1)))

    @classmethod
    def transposition(cls, m, i, j):
        images = list(range(1, m + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    @classmethod
    def simple(cls, m, a):
        """Réflexion simple s_a = (a, a+1)."""
        return cls.transposition(m, a, a + 1)

    # -- structure --------------------------------------------------------

    @property
    def size(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1]

    def __mul__(self, autre):
        if autre.size != self.size:
            raise RankMismatchError(f"Produit de permutations de tailles {self.size} et {autre.size}")
        return Perm(tuple(self.images[t - 1] for t in autre.images))

    def inverse(self):
        images = [0] * self.size
        for i, valeur in enumerate(self.images, start=1):
            images[valeur - 1] = i
        return Perm(tuple(images))

    def is_identity(self):
        return self.images == tuple(range(1, self.size + 1))

    def length(self):
        return bruhat_length(self)

    def right_descents(self):
        return [a for a in range(1, self.size) if self.images[a - 1] > self.images[a]]

    def act_on_vector(self, vecteur):
        """mu^sigma(i) = mu(sigma(i))."""
        vecteur = tuple(vecteur)
        if len(vecteur) != self.size:
            raise RankMismatchError("Vecteur et permutation de tailles différentes")
        return tuple(vecteur[v - 1] for v in self.images)

    def format(self):
        if self.size <= 9:
            return ''.join(str(v) for v in self.images)
        return ','.join(str(v) for v in self.images)

    def __str__(self):
        return self.format()


def all_perms(m):
    """Toutes les permutations de taille m, dans l'ordre lexicographique."""
    return [Perm(images) for images in itertools.permutations(range(1, m + 1))]


def bruhat_length(sigma):
    """Nombre d'inversions."""
    images = sigma.images
    return sum(1 for i in range(len(images)) for j in range(i + 1, len(images)) if images[i] > images[j])


def word_product(mot, m):
    """Produit s_{b_1} s_{b_2} ... s_{b_k} dans S_m."""
    produit = Perm.identity(m)
    for a in mot:
        produit = produit * Perm.simple(m, a)
    return produit


def reduced_word(sigma):
    """Mot réduit [b_1, ..., b_k] avec sigma = s_{b_1} ... s_{b_k}."""
    courant = sigma
    lettres = []
    while True:
        descentes = courant.right_descents()
        if not descentes:
            break
        a = descentes[0]
        lettres.append(a)
        courant = courant * Perm.simple(sigma.size, a)
    return lettres[::-1]


# ---------------------------------------------------------------------------
# Groupe de Weyl de GSpin(2n+1)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SignedPerm:
    """Élément (epsilon, pi) de {±1}^n ⋊ S_n."""

    signs: tuple
    perm: Perm

    def __post_init__(self):
        signes = tuple(int(s) for s in self.signs)
        object.__setattr__(self, 'signs', signes)
        if any(s not in (1, -1) for s in signes):
            raise MalformedPermutationError(f"Signes invalides {signes}")
        if len(signes) != self.perm.size:
            raise RankMismatchError("Nombre de signes différent de la taille de la permutation")

    @property
    def n(self):
        return self.perm.size

    @classmethod
    def identity(cls, n):
        return cls((1,) * n, Perm.identity(n))

    @classmethod
    def sign_flip(cls, n, i):
        """sgn_i."""
        signes = [1] * n
        signes[i - 1] = -1
        return cls(tuple(signes), Perm.identity(n))

    def __mul__(self, autre):
        """(e, p)(e', p') = (e · p(e'), p p') avec p(e')_k = e'_{p^-1(k)}."""
        if autre.n != self.n:
            raise RankMismatchError("Produit d'éléments signés de rangs différents")
        inverse = self.perm.inverse()
        deplaces = tuple(autre.signs[inverse(k) - 1] for k in range(1, self.n + 1))
        return SignedPerm(tuple(a * b for a, b in zip(self.signs, deplaces)), self.perm * autre.perm)


def enumerate_signed_perms(n):
    return [
        SignedPerm(signes, perm)
        for signes in itertools.product((1, -1), repeat=n)
        for perm in all_perms(n)
    ]


def embed_wg0(s, n):
    """Plongement W_GSpin -> W_G^0 : sigma = S_epsilon ∘ Pi."""
    if s.n != n:
        raise RankMismatchError(f"Élément signé de rang {s.n} plongé au rang {n}")
    m = 2 * n
    images = [0] * m
    for i in range(1, n + 1):
        images[i - 1] = s.perm(i)
        images[m - i] = m + 1 - s.perm(i)
    # S_epsilon échange k et 2n+1-k quand epsilon_k = -1
    def echange(v):
        k = min(v, m + 1 - v)
        return m + 1 - v if s.signs[k - 1] == -1 else v
    return Perm(tuple(echange(v) for v in images))


def in_wg0(sigma):
    """Inverse de embed_wg0 sur son image, None hors de W_G^0."""
    m = sigma.size
    if m % 2:
        return None
    n = m // 2
    if any(sigma(i) + sigma(m + 1 - i) != m + 1 for i in range(1, n + 1)):
        return None
    signes = [1] * n
    images = [0] * n
    for i in range(1, n + 1):
        v = sigma(i)
        if v <= n:
            images[i - 1] = v
        else:
            images[i - 1] = m + 1 - v
            signes[m - v] = -1
    return SignedPerm(tuple(signes), Perm(tuple(images)))


@lru_cache(maxsize=None)
def enumerate_wg0(n):
    """W_G^0 ⊂ S_{2n}, image du plongement."""
    elements = [embed_wg0(s, n) for s in enumerate_signed_perms(n)]
    logger.debug("W_G^0 de rang %s : %s éléments", n, len(elements))
    return tuple(sorted(elements))


def gspin_weyl_act(w, chi):
    """Action à droite de W_GSpin sur les caractères, compatible avec j.

    sgn_i f_0 = f_0 + f_i et sgn_i f_i = -f_i ; la partie permutation agit
    par chi^pi(k) = chi(pi(k)) sur les coordonnées f_1..f_n.
    """
    if not isinstance(chi, GSpinCharacter) or chi.n != w.n:
        raise RankMismatchError("Action d'un élément de Weyl de rang différent")
    c0 = chi[0]
    apres_signes = [
        chi[i] if w.signs[i - 1] == 1 else c0 - chi[i]
        for i in range(1, w.n + 1)
    ]
    return GSpinCharacter(w.n, [c0] + [apres_signes[w.perm(k) - 1] for k in range(1, w.n + 1)])


def gspin_weyl_act_cochar(w, nu):
    """Action duale sur les cocaractères : sgn_i f_0* = f_0*, sgn_i f_i* = f_0* - f_i*."""
    if not isinstance(nu, GSpinCocharacter) or nu.n != w.n:
        raise RankMismatchError("Action d'un élément de Weyl de rang différent")
    d0 = nu[0] + sum(nu[i] for i in range(1, w.n + 1) if w.signs[i - 1] == -1)
    apres_signes = [w.signs[i - 1] * nu[i] for i in range(1, w.n + 1)]
    return GSpinCocharacter(w.n, [d0] + [apres_signes[w.perm(k) - 1] for k in range(1, w.n + 1)])
