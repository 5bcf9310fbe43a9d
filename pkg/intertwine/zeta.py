"""
Développement de M_tau et critères de support des intégrales zêta locales.

Les classes [rho]' de W_n/W_k sont identifiées aux classes de
w(rho) = [[0, w_n], [rho, 0]] dans W_G/W_{L_P}, où k = (k_1, ..., k_r) est la
moitié supérieure de la composition (k_1, ..., k_r, k_r, ..., k_1) de P.
"""
import logging
from dataclasses import dataclass, field

from core.exceptions import NotContainedInQError, RankMismatchError
from parabolic.paraboliques import contains, parabolic_q, require_spin, t_P
from weyl.cosets import LeviCoset, coset_min_rep
from weyl.permutations import Perm, reduced_word
from .casselman import ParahoricVector, T_s, c_s, expand, parahoric_T_s, recollect
from .ratfunc import ONE, RatFunc

logger = logging.getLogger(__name__)


def w_of_rho(rho):
    """w(rho)(j) = n + rho(j) pour j <= n et w(rho)(n+j) = n+1-j."""
    n = rho.size
    return Perm(tuple(n + rho(j) for j in range(1, n + 1)) + tuple(n + 1 - j for j in range(1, n + 1)))


def tau_element(n):
    """tau = diag(1, w_n)."""
    return Perm(tuple(range(1, n + 1)) + tuple(range(2 * n, n, -1)))


def levi_delta_k(p):
    """Racines simples de W_k ⊂ S_n (moitié supérieure du Levi de P)."""
    return frozenset(a for a in p.delta if a < p.n)


def _exiger_dans_q(p):
    p = require_spin(p)
    if not contains(p, parabolic_q(p.n)):
        raise NotContainedInQError(f"Le parabolique {p.label} n'est pas contenu dans ({p.n},{p.n})")
    return p


@dataclass(frozen=True)
class MTauChain:
    """Mot de w_n : mot réduit du représentant minimal de w_n W_k puis mot de la partie dans W_k."""

    min_part: tuple
    levi_part: tuple

    @property
    def letters(self):
        return self.min_part + self.levi_part


def m_tau_chain(n, p):
    p = _exiger_dans_q(p)
    if p.n != n:
        raise RankMismatchError("Rang et parabolique incompatibles")
    w_n = Perm.longest(n)
    minimal = coset_min_rep(w_n, levi_delta_k(p))
    reste = minimal.inverse() * w_n
    return MTauChain(tuple(reduced_word(minimal)), tuple(reduced_word(reste)))


def _classe_rho(coset, n, delta_k):
    rho = Perm(tuple(coset.rep(j) - n for j in range(1, n + 1)))
    return LeviCoset.of(rho, delta_k)


@dataclass
class MTauExpansion:
    n: int
    parabolic: object
    chain: MTauChain
    coefficients: dict
    leading: RatFunc
    c_s_factors: list = field(default_factory=list)

    @property
    def leading_p_exponent(self):
        """Exposant e tel que coefficient principal = p^e · produit des c_s."""
        produit = ONE
        for facteur in self.c_s_factors:
            produit = produit * facteur
        return (self.leading / produit).p_power_exponent()

    @property
    def fw_scale_exponent(self):
        """Exposant de p^{n(n-1)} pour la normalisation f_w(w) = p^{n(n-1)}."""
        return self.n * (self.n - 1)


def _vecteur_initial(n, p):
    w_2n = Perm.longest(2 * n)
    return ParahoricVector(Perm.identity(2 * n), p.delta, {LeviCoset.of(w_2n, p.delta): ONE})


def _normaliser(classes, n, p):
    delta_k = levi_delta_k(p)
    coefficients = {_classe_rho(coset, n, delta_k): c for coset, c in classes.items()}
    unite = LeviCoset.of(Perm.identity(n), delta_k)
    principal = coefficients.get(unite)
    if principal is None or principal.is_zero():
        raise NotContainedInQError("Le coefficient de [1]' est nul")
    return {k: c / principal for k, c in coefficients.items()}, principal


def m_tau_expansion(n, p):
    """M_tau(H_{[w_n]'}) renormalisé pour que le coefficient de [1]' vaille 1."""
    p = _exiger_dans_q(p)
    chaine = m_tau_chain(n, p)
    vecteur = _vecteur_initial(n, p)
    facteurs = []
    for numero, lettre in enumerate(chaine.letters):
        if numero >= len(chaine.min_part):
            facteurs.append(c_s(n + lettre, vecteur.twist))
        vecteur = parahoric_T_s(vecteur, n + lettre)
        logger.debug("M_tau n=%s %s : étape s_%s, %s classe(s)", n, p.label, n + lettre, len(vecteur.cosets))
    coefficients, principal = _normaliser(vecteur.cosets, n, p)
    return MTauExpansion(n, p, chaine, coefficients, principal, facteurs)


def oracle_m_tau(n, p):
    """Même calcul par composition directe des T_s sur la base f_w."""
    p = _exiger_dans_q(p)
    chaine = m_tau_chain(n, p)
    vecteur = expand(_vecteur_initial(n, p))
    for lettre in chaine.letters:
        vecteur = T_s(vecteur, n + lettre)
    coefficients, _ = _normaliser(recollect(vecteur, p.delta).cosets, n, p)
    return coefficients


# ---------------------------------------------------------------------------
# Critères de support
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AntiDiagonal:
    """Matrice anti-diagonale dont l'entrée (i, n+1-i) vaut p^{exponents[i-1]}."""

    exponents: tuple

    @property
    def n(self):
        return len(self.exponents)

    @property
    def integral(self):
        return all(e >= 0 for e in self.exponents)

    def entries(self):
        return {(i, self.n + 1 - i): e for i, e in enumerate(self.exponents, start=1)}

    def rows(self):
        lignes = []
        for i in range(1, self.n + 1):
            ligne = ['0'] * self.n
            ligne[self.n - i] = f"p^{self.exponents[i - 1]}"
            lignes.append(ligne)
        return lignes


def nu_beta(z1, z2, beta):
    """p^{-beta} z_2^{-1} w_n z_1 pour z_1, z_2 diagonales de p-exposants."""
    z1, z2 = tuple(z1), tuple(z2)
    if len(z1) != len(z2):
        raise RankMismatchError("z_1 et z_2 de tailles différentes")
    n = len(z1)
    return AntiDiagonal(tuple(-beta - z2[i - 1] + z1[n - i] for i in range(1, n + 1)))


def nu_beta_t_p(p, beta):
    """nu_beta(t_P^beta) = p^{-beta k} w_n z_1^2."""
    t = t_P(p).coeffs
    n = p.n
    return nu_beta([beta * e for e in t[:n]], [beta * e for e in t[n:]], beta)


@dataclass(frozen=True)
class SupportVerdict:
    integral: bool
    block_count_parity: str
    contained_in_Q: bool
    exponents: tuple
    independent_of_s: bool = True

    @property
    def forced_vanishing(self):
        return not self.integral

    def to_json(self):
        return {
            'entier': self.integral,
            'parite_blocs': self.block_count_parity,
            'contenu_dans_Q': self.contained_in_Q,
            'annulation_forcee': self.forced_vanishing,
            'exposants': list(self.exponents),
            'independant_de_s': self.independent_of_s,
        }


def zeta_support_verdict(p, beta):
    p = require_spin(p)
    if beta < 1:
        raise RankMismatchError(f"beta doit être un entier positif, reçu {beta}")
    descripteur = nu_beta_t_p(p, beta)
    verdict = SupportVerdict(
        integral=descripteur.integral,
        block_count_parity='pair' if p.block_count % 2 == 0 else 'impair',
        contained_in_Q=contains(p, parabolic_q(p.n)),
        exponents=descripteur.exponents,
    )
    logger.info("Support zêta %s, beta=%s : annulation forcée = %s", p.label, beta, verdict.forced_vanishing)
    return verdict


def factorisation_membership(delta, p):
    """Vrai si delta·w_n ∈ W_k."""
    p = _exiger_dans_q(p)
    if delta.size != p.n:
        raise RankMismatchError("delta doit appartenir à S_n")
    return coset_min_rep(delta * Perm.longest(p.n), levi_delta_k(p)).is_identity()


