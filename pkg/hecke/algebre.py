"""
Valeurs propres de Hecke des p-raffinements et identités entre elles.

alpha(U_{p,r}) = ∏_{j<=r} p^{-(2n-2j+1)/2} θ_{sigma(j)}(p)
alpha(U°_{p,r}) = p^{lambda_1 + ... + lambda_r} alpha(U_{p,r})
"""
import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import sympy

from core.exceptions import (
    AmbiguousGammaMapError, HeckeAlgebraError, NoGammaMapError, RankMismatchError,
)
from parabolic.paraboliques import require_spin
from refine.classification import GammaMap, Refinement, is_P_spin, parahoric_cosets
from rootdata.lattices import PureWeight
from weyl.cosets import coset_min_rep
from weyl.permutations import embed_wg0, enumerate_signed_perms, enumerate_wg0
from .satake import P, HeckeWord, SatakeMonomial, U, U_SPIN, V_SPIN

logger = logging.getLogger(__name__)


def _verifier_indice(r, k):
    if not 1 <= k <= 2 * r.n:
        raise HeckeAlgebraError(f"Indice U_{{p,{k}}} hors de 1..{2 * r.n}")


def delta_b_inverse_half(n, s):
    """delta_B^{-1/2}(t_{p,s}) = p^{-s(2n-s)/2}, en demi-exposant."""
    return -s * (2 * n - s)


def alpha_U(r, k):
    _verifier_indice(r, k)
    exposants = [0] * (2 * r.n)
    for j in range(1, k + 1):
        exposants[r.sigma(j) - 1] = 1
    return SatakeMonomial(delta_b_inverse_half(r.n, k), tuple(exposants), 0)


def alpha_U_circ(r, k, lam):
    if lam.n != r.n:
        raise RankMismatchError("Poids et raffinement de rangs différents")
    lam.require_dominant()
    return alpha_U(r, k).shift_p(2 * lam.partial_sum(k))


def spin_relation_check(r, k, lam=None):
    """η_0^{n-k} alpha(U°_{p,k}) = alpha(U°_{p,2n-k}) après forme normale."""
    lam = lam or PureWeight.zero(r.n)
    n = r.n
    if not 1 <= k <= n:
        raise HeckeAlgebraError(f"Indice {k} hors de 1..{n}")
    eta0 = SatakeMonomial(2 * lam.sw, (0,) * (2 * n), 1)
    gauche = alpha_U_circ(r, k, lam) * eta0 ** (n - k)
    droite = alpha_U_circ(r, 2 * n - k, lam)
    return gauche.spin_equal(droite)


def theta_from_ratios(r, k, lam=None):
    """θ_{sigma(k)} = p^{(2n-2k+1)/2} alpha(U_{p,k}) / alpha(U_{p,k-1}).

    Avec un poids, la forme normalisée p^{(2n-2k+1)/2} p^{-lambda_k}
    alpha(U°_{p,k}) / alpha(U°_{p,k-1}) est utilisée.
    """
    _verifier_indice(r, k)
    n = r.n
    un = SatakeMonomial.one(n)
    if lam is None:
        precedent = alpha_U(r, k - 1) if k > 1 else un
        return (alpha_U(r, k) / precedent).shift_p(2 * n - 2 * k + 1)
    precedent = alpha_U_circ(r, k - 1, lam) if k > 1 else un
    return (alpha_U_circ(r, k, lam) / precedent).shift_p(2 * n - 2 * k + 1 - 2 * lam[k])


def _membres_relation(r, s, valeurs_gamma, lam, normalised):
    n = r.n
    if normalised:
        alpha = lambda k: alpha_U_circ(r, k, lam) if k else SatakeMonomial.one(n)  # noqa: E731
        gauche = alpha(s)
    else:
        alpha = lambda k: alpha_U(r, k) if k else SatakeMonomial.one(n)  # noqa: E731
        gauche = alpha(s)
    for i in range(1, s + 1):
        g = valeurs_gamma[i - 1]
        facteur = (alpha(2 * n + 1 - g) / alpha(2 * n - g)).shift_p(2 * g - 2 * n - 1)
        if normalised:
            facteur = facteur.shift_p(2 * (lam[g] - lam[i]))
        gauche = gauche * facteur
    if normalised:
        droite = SatakeMonomial(delta_b_inverse_half(n, s) + 2 * s * lam.sw, (0,) * (2 * n), s)
    else:
        droite = SatakeMonomial(delta_b_inverse_half(n, s), (0,) * (2 * n), s)
    return gauche, droite


def hecke_relation_holds(r, s, valeurs_gamma, lam=None, normalised=False, profile=None):
    """Relation entre alpha_s et les quotients alpha_{2n+1-gamma(i)} / alpha_{2n-gamma(i)}.

    Sous forme normalisée le membre de droite porte η_0^s = p^{s·sw} η^s.
    Avec un profil, seules les valuations des deux membres sont comparées.
    """
    if normalised and lam is None:
        raise HeckeAlgebraError("La relation normalisée demande un poids")
    gauche, droite = _membres_relation(r, s, tuple(valeurs_gamma), lam, normalised)
    if profile is not None:
        return gauche.valuation(profile) == droite.valuation(profile)
    return gauche.spin_equal(droite)


def gamma_uniqueness_scan(r, profile=None, lam=None, normalised=False):
    """Parcourt toutes les injections {1..n} -> {1..2n} et garde celles qui vérifient les relations."""
    n = r.n
    candidats = []
    for valeurs in itertools.permutations(range(1, 2 * n + 1), n):
        if all(
            hecke_relation_holds(r, s, valeurs, lam=lam, normalised=normalised, profile=profile)
            for s in range(1, n + 1)
        ):
            candidats.append(GammaMap(valeurs))
    if not candidats:
        raise NoGammaMapError(f"Aucune injection ne vérifie les relations pour {r}")
    if len(candidats) > 1:
        logger.warning("Balayage gamma ambigu pour %s : %s candidats", r, len(candidats))
        raise AmbiguousGammaMapError(
            f"{len(candidats)} injections vérifient les relations pour {r}", candidats=candidats,
        )
    logger.debug("Balayage gamma pour %s : %s", r, candidats[0].values)
    return candidats[0]


# ---------------------------------------------------------------------------
# Transfert vers GSpin
# ---------------------------------------------------------------------------

def jmath_hecke(mot, p):
    """U_{p,r} -> 𝒰_{p,r}, U_{p,2n-r} -> 𝒰_{p,r} 𝒱_p^{n-r}, U_{p,2n} -> 𝒱_p^n."""
    p = require_spin(p)
    n = p.n
    if mot.family != 'GL':
        raise HeckeAlgebraError("jmath_hecke attend un mot en générateurs U_{p,r}")
    image = HeckeWord('GSpin', half_p=mot.half_p)
    for (_, k), e in mot.exponents:
        if not 1 <= k <= 2 * n or (k != 2 * n and k in p.delta):
            raise HeckeAlgebraError(f"U_{{p,{k}}} n'appartient pas à l'algèbre de Hecke de {p.label}")
        if k <= n:
            facteur = HeckeWord.generator('GSpin', U_SPIN, k)
        elif k < 2 * n:
            facteur = HeckeWord.generator('GSpin', U_SPIN, 2 * n - k) * HeckeWord.generator('GSpin', V_SPIN, 0, k - n)
        else:
            facteur = HeckeWord.generator('GSpin', V_SPIN, 0, n)
        image = image * facteur ** e
    return image


def gspin_word_is_admissible(mot, p):
    """Les 𝒰_{p,r} utilisés vérifient b_r ∉ Delta_𝒫, c'est-à-dire r ∈ X_P."""
    p = require_spin(p)
    return all(nom == V_SPIN or indice in p.xp for nom, indice in mot.generators())


def _raffinement_spin_dans_classe(r, p):
    cible = coset_min_rep(r.sigma, p.delta)
    for nu in enumerate_wg0(r.n):
        if coset_min_rep(nu, p.delta) == cible:
            return Refinement(r.n, nu)
    return None


def _valeurs_gspin(nu, p):
    """Valeurs propres de GSpin attachées au raffinement spin nu de W_G^0."""
    affectation = {(U_SPIN, k): alpha_U(nu, k) for k in sorted(p.xp)}
    affectation[(V_SPIN, 0)] = SatakeMonomial.eta_power(nu.n)
    return affectation


def factors_through_spin(r, p):
    """Valeurs propres de GSpin dont le transfert redonne alpha sur 𝓗_p^P, ou None."""
    p = require_spin(p)
    if not is_P_spin(r, p):
        return None
    affectation = _valeurs_gspin(_raffinement_spin_dans_classe(r, p), p)
    for k in range(1, 2 * r.n + 1):
        if k != 2 * r.n and k in p.delta:
            continue
        image = jmath_hecke(HeckeWord.generator('GL', U, k), p)
        if not image.evaluate(affectation, r.n).spin_equal(alpha_U(r, k)):
            raise HeckeAlgebraError(f"Le transfert de {r} ne reproduit pas alpha(U_{{p,{k}}})")
    return affectation


def gspin_parahoric_classes(p):
    """Une représentation nu = embed(w) par classe parahorique de GSpin, w dans W_GSpin."""
    p = require_spin(p)
    classes = {}
    for w in enumerate_signed_perms(p.n):
        nu = embed_wg0(w, p.n)
        classes.setdefault(coset_min_rep(nu, p.delta), Refinement(p.n, nu))
    return list(classes.values())


def char_poly_roots(p, k, groupe='GL'):
    """Racines du polynôme caractéristique de U_{p,k} sur les invariants parahoriques.

    GL : une racine alpha(U_{p,k}) par classe de W_G/W_{L_P}. GSpin : une racine
    par classe parahorique de W_GSpin, obtenue en évaluant j(U_{p,k}) sur les
    valeurs propres de GSpin de cette classe.
    """
    n = p.n
    if not 1 <= k <= 2 * n or (k != 2 * n and k in p.delta):
        raise HeckeAlgebraError(f"U_{{p,{k}}} n'appartient pas à l'algèbre de Hecke de {p.label}")
    if groupe == 'GL':
        racines = (alpha_U(Refinement(n, pr.coset.rep), k) for pr in parahoric_cosets(n, p))
    else:
        image = jmath_hecke(HeckeWord.generator('GL', U, k), p)
        racines = (image.evaluate(_valeurs_gspin(nu, p), n) for nu in gspin_parahoric_classes(p))
    return sorted((m.normal_form() for m in racines), key=lambda m: (m.half_p, m.theta, m.eta))


def divides_as_multisets(petit, grand):
    return not (Counter(petit) - Counter(grand))


# ---------------------------------------------------------------------------
# Lieux de réductibilité et de non-régularité
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PairFlags:
    reducible: bool
    irregular: bool


def _en_expression(valeur):
    if isinstance(valeur, SatakeMonomial):
        return valeur.as_expr()
    return sympy.sympify(valeur)


def reducibility_regularity_flags(alphas, lam):
    """Pour chaque couple (r, s), r != s :

    reducible : p · p^{s-r} p^{lambda_s - lambda_r} α_r α_{s-1} = α_s α_{r-1}, soit p θ_r = θ_s ;
    irregular : même relation sans le facteur p, soit θ_r = θ_s.

    alphas associe à k ∈ 1..2n la valeur α(U°_{p,k}) : monôme, expression
    sympy, ou valuation (Fraction / int). Avec des valuations seule une
    condition nécessaire est testée.
    """
    m = 2 * lam.n
    valuations = all(isinstance(v, (int, Fraction)) for v in alphas.values())

    def alpha(k):
        if k == 0:
            return Fraction(0) if valuations else sympy.Integer(1)
        if k not in alphas:
            raise HeckeAlgebraError(f"α(U°_{{p,{k}}}) manquant")
        return Fraction(alphas[k]) if valuations else _en_expression(alphas[k])

    drapeaux = {}
    for r in range(1, m + 1):
        for s in range(1, m + 1):
            if r == s:
                continue
            decalage = (s - r) + (lam[s] - lam[r])
            if valuations:
                gauche = decalage + alpha(r) + alpha(s - 1)
                droite = alpha(s) + alpha(r - 1)
                drapeaux[(r, s)] = PairFlags(gauche + 1 == droite, gauche == droite)
            else:
                gauche = P ** decalage * alpha(r) * alpha(s - 1)
                droite = alpha(s) * alpha(r - 1)
                drapeaux[(r, s)] = PairFlags(
                    sympy.simplify(P * gauche - droite) == 0,
                    sympy.simplify(gauche - droite) == 0,
                )
    return drapeaux
