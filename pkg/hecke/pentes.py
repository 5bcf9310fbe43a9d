"""
Pentes, bornes de non-criticité et résolution des profils de valuation.

La pente d'un raffinement en l'indice k est
  v_p(alpha(U°_{p,k})) = (lambda_1 + ... + lambda_k) - k(2n-k)/2 + somme_{j<=k} t_{sigma(j)}.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction

import sympy

from core.exceptions import MissingDataError, RankMismatchError
from refine.classification import Refinement
from .algebre import alpha_U_circ
from .satake import ValuationProfile

logger = logging.getLogger(__name__)


def slope(r, k, lam, profil):
    if len(profil.t) != 2 * r.n:
        raise RankMismatchError("Profil de longueur différente de 2n")
    return alpha_U_circ(r, k, lam).valuation(profil)


def _en_fraction(valeur):
    valeur = sympy.nsimplify(valeur)
    return Fraction(int(valeur.p), int(valeur.q))


# ---------------------------------------------------------------------------
# Bornes de non-criticité
# ---------------------------------------------------------------------------

def slope_bounds(lam, p):
    """lambda_r - lambda_{r+1} + 1 pour chaque r avec a_r ∉ Delta_P."""
    lam.require_dominant()
    return {
        r: lam[r] - lam[r + 1] + 1
        for r in range(1, 2 * lam.n)
        if r not in p.delta
    }


@dataclass(frozen=True)
class LigneAudit:
    index: int
    bound: int
    slope: Fraction

    @property
    def ok(self):
        return self.slope < self.bound


def audit_slopes(raffinement, lam, donnees, p):
    """Une ligne par indice requis ; donnees est un dict index -> pente ou un ValuationProfile."""
    lignes = []
    for r, borne in slope_bounds(lam, p).items():
        if isinstance(donnees, ValuationProfile):
            if raffinement is None:
                raise MissingDataError("Un raffinement est nécessaire pour calculer les pentes d'un profil")
            pente = slope(raffinement, r, lam, donnees)
        elif r in donnees:
            pente = Fraction(donnees[r])
        else:
            raise MissingDataError(f"Pente manquante pour l'indice {r}")
        lignes.append(LigneAudit(r, borne, pente))
    return lignes


def non_critical_slope(raffinement, lam, donnees, p):
    """Vrai si v_p(alpha(U°_{p,r})) < lambda_r - lambda_{r+1} + 1 pour tout a_r ∉ Delta_P."""
    if raffinement is not None and not isinstance(raffinement, Refinement):
        raffinement = Refinement(raffinement.n, raffinement.coset.rep)
    return all(ligne.ok for ligne in audit_slopes(raffinement, lam, donnees, p))


# ---------------------------------------------------------------------------
# Résolution du système linéaire des pentes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InconsistencyCertificate:
    """Première équation violée et combinaison rationnelle y telle que y·A = 0, y·b = residual != 0."""

    first_violation: str
    combination: dict
    residual: Fraction

    def to_json(self):
        return {
            'verdict': 'incoherent',
            'premiere_violation': self.first_violation,
            'combinaison': {cle: str(v) for cle, v in self.combination.items()},
            'residu': str(self.residual),
        }


@dataclass(frozen=True)
class ProfileSolution:
    profile: ValuationProfile
    free_parameters: tuple = field(default=())

    @property
    def is_parametrized(self):
        return bool(self.free_parameters)

    def to_json(self):
        return {
            'verdict': 'coherent',
            'profil': self.profile.to_json(),
            'parametres_libres': list(self.free_parameters),
        }


def _equations(systemes, lam):
    """Lignes (libellé, coefficients sur t_1..t_2n, e, second membre)."""
    n = lam.n
    m = 2 * n
    lignes = []
    for i in range(1, n + 1):
        coeffs = [0] * (m + 1)
        coeffs[i - 1] = 1
        coeffs[m - i] = 1
        coeffs[m] = -1
        lignes.append((f"purete i={i}", coeffs, Fraction(0)))
    for sigma, pentes in systemes:
        for k in sorted(pentes):
            if not 1 <= k <= m:
                raise RankMismatchError(f"Indice de pente {k} hors de 1..{m}")
            coeffs = [0] * (m + 1)
            for j in range(1, k + 1):
                coeffs[sigma(j) - 1] = 1
            second = Fraction(pentes[k]) - lam.partial_sum(k) + Fraction(k * (m - k), 2)
            lignes.append((f"{sigma.format()} k={k}", coeffs, second))
    return lignes


def _matrice(lignes):
    a = sympy.Matrix([[sympy.Rational(c) for c in coeffs] for _, coeffs, _ in lignes])
    b = sympy.Matrix([sympy.Rational(second.numerator, second.denominator) for _, _, second in lignes])
    return a, b


def _certificat(lignes):
    for fin in range(1, len(lignes) + 1):
        a, b = _matrice(lignes[:fin])
        if a.rank() == a.row_join(b).rank():
            continue
        for y in a.T.nullspace():
            if y[fin - 1] != 0:
                y = y / y[fin - 1]
                residu = (y.T * b)[0]
                combinaison = {
                    lignes[i][0]: _en_fraction(y[i])
                    for i in range(fin) if y[i] != 0
                }
                return InconsistencyCertificate(lignes[fin - 1][0], combinaison, _en_fraction(residu))
    return None


def solve_profile(slopes, lam, sigma, joint=()):
    """Profil de valuation compatible avec les pentes déclarées, ou certificat d'incohérence.

    joint contient d'autres couples (sigma', pentes') pour des raffinements de
    la même représentation : tous partagent les mêmes t_i.
    """
    lam.require_dominant()
    if sigma.size != 2 * lam.n:
        raise RankMismatchError("Permutation et poids de rangs différents")
    systemes = [(sigma, dict(slopes))] + [(s, dict(pentes)) for s, pentes in joint]
    lignes = _equations(systemes, lam)
    m = 2 * lam.n
    inconnues = sympy.symbols(f't_1:{m + 1}') + (sympy.Symbol('e'),)
    a, b = _matrice(lignes)
    solutions = sympy.linsolve((a, b), *inconnues)
    if solutions == sympy.S.EmptySet:
        certificat = _certificat(lignes)
        logger.warning(
            "Système de pentes incohérent : %s (résidu %s)",
            certificat.first_violation, certificat.residual,
        )
        return certificat
    (solution,) = solutions
    libres = sorted(set().union(*(sympy.sympify(x).free_symbols for x in solution)), key=str)
    nulles = {s: 0 for s in libres}
    valeurs = [_en_fraction(sympy.sympify(x).subs(nulles)) for x in solution]
    profil = ValuationProfile(tuple(valeurs[:m]), valeurs[m], lam.sw)
    if libres:
        logger.info("Profil de pentes sous-déterminé : paramètres libres %s", [str(s) for s in libres])
    return ProfileSolution(profil, tuple(str(s) for s in libres))
