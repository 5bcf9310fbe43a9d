"""
Bascule d'un raffinement optimalement P-spin vers un raffinement B-spin.

Chaque étape compose sigma à droite par une transposition (i, j) et ajoute
au moins i à l'ensemble des r pour lesquels le raffinement est r-spin.
"""
import logging
from dataclasses import dataclass

from core.exceptions import AlreadyBSpinError, SwitchingError
from weyl.permutations import Perm
from .classification import Refinement, is_r_spin, optimal_parabolic

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SwitchingStep:
    i: int
    j: int
    before: Refinement
    after: Refinement
    spin_set: frozenset

    @property
    def window(self):
        return (self.i, self.j)


def _borne_k(i, spin_set, n):
    """Plus petit élément de X strictement supérieur à i-1, sinon 2n-i."""
    au_dessus = [x for x in spin_set if x > i - 1]
    return min(au_dessus) if au_dessus else 2 * n - i


def improve_spin_step(r):
    """Renvoie (i, j, sigma·(i, j)) pour le plus petit i ∉ X."""
    profil = optimal_parabolic(r)
    spin_set = profil.spin_set
    n, m = r.n, 2 * r.n
    manquants = [i for i in range(1, n + 1) if i not in spin_set]
    if not manquants:
        raise AlreadyBSpinError(f"{r} est déjà B-spin")
    i = manquants[0]
    cible = m + 1 - r.sigma(m + 1 - i)
    j = r.sigma.inverse()(cible)
    k = _borne_k(i, spin_set, n)
    if not i + 1 <= j <= k:
        raise SwitchingError(f"{r} : l'indice j = {j} sort de la fenêtre [{i + 1}, {k}]")
    resultat = Refinement(n, r.sigma * Perm.transposition(m, i, j))
    attendu = spin_set | {i}
    if not all(is_r_spin(resultat, x) for x in attendu):
        raise SwitchingError(f"{resultat} n'est pas {sorted(attendu)}-spin")
    logger.debug("Bascule %s -> %s par (%s, %s), X = %s", r, resultat, i, j, sorted(spin_set))
    return i, j, resultat


def switching_path(r):
    """Étapes successives jusqu'à un raffinement B-spin."""
    etapes = []
    courant = r
    while len(optimal_parabolic(courant).spin_set) < r.n:
        spin_set = optimal_parabolic(courant).spin_set
        i, j, suivant = improve_spin_step(courant)
        etapes.append(SwitchingStep(i, j, courant, suivant, spin_set))
        courant = suivant
    return etapes


def to_B_spin(r):
    """(tau, raffinement B-spin) avec Psi(résultat) = Psi(r)·tau."""
    etapes = switching_path(r)
    resultat = etapes[-1].after if etapes else r
    return [(e.i, e.j) for e in etapes], resultat
