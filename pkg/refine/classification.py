"""
Raffinements d'Iwahori et parahoriques, critères spin et stratification.

Un raffinement est identifié à sa donnée de Weyl sigma ∈ S_{2n}. Il est
r-spin quand {sigma(1..r)} et {sigma(2n+1-r..2n)} s'apparient en paires de
somme 2n+1, et P-spin quand sigma ∈ W_G^0 · W_{L_P}.
"""
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from django.conf import settings
from django.db import models

from core.exceptions import BoundExceededError, MalformedPermutationError, RankMismatchError
from parabolic.paraboliques import all_spin_parabolics, from_xp, require_spin
from weyl.cosets import LeviCoset, all_cosets, coset_min_rep, coset_members
from weyl.permutations import Perm, all_perms, enumerate_wg0

logger = logging.getLogger(__name__)


class MethodeSpin(models.TextChoices):
    WEYL = 'weyl', 'Appartenance à W_G^0 · W_L'
    COMBINATORIAL = 'combinatoire', 'Critère X_P-spin'
    GAMMA = 'gamma', 'Stabilité de {1..r} par gamma'


@dataclass(frozen=True, order=True)
class Refinement:
    n: int
    sigma: Perm

    def __post_init__(self):
        if self.sigma.size != 2 * self.n:
            raise RankMismatchError(f"Raffinement de GL({2 * self.n}) avec une permutation de taille {self.sigma.size}")

    @classmethod
    def parse(cls, texte):
        sigma = Perm.parse(texte)
        if sigma.size % 2:
            raise MalformedPermutationError(
                f"Une permutation de S_(2n) est attendue, taille {sigma.size}", position=sigma.size
            )
        return cls(sigma.size // 2, sigma)

    @classmethod
    def of(cls, sigma):
        return cls(sigma.size // 2, sigma)

    def __str__(self):
        return self.sigma.format()


@dataclass(frozen=True)
class ParahoricRefinement:
    n: int
    parabolic: object
    coset: LeviCoset

    def __str__(self):
        return self.coset.format()


@dataclass(frozen=True)
class GammaMap:
    values: tuple

    def __call__(self, i):
        return self.values[i - 1]

    def preserves(self, r):
        return {self.values[i] for i in range(r)} == set(range(1, r + 1))


@dataclass(frozen=True)
class SpinProfile:
    spin_set: frozenset
    optimal: object

    @property
    def dimension(self):
        """Dimension prédite de la famille symplectique : #X_P + 1."""
        return len(self.spin_set) + 1


def gamma(r):
    """gamma(i) = 2n+1 - sigma^{-1}(2n+1 - sigma(i))."""
    m = 2 * r.n
    inverse = r.sigma.inverse()
    return GammaMap(tuple(m + 1 - inverse(m + 1 - r.sigma(i)) for i in range(1, r.n + 1)))


def is_r_spin(r, k):
    if not 1 <= k <= r.n:
        raise RankMismatchError(f"Indice {k} hors de 1..{r.n}")
    m = 2 * r.n
    debut = {m + 1 - r.sigma(i) for i in range(1, k + 1)}
    fin = {r.sigma(j) for j in range(m + 1 - k, m + 1)}
    return debut == fin


@lru_cache(maxsize=None)
def _wg0_coset_reps(n, delta):
    return frozenset(coset_min_rep(nu, delta) for nu in enumerate_wg0(n))


def is_P_spin(r, p, method=MethodeSpin.COMBINATORIAL):
    p = require_spin(p)
    if p.n != r.n:
        raise RankMismatchError("Raffinement et parabolique de rangs différents")
    if method == MethodeSpin.WEYL:
        return coset_min_rep(r.sigma, p.delta) in _wg0_coset_reps(r.n, p.delta)
    if method == MethodeSpin.GAMMA:
        g = gamma(r)
        return all(g.preserves(k) for k in p.xp)
    return all(is_r_spin(r, k) for k in p.xp)


def optimal_parabolic(r):
    spin_set = frozenset(k for k in range(1, r.n + 1) if is_r_spin(r, k))
    return SpinProfile(spin_set, from_xp(spin_set, r.n))


def _borne_enumeration(bound):
    return settings.ENUMERATION_BOUND if bound is None else bound


def _classer(perms, n):
    return [(optimal_parabolic(Refinement(n, sigma)).optimal, Refinement(n, sigma)) for sigma in perms]


def stratify(n, bound=None, workers=None):
    """Partition de S_{2n} par parabolique optimal, dans l'ordre canonique des paraboliques."""
    bound = _borne_enumeration(bound)
    if n > bound:
        raise BoundExceededError(f"n = {n} dépasse la borne d'énumération {bound}")
    workers = workers or settings.STRATIFY_WORKERS
    debut = time.perf_counter()
    perms = all_perms(2 * n)
    if workers > 1:
        taille = max(1, len(perms) // workers)
        paquets = [perms[i:i + taille] for i in range(0, len(perms), taille)]
        with ThreadPoolExecutor(max_workers=workers) as executeur:
            resultats = [couple for lot in executeur.map(lambda lot: _classer(lot, n), paquets) for couple in lot]
    else:
        resultats = _classer(perms, n)
    strates = {p: [] for p in all_spin_parabolics(n)}
    for parabolique, raffinement in resultats:
        strates[parabolique].append(raffinement)
    for membres in strates.values():
        membres.sort()
    logger.info(
        "Stratification de S_%s : %s raffinements en %.3f s (%s fil(s))",
        2 * n, len(perms), time.perf_counter() - debut, workers,
    )
    return strates


def parahoric_restrict(r, p):
    if p.n != r.n:
        raise RankMismatchError("Raffinement et parabolique de rangs différents")
    return ParahoricRefinement(r.n, p, LeviCoset.of(r.sigma, p.delta))


def extensions(pr):
    """Raffinements d'Iwahori au-dessus d'un raffinement parahorique."""
    return [Refinement(pr.n, sigma) for sigma in coset_members(pr.coset)]


def parahoric_is_spin(pr):
    p = require_spin(pr.parabolic)
    return pr.coset.rep in _wg0_coset_reps(pr.n, p.delta)


def parahoric_cosets(n, p):
    """Tous les raffinements P-parahoriques, dans l'ordre des représentants minimaux."""
    cosets = all_cosets(2 * n, p.delta)
    return [ParahoricRefinement(n, p, coset) for coset in cosets]
