"""
Applications phi_ij^lambda entre algèbres de Hecke fractionnaires.

Pour i <= k < j :
  phi_ij(U°_{p,k}) = p^{(i-j)+(lambda_i-lambda_j)} U°_{p,j} (U°_{p,j-1})^{-1} U°_{p,i-1} (U°_{p,i})^{-1} U°_{p,k},
avec U°_{p,0} = 1 ; les autres générateurs sont fixes. Si sigma' = sigma·(i, j),
alors alpha_{sigma'} ∘ phi_ij = alpha_sigma.
"""
from dataclasses import dataclass

from core.exceptions import HeckeAlgebraError
from .satake import HeckeWord, U_CIRC


def _generateur(k):
    return HeckeWord.generator('GL°', U_CIRC, k)


def phi_factor(i, j, lam):
    """Facteur multiplicatif commun aux images des U°_{p,k}, i <= k < j."""
    return (
        _generateur(j) / _generateur(j - 1) * _generateur(i - 1) / _generateur(i)
    ).shift_p(2 * ((i - j) + (lam[i] - lam[j])))


def phi_ij(mot, i, j, lam):
    if not 1 <= i < j <= 2 * lam.n:
        raise HeckeAlgebraError(f"phi_ij demande 1 <= i < j <= 2n, reçu ({i}, {j})")
    if mot.family != 'GL°':
        raise HeckeAlgebraError("phi_ij agit sur les opérateurs normalisés U°_{p,r}")
    facteur = phi_factor(i, j, lam)
    image = HeckeWord('GL°', half_p=mot.half_p)
    for (nom, k), e in mot.exponents:
        generateur = HeckeWord.generator('GL°', nom, k)
        if i <= k < j:
            generateur = facteur * generateur
        image = image * generateur ** e
    return image


@dataclass(frozen=True)
class HeckeTransfer:
    """phi_tau = phi_{i_k,j_k} ∘ ... ∘ phi_{i_1,j_1} : phi_{i_1,j_1} s'applique en premier."""

    taus: tuple
    lam: object

    def __call__(self, mot):
        for i, j in self.taus:
            mot = phi_ij(mot, i, j, self.lam)
        return mot

    def image(self, k):
        return self(_generateur(k))

    def coefficient(self, k):
        """Demi-exposant de p dans phi_tau(U°_{p,k})."""
        return self.image(k).half_p


def phi_tau(taus, lam):
    return HeckeTransfer(tuple(tuple(t) for t in taus), lam)
