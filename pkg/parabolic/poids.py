"""
Combinatoire des poids purs dans une classe parabolique.

Base utilisée pour les écarts de poids :
  alpha_0 = (1, ..., 1),
  alpha_i = (1^i, 0, ..., 0, (-1)^i) pour 1 <= i <= n-1,
  alpha_n = (1^n, 0^n).
"""
import logging
from dataclasses import dataclass

from core.exceptions import RankMismatchError, WeightError
from rootdata.lattices import PureWeight
from .paraboliques import require_spin

logger = logging.getLogger(__name__)


def _meme_rang(lam, base):
    if lam.n != base.n:
        raise RankMismatchError(f"Poids de rangs {lam.n} et {base.n}")


def weight_in_parabolic_coset(lam, base, p):
    """lambda_i - lambda_{i+1} = base_i - base_{i+1} pour tout a_i ∈ Delta_P."""
    _meme_rang(lam, base)
    return all(lam[i] - lam[i + 1] == base[i] - base[i + 1] for i in p.delta)


def pure_parabolic_dim(p):
    return len(require_spin(p).xp) + 1


def alpha_basis(n):
    """Vecteurs alpha_0, ..., alpha_n."""
    vecteurs = [(1,) * (2 * n)]
    for i in range(1, n):
        vecteurs.append((1,) * i + (0,) * (2 * n - 2 * i) + (-1,) * i)
    vecteurs.append((1,) * n + (0,) * n)
    return vecteurs


@dataclass(frozen=True)
class AlphaDecomposition:
    mu: tuple
    nonnegative: bool

    @property
    def sw_gap(self):
        return 2 * self.mu[0] + self.mu[-1]


def alpha_basis_decompose(lam, base, require_even_gap=True):
    """Coefficients (mu_0, ..., mu_n) avec lambda = base + somme mu_i alpha_i.

    alpha_n porte un écart de pureté impair ; par défaut un écart impair est
    refusé, comme pour les poids qui interviennent dans j_lambda.
    """
    _meme_rang(lam, base)
    n = lam.n
    ecart = [a - b for a, b in zip(lam.coeffs, base.coeffs)]
    saut = lam.sw - base.sw
    if require_even_gap and saut % 2:
        raise WeightError(f"Écart de pureté impair ({saut}) entre {lam.coeffs} et {base.coeffs}")
    mu = [ecart[n]]
    mu.extend(ecart[k - 1] - ecart[k] for k in range(1, n))
    mu.append(ecart[n - 1] - ecart[n])
    decomposition = AlphaDecomposition(tuple(mu), all(m >= 0 for m in mu))
    reconstruit = list(base.coeffs)
    for m, alpha in zip(decomposition.mu, alpha_basis(n)):
        reconstruit = [r + m * a for r, a in zip(reconstruit, alpha)]
    if tuple(reconstruit) != lam.coeffs:
        raise WeightError(f"{lam.coeffs} - {base.coeffs} n'est pas combinaison des alpha_i")
    return decomposition


def crit_range(lam):
    """Crit(lambda) = {j : -lambda_{n+1} >= j >= -lambda_n}."""
    lam.require_dominant()
    return range(-lam[lam.n], -lam[lam.n + 1] + 1)


def j_lambda(j, lam, base):
    """j - sw(lambda - base)/2."""
    _meme_rang(lam, base)
    saut = lam.sw - base.sw
    if saut % 2:
        raise WeightError(f"Écart de pureté impair ({saut}) : j_lambda non entier")
    return j - saut // 2


def random_weight_in_coset(base, p, rng, amplitude=3):
    """Poids dominant pur dans la classe P-parabolique de base.

    Seuls mu_0 et les mu_i avec i ∈ X_P varient, ce qui laisse intacts les
    écarts lambda_i - lambda_{i+1} pour a_i ∈ Delta_P.
    """
    p = require_spin(p)
    n = base.n
    coeffs = list(base.coeffs)
    alphas = alpha_basis(n)
    for indice in [0] + sorted(p.xp):
        m = rng.randint(0, amplitude)
        coeffs = [c + m * a for c, a in zip(coeffs, alphas[indice])]
    return PureWeight.from_coeffs(coeffs, dominant=base.is_dominant)
