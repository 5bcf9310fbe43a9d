"""
Réseaux de caractères et de cocaractères de GL(2n) et GSpin(2n+1).

Conventions :
  - GL(2n) : base e_1, ..., e_{2n} (et duale e_1*, ..., e_{2n}*) ;
  - GSpin(2n+1) : base f_0, f_1, ..., f_n (et duale f_0*, ..., f_n*) ;
  - l'accouplement est l'accouplement de bases duales <e_i, e_j*> = delta_ij.

Le rang n est toujours passé explicitement ; aucune valeur n'est globale.
"""
import logging
from dataclasses import dataclass

from django.db import models

from core.exceptions import RankMismatchError, WeightError

logger = logging.getLogger(__name__)


class Groupe(models.TextChoices):
    GL = 'GL', 'GL(2n)'
    GSPIN = 'GSpin', 'GSpin(2n+1)'


def _verifier_rang(n):
    if not isinstance(n, int) or n < 1:
        raise RankMismatchError(f"Le rang doit être un entier n >= 1, reçu {n!r}")


@dataclass(frozen=True)
class _Vecteur:
    """Vecteur entier de longueur fixée par le rang n."""

    n: int
    coeffs: tuple

    def __post_init__(self):
        _verifier_rang(self.n)
        object.__setattr__(self, 'coeffs', tuple(int(c) for c in self.coeffs))
        attendu = self.longueur(self.n)
        if len(self.coeffs) != attendu:
            raise RankMismatchError(
                f"{type(self).__name__} de rang {self.n} : {attendu} coordonnées attendues, "
                f"{len(self.coeffs)} reçues"
            )

    @staticmethod
    def longueur(n):
        raise NotImplementedError

    @classmethod
    def zero(cls, n):
        return cls(n, (0,) * cls.longueur(n))

    @classmethod
    def base(cls, n, indice):
        """Vecteur de base ; l'indice suit la numérotation de la base (e_1.. ou f_0..)."""
        coeffs = [0] * cls.longueur(n)
        coeffs[indice - cls.premier_indice] = 1
        return cls(n, coeffs)

    premier_indice = 1

    def __getitem__(self, indice):
        return self.coeffs[indice - self.premier_indice]

    def _meme_type(self, autre):
        if type(autre) is not type(self) or autre.n != self.n:
            raise RankMismatchError(
                f"Opération entre {type(self).__name__}(n={self.n}) et "
                f"{type(autre).__name__}(n={getattr(autre, 'n', '?')})"
            )

    def __add__(self, autre):
        self._meme_type(autre)
        return type(self)(self.n, [a + b for a, b in zip(self.coeffs, autre.coeffs)])

    def __sub__(self, autre):
        self._meme_type(autre)
        return type(self)(self.n, [a - b for a, b in zip(self.coeffs, autre.coeffs)])

    def __neg__(self):
        return type(self)(self.n, [-a for a in self.coeffs])

    def __mul__(self, scalaire):
        return type(self)(self.n, [scalaire * a for a in self.coeffs])

    __rmul__ = __mul__

    def is_zero(self):
        return not any(self.coeffs)


class GLCharacter(_Vecteur):
    @staticmethod
    def longueur(n):
        return 2 * n


class GLCocharacter(_Vecteur):
    @staticmethod
    def longueur(n):
        return 2 * n


class GSpinCharacter(_Vecteur):
    premier_indice = 0

    @staticmethod
    def longueur(n):
        return n + 1


class GSpinCocharacter(_Vecteur):
    premier_indice = 0

    @staticmethod
    def longueur(n):
        return n + 1


@dataclass(frozen=True)
class PureWeight:
    """Poids pur lambda : lambda_i + lambda_{2n+1-i} = sw pour tout i <= n."""

    n: int
    coeffs: tuple
    sw: int

    def __post_init__(self):
        _verifier_rang(self.n)
        object.__setattr__(self, 'coeffs', tuple(int(c) for c in self.coeffs))
        if len(self.coeffs) != 2 * self.n:
            raise RankMismatchError(f"Poids de rang {self.n} : {2 * self.n} coordonnées attendues")
        if is_pure(self.coeffs) != self.sw:
            raise WeightError(f"Le poids {self.coeffs} n'est pas pur de poids {self.sw}")

    @classmethod
    def from_coeffs(cls, coeffs, dominant=False):
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) % 2:
            raise RankMismatchError(f"Un poids de GL(2n) a un nombre pair de coordonnées, reçu {len(coeffs)}")
        sw = is_pure(coeffs)
        if sw is None:
            raise WeightError(f"Le poids {coeffs} n'est pas pur")
        poids = cls(len(coeffs) // 2, coeffs, sw)
        if dominant and not poids.is_dominant:
            raise WeightError(f"Le poids {coeffs} n'est pas dominant")
        return poids

    @classmethod
    def zero(cls, n):
        return cls(n, (0,) * (2 * n), 0)

    @property
    def is_dominant(self):
        return all(a >= b for a, b in zip(self.coeffs, self.coeffs[1:]))

    def require_dominant(self):
        if not self.is_dominant:
            raise WeightError(f"Le poids {self.coeffs} n'est pas dominant")
        return self

    def __getitem__(self, indice):
        return self.coeffs[indice - 1]

    def partial_sum(self, k):
        """lambda_1 + ... + lambda_k."""
        return sum(self.coeffs[:k])

    def as_character(self):
        return GLCharacter(self.n, self.coeffs)


def is_pure(lam):
    """Renvoie sw(lambda) si toutes les sommes de paires coïncident, sinon None."""
    coeffs = tuple(getattr(lam, 'coeffs', lam))
    if not coeffs or len(coeffs) % 2:
        return None
    taille = len(coeffs)
    sommes = {coeffs[i] + coeffs[taille - 1 - i] for i in range(taille // 2)}
    return sommes.pop() if len(sommes) == 1 else None


# ---------------------------------------------------------------------------
# Applications de transfert
# ---------------------------------------------------------------------------

def jmath_char(mu, n):
    """j : X(GSpin) -> X(GL), f_i -> e_i - e_{2n+1-i}, f_0 -> e_{n+1} + ... + e_{2n}."""
    if not isinstance(mu, GSpinCharacter) or mu.n != n:
        raise RankMismatchError(f"Caractère GSpin de rang {getattr(mu, 'n', '?')} transféré au rang {n}")
    coeffs = [0] * (2 * n)
    for k in range(n, 2 * n):
        coeffs[k] = mu[0]
    for i in range(1, n + 1):
        coeffs[i - 1] += mu[i]
        coeffs[2 * n - i] -= mu[i]
    return GLCharacter(n, coeffs)


def jmath_char_inverse(lam):
    """Antécédent par j d'un caractère de GL(2n), ou None s'il n'est pas pur."""
    sw = is_pure(lam)
    if sw is None:
        return None
    coeffs = tuple(getattr(lam, 'coeffs', lam))
    n = len(coeffs) // 2
    return GSpinCharacter(n, (sw,) + coeffs[:n])


def jmath_vee_cochar(nu, n):
    """j∨(nu) = somme des <j(f_i), nu>_G f_i*."""
    if not isinstance(nu, GLCocharacter) or nu.n != n:
        raise RankMismatchError(f"Cocaractère GL de rang {getattr(nu, 'n', '?')} transféré au rang {n}")
    d0 = sum(nu.coeffs[n:])
    return GSpinCocharacter(n, [d0] + [nu[i] - nu[2 * n + 1 - i] for i in range(1, n + 1)])


def pairing_gl(mu, nu):
    if mu.n != nu.n:
        raise RankMismatchError("Accouplement entre rangs différents")
    return sum(a * b for a, b in zip(mu.coeffs, nu.coeffs))


def pairing_gspin(mu, nu):
    if mu.n != nu.n:
        raise RankMismatchError("Accouplement entre rangs différents")
    return sum(a * b for a, b in zip(mu.coeffs, nu.coeffs))


# ---------------------------------------------------------------------------
# Systèmes de racines
# ---------------------------------------------------------------------------

def simple_roots(groupe, n):
    """GL : a_i = e_i - e_{i+1} ; GSpin : b_i = f_i - f_{i+1} (i < n), b_n = f_n."""
    _verifier_rang(n)
    if groupe == Groupe.GL:
        return [GLCharacter.base(n, i) - GLCharacter.base(n, i + 1) for i in range(1, 2 * n)]
    racines = [GSpinCharacter.base(n, i) - GSpinCharacter.base(n, i + 1) for i in range(1, n)]
    racines.append(GSpinCharacter.base(n, n))
    return racines


def positive_roots(groupe, n):
    _verifier_rang(n)
    if groupe == Groupe.GL:
        return [
            GLCharacter.base(n, i) - GLCharacter.base(n, j)
            for i in range(1, 2 * n + 1) for j in range(i + 1, 2 * n + 1)
        ]
    f = [GSpinCharacter.base(n, i) for i in range(n + 1)]
    racines = [f[i] for i in range(1, n + 1)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            racines.append(f[i] + f[j])
            racines.append(f[i] - f[j])
    return racines


def rho(groupe, n):
    """Renvoie 2*rho (somme des racines positives) pour rester dans le réseau entier."""
    somme = GLCharacter.zero(n) if groupe == Groupe.GL else GSpinCharacter.zero(n)
    for racine in positive_roots(groupe, n):
        somme = somme + racine
    return somme
