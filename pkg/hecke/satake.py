"""
Monômes de Satake, profils de valuation et mots de Hecke.

Un monôme p^{a/2} θ_1^{e_1} ... θ_{2n}^{e_{2n}} η^m est exact : a est
l'exposant de p^{1/2}. La forme normale remplace chaque paire
θ_i θ_{2n+1-i} par η, de i = 1 à n.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import sympy

from core.exceptions import HeckeAlgebraError, RankMismatchError

P = sympy.Symbol('p', positive=True)
ETA = sympy.Symbol('eta', positive=True)


@lru_cache(maxsize=None)
def theta_symbols(n):
    """θ_1(p), ..., θ_{2n}(p) comme symboles sympy."""
    return sympy.symbols(f'theta_1:{2 * n + 1}', nonzero=True)


def _exposant_p(demi):
    if demi % 2 == 0:
        return str(demi // 2)
    return f"{demi}/2"


@dataclass(frozen=True)
class SatakeMonomial:
    half_p: int
    theta: tuple
    eta: int = 0

    def __post_init__(self):
        object.__setattr__(self, 'theta', tuple(int(e) for e in self.theta))
        if len(self.theta) % 2:
            raise RankMismatchError(f"{len(self.theta)} exposants θ : un nombre pair est attendu")

    @property
    def n(self):
        return len(self.theta) // 2

    @classmethod
    def one(cls, n):
        return cls(0, (0,) * (2 * n), 0)

    @classmethod
    def theta_slot(cls, n, i):
        exposants = [0] * (2 * n)
        exposants[i - 1] = 1
        return cls(0, tuple(exposants), 0)

    @classmethod
    def p_power(cls, n, half_p):
        return cls(int(half_p), (0,) * (2 * n), 0)

    @classmethod
    def eta_power(cls, n, m=1):
        return cls(0, (0,) * (2 * n), m)

    def _meme_rang(self, autre):
        if autre.n != self.n:
            raise RankMismatchError("Monômes de rangs différents")

    def __mul__(self, autre):
        self._meme_rang(autre)
        return SatakeMonomial(
            self.half_p + autre.half_p,
            tuple(a + b for a, b in zip(self.theta, autre.theta)),
            self.eta + autre.eta,
        )

    def inverse(self):
        return SatakeMonomial(-self.half_p, tuple(-e for e in self.theta), -self.eta)

    def __truediv__(self, autre):
        return self * autre.inverse()

    def __pow__(self, k):
        return SatakeMonomial(k * self.half_p, tuple(k * e for e in self.theta), k * self.eta)

    def shift_p(self, half_p):
        return SatakeMonomial(self.half_p + half_p, self.theta, self.eta)

    def normal_form(self):
        exposants = list(self.theta)
        eta = self.eta
        m = len(exposants)
        for i in range(m // 2):
            commun = min(exposants[i], exposants[m - 1 - i])
            exposants[i] -= commun
            exposants[m - 1 - i] -= commun
            eta += commun
        return SatakeMonomial(self.half_p, tuple(exposants), eta)

    def spin_equal(self, autre):
        return self.normal_form() == autre.normal_form()

    def valuation(self, profil):
        """v_p du monôme pour un profil de valuation donné."""
        if len(profil.t) != len(self.theta):
            raise RankMismatchError("Profil et monôme de longueurs différentes")
        return (
            Fraction(self.half_p, 2)
            + sum((Fraction(e) * t for e, t in zip(self.theta, profil.t)), Fraction(0))
            + self.eta * profil.eta_val
        )

    def as_expr(self):
        thetas = theta_symbols(self.n)
        expr = P ** sympy.Rational(self.half_p, 2) * ETA ** self.eta
        for symbole, e in zip(thetas, self.theta):
            expr *= symbole ** e
        return expr

    def to_json(self):
        return {'half_p': self.half_p, 'theta': list(self.theta), 'eta': self.eta}

    @classmethod
    def from_json(cls, donnees):
        return cls(int(donnees['half_p']), tuple(donnees['theta']), int(donnees.get('eta', 0)))

    def format(self):
        facteurs = []
        if self.half_p:
            facteurs.append(f"p^{{{self.half_p}/2}}" if self.half_p % 2 else f"p^{{{self.half_p // 2}}}")
        for i, e in enumerate(self.theta, start=1):
            if e == 1:
                facteurs.append(f"θ_{i}")
            elif e:
                facteurs.append(f"θ_{i}^{{{e}}}")
        if self.eta == 1:
            facteurs.append("η")
        elif self.eta:
            facteurs.append(f"η^{{{self.eta}}}")
        return ' * '.join(facteurs) if facteurs else '1'

    def __str__(self):
        return self.format()


@dataclass(frozen=True)
class ValuationProfile:
    """t_i = v_p(θ_i(p)), eta_val = v_p(η_p(p)) ; v_p(η_0(p)) = eta_val + sw."""

    t: tuple
    eta_val: Fraction = Fraction(0)
    sw: int = 0

    def __post_init__(self):
        object.__setattr__(self, 't', tuple(Fraction(x) for x in self.t))
        object.__setattr__(self, 'eta_val', Fraction(self.eta_val))

    @property
    def n(self):
        return len(self.t) // 2

    @property
    def eta0_val(self):
        return self.eta_val + self.sw

    def is_pure(self):
        m = len(self.t)
        return all(self.t[i] + self.t[m - 1 - i] == self.eta_val for i in range(m // 2))

    def has_distinct_values(self):
        return len(set(self.t)) == len(self.t)

    def to_json(self):
        return {'t': [str(x) for x in self.t], 'eta_val': str(self.eta_val), 'sw': self.sw}


# ---------------------------------------------------------------------------
# Mots de Hecke
# ---------------------------------------------------------------------------

U = 'U'
U_CIRC = 'U°'
U_SPIN = '𝒰'
V_SPIN = '𝒱'

FAMILLES = {
    'GL': (U,),
    'GL°': (U_CIRC,),
    'GSpin': (U_SPIN, V_SPIN),
}


@dataclass(frozen=True)
class HeckeWord:
    """Produit formel p^{half_p/2} · ∏ g^e ; les exposants négatifs sont admis."""

    family: str
    exponents: tuple = field(default=())
    half_p: int = 0

    def __post_init__(self):
        if self.family not in FAMILLES:
            raise HeckeAlgebraError(f"Famille de générateurs inconnue {self.family!r}")
        cumul = {}
        for (nom, indice), e in self.exponents:
            if nom not in FAMILLES[self.family]:
                raise HeckeAlgebraError(f"Générateur {nom} hors de la famille {self.family}")
            if nom == U_CIRC and indice == 0:
                # U°_{p,0} = 1
                continue
            cumul[(nom, indice)] = cumul.get((nom, indice), 0) + e
        object.__setattr__(self, 'exponents', tuple(sorted((g, e) for g, e in cumul.items() if e)))

    @classmethod
    def generator(cls, family, nom, indice=0, exposant=1):
        return cls(family, (((nom, indice), exposant),))

    @classmethod
    def unit(cls, family):
        return cls(family)

    def __mul__(self, autre):
        if autre.family != self.family:
            raise HeckeAlgebraError("Produit de mots de familles différentes")
        return HeckeWord(self.family, self.exponents + autre.exponents, self.half_p + autre.half_p)

    def inverse(self):
        return HeckeWord(self.family, tuple((g, -e) for g, e in self.exponents), -self.half_p)

    def __truediv__(self, autre):
        return self * autre.inverse()

    def __pow__(self, k):
        return HeckeWord(self.family, tuple((g, k * e) for g, e in self.exponents), k * self.half_p)

    def shift_p(self, half_p):
        return HeckeWord(self.family, self.exponents, self.half_p + half_p)

    def generators(self):
        return [g for g, _ in self.exponents]

    def evaluate(self, affectation, n):
        """Valeur du mot quand chaque générateur g vaut affectation(g) (ou affectation[g])."""
        valeur = SatakeMonomial.p_power(n, self.half_p)
        lire = affectation if callable(affectation) else affectation.__getitem__
        for generateur, e in self.exponents:
            valeur = valeur * lire(generateur) ** e
        return valeur

    def format(self):
        facteurs = [f"p^{{{_exposant_p(self.half_p)}}}"] if self.half_p else []
        for (nom, indice), e in self.exponents:
            symbole = f"{nom}_{{p,{indice}}}" if nom != V_SPIN else f"{nom}_p"
            facteurs.append(symbole if e == 1 else f"{symbole}^{{{e}}}")
        return ' * '.join(facteurs) if facteurs else '1'

    def __str__(self):
        return self.format()
