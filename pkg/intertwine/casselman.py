"""
Vecteurs de la série principale et opérateurs de Casselman T_s.

f_w^nu est la fonction d'Iwahori supportée par B w Iw_G dans Ind_B^G θ^nu,
normalisée par f_w^nu(w) = 1. Pour s = (a, a+1) :
  T_s(f_w) = p^{-1} f_{sw} + (c_s - 1) f_w       si l(sw) > l(w),
  T_s(f_w) = f_{sw} + (c_s - p^{-1}) f_w         si l(sw) < l(w),
et le vecteur obtenu vit dans la série principale tordue par nu·s.
"""
import logging
from dataclasses import dataclass, field

from core.exceptions import IntertwiningError
from hecke.satake import P, theta_symbols
from weyl.cosets import LeviCoset, Trichotomie, coset_members, simple_trichotomy
from weyl.permutations import Perm, bruhat_length
from .ratfunc import ONE, RatFunc, ZERO

logger = logging.getLogger(__name__)

P_INVERSE = RatFunc(1 / P)


def _verifier_indice(a, n):
    if not n + 1 <= a <= 2 * n - 1:
        raise IntertwiningError(f"s = (a, a+1) est attendu dans le bloc inférieur n+1 <= a <= 2n-1, reçu a = {a}")


def c_s(a, twist):
    """c_s(θ^nu) = (1 - p^{-1} θ^nu(s)) / (1 - θ^nu(s)), θ^nu(s) = θ_{nu(a)} / θ_{nu(a+1)}."""
    n = twist.size // 2
    _verifier_indice(a, n)
    thetas = theta_symbols(n)
    rapport = thetas[twist(a) - 1] / thetas[twist(a + 1) - 1]
    return RatFunc((1 - rapport / P) / (1 - rapport))


@dataclass
class PSVector:
    twist: Perm
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {w: RatFunc.of(c) for w, c in self.terms.items() if not RatFunc.of(c).is_zero()}

    def add_term(self, w, coefficient):
        total = self.terms.get(w, ZERO) + coefficient
        if total.is_zero():
            self.terms.pop(w, None)
        else:
            self.terms[w] = total

    def __eq__(self, autre):
        return (
            isinstance(autre, PSVector)
            and self.twist == autre.twist
            and self.terms.keys() == autre.terms.keys()
            and all(self.terms[w] == autre.terms[w] for w in self.terms)
        )


def T_s(v, a):
    n = v.twist.size // 2
    _verifier_indice(a, n)
    s = Perm.simple(v.twist.size, a)
    c = c_s(a, v.twist)
    image = PSVector(v.twist * s)
    for w, coefficient in v.terms.items():
        sw = s * w
        if bruhat_length(sw) > bruhat_length(w):
            image.add_term(sw, coefficient * P_INVERSE)
            image.add_term(w, coefficient * (c - ONE))
        else:
            image.add_term(sw, coefficient)
            image.add_term(w, coefficient * (c - P_INVERSE))
    return image


@dataclass
class ParahoricVector:
    """Combinaison des h_{[w]} = somme des f_{w'} pour [w'] = [w]."""

    twist: Perm
    delta: frozenset
    cosets: dict = field(default_factory=dict)

    def __post_init__(self):
        self.delta = frozenset(self.delta)
        self.cosets = {k: RatFunc.of(c) for k, c in self.cosets.items() if not RatFunc.of(c).is_zero()}

    def add_term(self, coset, coefficient):
        total = self.cosets.get(coset, ZERO) + coefficient
        if total.is_zero():
            self.cosets.pop(coset, None)
        else:
            self.cosets[coset] = total

    def coefficient(self, coset):
        return self.cosets.get(coset, ZERO)


def expand(vecteur):
    image = PSVector(vecteur.twist)
    for coset, coefficient in vecteur.cosets.items():
        for w in coset_members(coset):
            image.add_term(w, coefficient)
    return image


def recollect(vecteur, delta):
    """Regroupe un vecteur d'Iwahori invariant par W_L en vecteur parahorique."""
    delta = frozenset(delta)
    resultat = ParahoricVector(vecteur.twist, delta)
    vus = set()
    for w in vecteur.terms:
        coset = LeviCoset.of(w, delta)
        if coset in vus:
            continue
        vus.add(coset)
        coefficients = [vecteur.terms.get(membre, ZERO) for membre in coset_members(coset)]
        if any(c != coefficients[0] for c in coefficients[1:]):
            raise IntertwiningError(f"Coefficients non constants sur la classe {coset}")
        resultat.add_term(coset, coefficients[0])
    return resultat


def parahoric_T_s(vecteur, a):
    """T_s sur les h_{[w]}, selon la position de s par rapport à la classe."""
    n = vecteur.twist.size // 2
    _verifier_indice(a, n)
    s = Perm.simple(vecteur.twist.size, a)
    c = c_s(a, vecteur.twist)
    image = ParahoricVector(vecteur.twist * s, vecteur.delta)
    for coset, coefficient in vecteur.cosets.items():
        cas = simple_trichotomy(a, coset)
        if cas == Trichotomie.PERMUTES:
            image.add_term(coset, coefficient * c)
        elif cas == Trichotomie.ALL_LONGER:
            image.add_term(coset.left_multiply(s), coefficient * P_INVERSE)
            image.add_term(coset, coefficient * (c - ONE))
        else:
            image.add_term(coset.left_multiply(s), coefficient)
            image.add_term(coset, coefficient * (c - P_INVERSE))
    return image
