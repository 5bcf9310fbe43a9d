"""
Lecture des options textuelles des commandes et de l'API.
"""
from fractions import Fraction

from core.exceptions import MissingDataError, RankMismatchError, WeightError
from hecke.satake import ValuationProfile
from rootdata.lattices import PureWeight
from weyl.permutations import Perm


def exiger(valeur, option):
    if valeur is None or valeur == '':
        raise MissingDataError(f"L'option {option} est obligatoire")
    return valeur


def lire_poids(texte):
    """'12,1,-1,-12' -> PureWeight dominant."""
    texte = exiger(texte, '--lambda')
    try:
        coeffs = [int(x) for x in texte.split(',')]
    except ValueError:
        raise WeightError(f"Poids illisible {texte!r}") from None
    return PureWeight.from_coeffs(coeffs, dominant=True)


def lire_pentes(texte):
    """'1=11,2=0,3=11' -> {1: Fraction(11), 2: Fraction(0), 3: Fraction(11)}."""
    texte = exiger(texte, '--slopes')
    pentes = {}
    for morceau in texte.split(','):
        indice, _, valeur = morceau.partition('=')
        if not valeur:
            raise MissingDataError(f"Pente sans valeur : {morceau!r}")
        try:
            pentes[int(indice)] = Fraction(valeur.strip())
        except ValueError:
            raise RankMismatchError(f"Pente illisible {morceau!r}") from None
    return pentes


def lire_profil(texte):
    """'1/2,-23/2,23/2,-1/2' -> ValuationProfile ; v_p(η) = t_1 + t_2n."""
    try:
        t = [Fraction(x.strip()) for x in texte.split(',')]
    except ValueError:
        raise RankMismatchError(f"Profil illisible {texte!r}") from None
    if not t or len(t) % 2:
        raise RankMismatchError("Un profil a 2n valuations")
    return ValuationProfile(tuple(t), t[0] + t[-1])


def lire_joint(textes):
    """['2134:1=11,2=0,3=1', ...] -> [(Perm, pentes), ...]."""
    systemes = []
    for texte in textes or ():
        sigma, separateur, pentes = texte.partition(':')
        if not separateur:
            raise MissingDataError(f"--joint attend 'sigma:pentes', reçu {texte!r}")
        systemes.append((Perm.parse(sigma), lire_pentes(pentes)))
    return systemes
