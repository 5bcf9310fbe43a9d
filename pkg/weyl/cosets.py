"""
Classes à gauche sigma·W_L modulo un sous-groupe de Levi standard.

Un Levi standard de S_m est donné par delta ⊂ {1..m-1} : les positions i et
i+1 sont dans le même bloc exactement quand i ∈ delta. La multiplication à
droite par W_L permute les positions à l'intérieur des blocs ; le
représentant minimal range donc les valeurs de chaque bloc par ordre croissant.
"""
import itertools
from dataclasses import dataclass

from django.db import models

from core.exceptions import RankMismatchError
from .permutations import Perm


class Trichotomie(models.TextChoices):
    PERMUTES = 'permute', 's permute la classe'
    ALL_SHORTER = 'plus_courts', 'l(sv) < l(v) pour tout v'
    ALL_LONGER = 'plus_longs', 'l(sv) > l(v) pour tout v'


def delta_of(parabolique):
    """Accepte un parabolique (attribut delta) ou directement un ensemble d'indices."""
    return frozenset(getattr(parabolique, 'delta', parabolique))


def levi_blocks(m, delta):
    """Blocs de positions [(1, 2), (3,), ...] du Levi défini par delta."""
    delta = delta_of(delta)
    if any(not 1 <= i < m for i in delta):
        raise RankMismatchError(f"Racines simples {sorted(delta)} hors de 1..{m - 1}")
    blocs, courant = [], [1]
    for i in range(1, m):
        if i in delta:
            courant.append(i + 1)
        else:
            blocs.append(tuple(courant))
            courant = [i + 1]
    blocs.append(tuple(courant))
    return blocs


def coset_min_rep(sigma, parabolique):
    """Représentant de longueur minimale de sigma·W_L."""
    images = list(sigma.images)
    for bloc in levi_blocks(sigma.size, delta_of(parabolique)):
        valeurs = sorted(images[p - 1] for p in bloc)
        for p, v in zip(bloc, valeurs):
            images[p - 1] = v
    return Perm(tuple(images))


@dataclass(frozen=True, order=True)
class LeviCoset:
    """Classe rep·W_L, le représentant étant canonique dès la construction."""

    rep: Perm
    delta: frozenset

    @classmethod
    def of(cls, sigma, parabolique):
        delta = delta_of(parabolique)
        return cls(coset_min_rep(sigma, delta), delta)

    @property
    def size(self):
        return self.rep.size

    def blocks(self):
        return levi_blocks(self.size, self.delta)

    def value_blocks(self):
        """Ensembles de valeurs portés par chaque bloc, par exemple ({1,2}, {3,4})."""
        return tuple(frozenset(self.rep(p) for p in bloc) for bloc in self.blocks())

    def block_of_value(self, valeur):
        position = self.rep.inverse()(valeur)
        for numero, bloc in enumerate(self.blocks()):
            if position in bloc:
                return numero
        raise ValueError(valeur)

    def __contains__(self, sigma):
        return coset_min_rep(sigma, self.delta) == self.rep

    def members(self):
        return coset_members(self)

    def left_multiply(self, w):
        """Classe w·rep·W_L."""
        return LeviCoset.of(w * self.rep, self.delta)

    def format(self):
        """Notation {12}⊔{34}."""
        return '⊔'.join(
            '{' + ''.join(str(v) for v in sorted(valeurs)) + '}'
            for valeurs in self.value_blocks()
        )

    def __str__(self):
        return self.format()


def coset_members(coset):
    """Tous les éléments de la classe, triés."""
    blocs = coset.blocks()
    choix = [itertools.permutations([coset.rep(p) for p in bloc]) for bloc in blocs]
    membres = []
    for combinaison in itertools.product(*choix):
        images = [0] * coset.size
        for bloc, valeurs in zip(blocs, combinaison):
            for p, v in zip(bloc, valeurs):
                images[p - 1] = v
        membres.append(Perm(tuple(images)))
    return sorted(membres)


def all_cosets(m, parabolique):
    """W_G/W_L dans l'ordre des représentants minimaux."""
    delta = delta_of(parabolique)
    reps = {coset_min_rep(Perm(images), delta) for images in itertools.permutations(range(1, m + 1))}
    return [LeviCoset(rep, delta) for rep in sorted(reps)]


def simple_trichotomy(a, coset):
    """Position de s_a (agissant à gauche) par rapport à la classe.

    s_a échange les valeurs a et a+1 : si elles sont dans le même bloc la
    classe est stable, sinon le sens de la longueur est le même pour tous
    les membres et se lit sur l'ordre des blocs.
    """
    if not 1 <= a < coset.size:
        raise RankMismatchError(f"Réflexion simple s_{a} hors de S_{coset.size}")
    bloc_a, bloc_suivant = coset.block_of_value(a), coset.block_of_value(a + 1)
    if bloc_a == bloc_suivant:
        return Trichotomie.PERMUTES
    if bloc_a < bloc_suivant:
        return Trichotomie.ALL_LONGER
    return Trichotomie.ALL_SHORTER
