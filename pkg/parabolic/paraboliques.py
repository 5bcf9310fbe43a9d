"""
Paraboliques standard de GL(2n) et paraboliques spin.

Un parabolique est décrit par delta ⊂ {1..2n-1}, les indices i tels que
a_i ∈ Delta_P. Il est spin quand delta est stable par i -> 2n - i ; on lui
associe alors X_P = {i <= n : i ∉ delta}.
"""
import itertools
import logging
from dataclasses import dataclass

from core.exceptions import NonSpinParabolicError, RankMismatchError
from rootdata.lattices import GLCocharacter
from weyl.cosets import levi_blocks

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StandardParabolic:
    n: int
    delta: frozenset

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise RankMismatchError(f"Rang invalide {self.n!r}")
        delta = frozenset(int(i) for i in self.delta)
        object.__setattr__(self, 'delta', delta)
        if any(not 1 <= i <= 2 * self.n - 1 for i in delta):
            raise RankMismatchError(f"Racines simples {sorted(delta)} hors de 1..{2 * self.n - 1}")

    @property
    def size(self):
        return 2 * self.n

    @property
    def composition(self):
        return tuple(len(bloc) for bloc in levi_blocks(self.size, self.delta))

    @property
    def block_count(self):
        return len(self.composition)

    @property
    def is_spin(self):
        return all((2 * self.n - i) in self.delta for i in self.delta)

    @property
    def is_borel(self):
        return not self.delta

    @property
    def is_whole_group(self):
        return len(self.delta) == 2 * self.n - 1

    @property
    def label(self):
        if self.is_borel:
            return 'B'
        if self.is_whole_group:
            return 'G'
        return ','.join(str(m) for m in self.composition)

    def as_spin(self):
        if not self.is_spin:
            raise NonSpinParabolicError(f"Le parabolique {self.label} n'est pas spin")
        return SpinParabolic(self.n, self.delta)

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class SpinParabolic(StandardParabolic):
    def __post_init__(self):
        super().__post_init__()
        if not self.is_spin:
            raise NonSpinParabolicError(f"Racines {sorted(self.delta)} non symétriques : parabolique non spin")

    @property
    def xp(self):
        return frozenset(i for i in range(1, self.n + 1) if i not in self.delta)

    def format_xp(self):
        return format_subset(self.xp)


@dataclass(frozen=True)
class GSpinParabolic:
    """Parabolique de GSpin(2n+1) : delta ⊂ {1..n}, indices des b_i ∈ Delta."""

    n: int
    delta: frozenset


def format_subset(ensemble):
    return '{' + ','.join(str(i) for i in sorted(ensemble)) + '}'


def require_spin(p):
    if isinstance(p, SpinParabolic):
        return p
    return p.as_spin()


def from_composition(parts, spin=True):
    """Parabolique de Levi GL(m_1) x ... x GL(m_r).

    Avec spin=True une composition non symétrique est refusée.
    """
    parts = tuple(int(m) for m in parts)
    if not parts or any(m < 1 for m in parts):
        raise RankMismatchError(f"Composition invalide {parts}")
    total = sum(parts)
    if total % 2:
        raise RankMismatchError(f"La composition {parts} a une somme impaire")
    coupures = set(itertools.accumulate(parts[:-1]))
    delta = frozenset(i for i in range(1, total) if i not in coupures)
    parabolique = StandardParabolic(total // 2, delta)
    if parabolique.is_spin:
        return SpinParabolic(parabolique.n, delta)
    if spin:
        raise NonSpinParabolicError(f"Le parabolique ({','.join(map(str, parts))}) n'est pas spin")
    return parabolique


def from_xp(x, n):
    """Bijection inverse de P -> X_P : a_i ∈ Delta_P ssi min(i, 2n-i) ∉ X."""
    x = frozenset(x)
    if any(not 1 <= i <= n for i in x):
        raise RankMismatchError(f"X = {sorted(x)} n'est pas contenu dans 1..{n}")
    return SpinParabolic(n, frozenset(i for i in range(1, 2 * n) if min(i, 2 * n - i) not in x))


def borel(n):
    return from_xp(range(1, n + 1), n)


def whole_group(n):
    return from_xp((), n)


def parabolic_q(n):
    """Le parabolique (n,n)."""
    return from_xp((n,), n)


def parse_parabolic(texte, n=None, spin=True):
    """Lit 'B', 'G', 'Q' ou une composition 'm1,...,mr'."""
    texte = (texte or '').strip().upper()
    if texte in ('B', 'G', 'Q'):
        if n is None:
            raise RankMismatchError(f"Le rang est nécessaire pour interpréter {texte!r}")
        return {'B': borel, 'G': whole_group, 'Q': parabolic_q}[texte](n)
    try:
        parts = [int(m) for m in texte.split(',')]
    except ValueError:
        raise RankMismatchError(f"Composition illisible {texte!r}") from None
    parabolique = from_composition(parts, spin=spin)
    if n is not None and parabolique.n != n:
        raise RankMismatchError(f"La composition {texte} est de taille {2 * parabolique.n}, attendu {2 * n}")
    return parabolique


def intersect(p, q):
    if p.n != q.n:
        raise RankMismatchError("Intersection de paraboliques de rangs différents")
    return type(p)(p.n, p.delta & q.delta) if type(p) is type(q) else StandardParabolic(p.n, p.delta & q.delta)


def contains(p, q):
    """Vrai si p ⊆ q, c'est-à-dire Delta_p ⊆ Delta_q."""
    if p.n != q.n:
        raise RankMismatchError("Comparaison de paraboliques de rangs différents")
    return p.delta <= q.delta


def all_spin_parabolics(n):
    """Paraboliques spin par #X_P décroissant puis X_P lexicographique."""
    sous_ensembles = [
        frozenset(x)
        for taille in range(n, -1, -1)
        for x in itertools.combinations(range(1, n + 1), taille)
    ]
    return [from_xp(x, n) for x in sous_ensembles]


def gspin_partner(p):
    """b_i ∈ Delta_𝒫 ssi A_i ⊂ Delta_P, avec A_i = {a_i, a_{2n-i}}."""
    p = require_spin(p)
    return GSpinParabolic(p.n, frozenset(i for i in range(1, p.n + 1) if i in p.delta))


def t_P(p):
    """t_P = diag(p^{r-1} I_{m_1}, ..., p^0 I_{m_r}) comme cocaractère."""
    composition = p.composition
    r = len(composition)
    exposants = []
    for numero, m in enumerate(composition):
        exposants.extend([r - 1 - numero] * m)
    return GLCocharacter(p.n, exposants)


def t_p_swap_holds(p):
    """t_P = p^{k-1} w_{2n} t_P^{-1} w_{2n}."""
    t = t_P(p).coeffs
    k = p.block_count
    return all(t[i] == (k - 1) - t[len(t) - 1 - i] for i in range(len(t)))
