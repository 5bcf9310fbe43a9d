"""
Exceptions du projet.

Chaque classe porte un code de sortie stable : les commandes de gestion le
transmettent tel quel au shell (voir core.decorators.commande_raffinement).
"""


class RefinementError(Exception):
    """Erreur de base de toutes les bibliothèques du projet."""

    exit_code = 1
    default_message = "Erreur de calcul sur les raffinements"

    def __init__(self, message=None):
        super().__init__(message or self.default_message)
        self.message = message or self.default_message

    def __str__(self):
        return self.message


class RankMismatchError(RefinementError, ValueError):
    default_message = "Rang incompatible"


class BoundExceededError(RefinementError):
    exit_code = 2
    default_message = "Borne d'énumération dépassée"


class MalformedPermutationError(RefinementError, ValueError):
    exit_code = 3
    default_message = "Permutation mal formée"

    def __init__(self, message=None, position=None):
        self.position = position
        if message and position is not None:
            message = f"{message} (position {position})"
        super().__init__(message)


class MissingDataError(RefinementError):
    exit_code = 4
    default_message = "Données manquantes"


class NonSpinParabolicError(RefinementError, ValueError):
    exit_code = 5
    default_message = "Le parabolique n'est pas spin"


class WeightError(RefinementError, ValueError):
    exit_code = 6
    default_message = "Poids invalide"


class SwitchingError(RefinementError):
    exit_code = 7
    default_message = "Échec de l'algorithme de bascule"


class AlreadyBSpinError(SwitchingError):
    default_message = "Le raffinement est déjà B-spin"


class GammaScanError(RefinementError):
    exit_code = 8
    default_message = "Balayage de gamma en échec"


class NoGammaMapError(GammaScanError):
    default_message = "Aucune application injective ne satisfait les relations"


class AmbiguousGammaMapError(GammaScanError):
    default_message = "Plusieurs applications satisfont les relations"

    def __init__(self, message=None, candidats=()):
        self.candidats = tuple(candidats)
        super().__init__(message)


class HeckeAlgebraError(RefinementError, ValueError):
    exit_code = 9
    default_message = "Générateur hors de l'algèbre de Hecke parahorique"


class IntertwiningError(RefinementError, ValueError):
    exit_code = 10
    default_message = "Opérateur d'entrelacement non défini"


class NotContainedInQError(IntertwiningError):
    default_message = "Le parabolique n'est pas contenu dans le parabolique (n,n)"
