import logging
from functools import wraps

from django.core.management.base import CommandError
from django.http import JsonResponse

from .exceptions import RefinementError

logger = logging.getLogger(__name__)


def commande_raffinement(handle):
    """Décorateur pour les méthodes handle() des commandes de gestion.

    Convertit toute RefinementError en CommandError avec le code de sortie
    documenté de l'exception.
    """
    @wraps(handle)
    def _wrapped_handle(self, *args, **options):
        try:
            return handle(self, *args, **options)
        except RefinementError as exc:
            logger.warning("Commande %s interrompue : %s", self.__module__.rsplit('.', 1)[-1], exc)
            raise CommandError(str(exc), returncode=exc.exit_code) from exc
    return _wrapped_handle


def reponse_json_raffinement(view_func):
    """Décorateur pour les vues de l'API : une RefinementError devient une réponse 400."""
    @wraps(view_func)
    def _wrapped_view(request, *args, **kwargs):
        try:
            return view_func(request, *args, **kwargs)
        except RefinementError as exc:
            return JsonResponse({
                'success': False,
                'error': str(exc),
                'code': exc.exit_code,
            }, status=400)
    return _wrapped_view
