"""
API JSON en lecture seule.

Chaque vue renvoie {'success': True, ...} ; les erreurs de calcul sont
transformées en réponse 400 par reponse_json_raffinement.
"""
from django.http import JsonResponse
from django.views.decorators.http import require_http_methods

from core.decorators import reponse_json_raffinement
from parabolic.paraboliques import parse_parabolic
from refine.classification import Refinement
from .options import exiger
from .rapports import document_classification, document_info, document_zeta


@require_http_methods(["GET"])
@reponse_json_raffinement
def api_info(request, sigma):
    return JsonResponse({'success': True, 'raffinement': document_info(Refinement.parse(sigma))})


@require_http_methods(["GET"])
@reponse_json_raffinement
def api_classify(request, n):
    return JsonResponse({'success': True, 'stratification': document_classification(n)})


@require_http_methods(["GET"])
@reponse_json_raffinement
def api_zeta(request):
    texte = exiger(request.GET.get('parabolic'), 'parabolic')
    n = request.GET.get('n')
    try:
        beta = int(request.GET.get('beta', 1))
        n = int(n) if n else None
    except ValueError:
        return JsonResponse({'success': False, 'error': 'beta et n doivent être des entiers'}, status=400)
    p = parse_parabolic(texte, n=n)
    return JsonResponse({'success': True, 'verdict': document_zeta(p, beta)})
