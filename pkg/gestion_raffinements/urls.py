"""
Configuration des URLs du projet gestion_raffinements.

Seule l'API JSON en lecture est exposée ; les calculs lourds passent par les
commandes de gestion (python manage.py classify, info, slopes, zeta, mtau).
"""
from django.urls import path, include

from cli.api_urls import api_urlpatterns

urlpatterns = [
    path('api/', include(api_urlpatterns)),
]
