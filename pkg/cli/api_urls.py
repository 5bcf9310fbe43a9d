from django.urls import path
from . import api

# URLs de l'API JSON
api_urlpatterns = [
    path('info/<str:sigma>/', api.api_info, name='api_info'),
    path('classify/<int:n>/', api.api_classify, name='api_classify'),
    path('zeta/', api.api_zeta, name='api_zeta'),
]
