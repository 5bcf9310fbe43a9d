from django.apps import AppConfig


class RootdataConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'rootdata'
    verbose_name = 'Données radicielles GL(2n) et GSpin(2n+1)'
