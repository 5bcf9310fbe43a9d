from django.apps import AppConfig


class HeckeConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'hecke'
    verbose_name = 'Valeurs propres de Hecke symboliques'
