from django.apps import AppConfig


class IntertwineConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'intertwine'
    verbose_name = "Opérateurs d'entrelacement et intégrales zêta"
