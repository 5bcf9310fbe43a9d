from django.apps import AppConfig


class RefineConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'refine'
    verbose_name = 'Classification des p-raffinements'
