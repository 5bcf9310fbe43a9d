from django.apps import AppConfig


class ParabolicConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'parabolic'
    verbose_name = 'Paraboliques spin et poids'
