"""
WSGI config for gestion_raffinements project.

It exposes the WSGI callable as a module-level variable named ``application``.
"""

import os

from django.core.wsgi import get_wsgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'gestion_raffinements.settings')

application = get_wsgi_application()
