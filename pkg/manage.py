#!/usr/bin/env python
"""Point d'entrée des commandes : classify, info, slopes, zeta, mtau et test."""
import os
import sys


def main():
    """Lance une commande de gestion."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'gestion_raffinements.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Django est introuvable. Vérifiez qu'il est installé "
            "(pip install -r requirements.txt) et que l'environnement virtuel est activé."
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
