"""
Paramètres Django du projet gestion_raffinements.

Le projet n'a ni modèles ni base de données métier : chaque commande et chaque
point d'entrée JSON calcule ses résultats à la volée. Tous les réglages
peuvent être surchargés par un fichier .env à la racine du dépôt.
"""

from pathlib import Path
import os
from dotenv import load_dotenv

# Charger les variables d'environnement
load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.getenv('SECRET_KEY', 'django-insecure-raffinements-spin-cle-locale')

# Nom : DEBUG
# Valeur : True pour le débogage, False en production
DEBUG = os.getenv('DEBUG', 'False') == 'True'

ALLOWED_HOSTS = [
    'localhost',
    '127.0.0.1',
    'testserver',
]

# Application definition
INSTALLED_APPS = [
    'django.contrib.contenttypes',
    # Applications du projet
    'core',
    'rootdata',
    'weyl',
    'parabolic',
    'refine',
    'hecke',
    'intertwine',
    'cli',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.middleware.common.CommonMiddleware',
]

ROOT_URLCONF = 'gestion_raffinements.urls'

WSGI_APPLICATION = 'gestion_raffinements.wsgi.application'

# Aucune donnée persistante : SQLite reste déclarée pour le lanceur de tests
DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}

LANGUAGE_CODE = 'fr-fr'
TIME_ZONE = 'UTC'
USE_I18N = True
USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# ---------------------------------------------------------------------------
# Paramètres de calcul
# ---------------------------------------------------------------------------

# Nom : ENUMERATION_BOUND
# Valeur : plus grand rang n pour lequel S_{2n} peut être énuméré
ENUMERATION_BOUND = int(os.getenv('ENUMERATION_BOUND', 5))

# Nom : STRATIFY_WORKERS
# Valeur : nombre de fils d'exécution pour la stratification
STRATIFY_WORKERS = int(os.getenv('STRATIFY_WORKERS', 1))

# Nom : DEFAULT_OUTPUT_FORMAT
# Valeur : table, json, csv ou xlsx
DEFAULT_OUTPUT_FORMAT = os.getenv('DEFAULT_OUTPUT_FORMAT', 'table')

# Répertoire des exports xlsx/csv quand aucun chemin n'est donné
EXPORT_DIR = Path(os.getenv('EXPORT_DIR', BASE_DIR / 'exports'))

# Affiche le facteur p^{n(n-1)} de f_w(w) à côté des développements de M_tau
SHOW_FW_SCALE = os.getenv('SHOW_FW_SCALE', 'False') == 'True'

# Graine et taille des vérifications par échantillonnage (un cas = un couple (sigma, P))
SAMPLE_SEED = int(os.getenv('SAMPLE_SEED', 20240611))
SAMPLE_COUNT = int(os.getenv('SAMPLE_COUNT', 100000))

# Configuration des logs
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {message}',
            'style': '{',
        },
        'simple': {
            'format': '{levelname} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'level': 'WARNING',
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
        'file': {
            'level': 'INFO' if not DEBUG else 'DEBUG',
            'class': 'logging.handlers.RotatingFileHandler',
            'filename': os.path.join(BASE_DIR, 'logs', 'raffinements.log'),
            'maxBytes': 1024 * 1024 * 2,  # 2 MB
            'backupCount': 3,
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'django': {
            'handlers': ['console', 'file'],
            'level': 'INFO',
            'propagate': True,
        },
        **{
            app: {
                'handlers': ['console', 'file'],
                'level': 'DEBUG' if DEBUG else 'INFO',
                'propagate': False,
            }
            for app in ('core', 'rootdata', 'weyl', 'parabolic', 'refine', 'hecke', 'intertwine', 'cli')
        },
    },
}

# Créer le répertoire de logs s'il n'existe pas
os.makedirs(os.path.join(BASE_DIR, 'logs'), exist_ok=True)
