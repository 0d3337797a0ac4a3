"""
Django settings for valencylab project.

Generated by 'django-admin startproject' using Django 5.2.4, trimmed to what
the calculus commands need: no database, no HTTP stack.

For more information on this file, see
https://docs.djangoproject.com/en/5.2/topics/settings/
"""

from pathlib import Path
import os

from dotenv import load_dotenv

load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


def _env_flag(name: str, default: bool) -> bool:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    return raw.strip().lower() in {"1", "true", "yes", "on"}


# SECURITY WARNING: nothing here is served, the key only satisfies Django's startup checks.
SECRET_KEY = os.getenv('DJANGO_SECRET_KEY', 'django-insecure-valencylab-local-only')

DEBUG = _env_flag('DJANGO_DEBUG', False)

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'valency',
    'polygon',
    'census',
    'lifts',
    'cli',
]

# Brak bazy danych: wszystkie obliczenia są czystymi funkcjami.
DATABASES = {}


# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


# Valency calculus

VALENCY_OUTPUT_FORMAT = os.getenv('VALENCY_OUTPUT_FORMAT', 'text')

# CP-SAT time limit for one theta-enumeration model
VALENCY_SOLVER_TIME_LIMIT = float(os.getenv('VALENCY_SOLVER_TIME_LIMIT', '30'))

VALENCY_WITNESS_FROM_ORACLE = _env_flag('VALENCY_WITNESS_FROM_ORACLE', False)

VALENCY_VALIDATE_OUTPUT = _env_flag('VALENCY_VALIDATE_OUTPUT', True)

VALENCY_COMPANION_MAX_GENUS = int(os.getenv('VALENCY_COMPANION_MAX_GENUS', '10'))
VALENCY_LEMMA_INV_MAX_GENUS = int(os.getenv('VALENCY_LEMMA_INV_MAX_GENUS', '50'))
VALENCY_CENTRALIZER_MAX_GENUS = int(os.getenv('VALENCY_CENTRALIZER_MAX_GENUS', '10'))

VALENCY_SCHEMA_PATH = BASE_DIR / 'cli' / 'schema' / 'valency.schema.json'


# Logging: everything to stderr, stdout carries payloads only

VALENCY_LOG_LEVEL = os.getenv('VALENCY_LOG_LEVEL', 'WARNING').upper()

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'loggers': {
        app: {
            'handlers': ['console'],
            'level': VALENCY_LOG_LEVEL,
            'propagate': False,
        }
        for app in INSTALLED_APPS
    },
}
