"""
Django settings for permgraphAPI project.

The project has no database: every app works on immutable in-memory values.
Configuration specific to the permanental graph tools lives in ``PERMGRAPH``.

For more information on this file, see
https://docs.djangoproject.com/en/4.2/topics/settings/
"""

import os
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get(
    "DJANGO_SECRET_KEY", "django-insecure-permgraph-local-development-only"
)

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = os.environ.get("DJANGO_DEBUG", "1") == "1"

ALLOWED_HOSTS = ["localhost", "127.0.0.1"]


# Application definition

INSTALLED_APPS = [
    "graphs",
    "permanent",
    "crp",
    "pgm",
    "projection",
    "consistency",
    "cli",
]

MIDDLEWARE = [
    "django.middleware.security.SecurityMiddleware",
    "django.middleware.common.CommonMiddleware",
]

ROOT_URLCONF = "permgraphAPI.urls"

WSGI_APPLICATION = "permgraphAPI.wsgi.application"


# Database
# The tools are pure computations, nothing is persisted.

DATABASES = {}


# Internationalization
# https://docs.djangoproject.com/en/4.2/topics/i18n/

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = False

USE_TZ = True


# Permanental graph tools

PERMGRAPH = {
    "DEFAULT_SEED": int(os.environ.get("PERMGRAPH_SEED", "0")),
    "THREADS": int(os.environ.get("PERMGRAPH_THREADS", "1")),
    "LOG_LEVEL": os.environ.get("PERMGRAPH_LOG_LEVEL", "WARNING"),
    "FIXTURES_DIR": BASE_DIR / "fixtures",
}


# Logging
# https://docs.djangoproject.com/en/4.2/topics/logging/

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "%(levelname)s %(asctime)s %(name)s %(message)s",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "verbose",
        },
    },
    "root": {
        "handlers": ["console"],
        "level": PERMGRAPH["LOG_LEVEL"],
    },
}
