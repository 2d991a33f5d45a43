"""
Django settings for graverlab tests.

graverlab needs no database, middleware or URLs: just the app itself,
plus the caps the test suite relies on.
"""

SECRET_KEY = 'NOT_FOR_PRODUCTION_USE'

DEBUG = True

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'graverlab',
]

DATABASES = {}

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.AutoField'

GRAVERLAB = {
    'BOX_BOUND': 2,
}

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'handlers': {
        'null': {'class': 'logging.NullHandler'},
    },
    'loggers': {
        'graverlab': {'handlers': ['null'], 'level': 'DEBUG', 'propagate': False},
    },
}
