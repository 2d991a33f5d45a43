from django.apps import AppConfig
from django.core import checks

from .checks import check_cap_settings


class GraverLabConfig(AppConfig):
    name = 'graverlab'
    verbose_name = "Graver Lab"

    def ready(self):
        checks.register(check_cap_settings)
