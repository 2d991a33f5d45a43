"""Command-line entry point: ``python -m graverlab <command> ...`` or ``graverlab <command> ...``"""

import os
import sys

import django
from django.conf import settings
from django.core.management import execute_from_command_line


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    if not settings.configured and not os.environ.get("DJANGO_SETTINGS_MODULE"):
        # standalone use: just enough of a project to load the commands
        settings.configure(INSTALLED_APPS=['graverlab'], USE_TZ=True)
    django.setup()
    execute_from_command_line(["graverlab"] + argv)


if __name__ == '__main__':
    main()
