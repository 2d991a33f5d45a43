import json
import sys
from contextlib import contextmanager

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from ...exceptions import (
    GraverLabError, GraverLabInputError, GraverLabResourceError, GraverLabVerificationFailure)
from ...instance import DOMAINS, INTEGER, Instance
from ...lab import random_instance
from ...linalg import IntegerMatrix
from ...reports import FORMATS, JSON, render
from ...utils import as_rational

# exit codes
VERIFICATION_FAILED = 1
INPUT_ERROR = 2
RESOURCE_EXCEEDED = 3


def load_json(path):
    """Parse a JSON input file ("-" reads stdin)"""
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as f:
            return json.load(f)
    except OSError as err:
        raise GraverLabInputError("Can't read %s" % path) from err
    except ValueError as err:
        raise GraverLabInputError("%s is not valid JSON" % path) from err


def parse_point(text, what="point"):
    """A point given on the command line as comma-separated exact numbers, e.g. "1,0,1/2" """
    return tuple(as_rational(part, "%s entry" % what) for part in text.split(","))


class GraverLabCommand(BaseCommand):
    """
    Base for the graverlab commands: shared flags, input loading,
    settings overrides and exception-to-exit-code mapping.
    """

    # the GRAVERLAB setting that --cap overrides for this command
    cap_setting = 'ENUMERATION_CAP'
    input_help = "instance JSON file (- for stdin)"
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument("input", nargs="?", help=self.input_help)
        parser.add_argument("--format", choices=FORMATS, default=JSON, dest="report_format",
                            help="report format (default json)")
        parser.add_argument("--seed", type=int, default=0, help="seed for --random inputs")
        parser.add_argument("--random", nargs=2, type=int, metavar=("D", "N"),
                            help="use a seeded random D×N instance instead of a file")
        parser.add_argument("--domain", choices=DOMAINS,
                            help="override the instance's domain")
        parser.add_argument("--box-bound", type=int, metavar="M",
                            help="box bound for kernel-point enumeration")
        parser.add_argument("--cap", type=int, metavar="K",
                            help="override GRAVERLAB['%s'] for this run" % self.cap_setting)
        parser.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def handle(self, *args, **options):
        self.options = options
        try:
            with self.graverlab_overrides(options):
                return self.run(**options)
        except GraverLabVerificationFailure as err:
            raise CommandError(str(err), returncode=VERIFICATION_FAILED) from err
        except GraverLabResourceError as err:
            raise CommandError(str(err), returncode=RESOURCE_EXCEEDED) from err
        except GraverLabError as err:
            raise CommandError(str(err), returncode=INPUT_ERROR) from err

    def run(self, **options):
        raise NotImplementedError("%s.%s must implement run" %
                                  (self.__class__.__module__, self.__class__.__name__))

    @contextmanager
    def graverlab_overrides(self, options):
        """Apply --cap and --box-bound to settings.GRAVERLAB for the duration of the command"""
        overrides = {}
        if options.get("cap") is not None:
            overrides[self.cap_setting] = options["cap"]
        if options.get("box_bound") is not None:
            overrides['BOX_BOUND'] = options["box_bound"]
        if not overrides or not settings.configured:
            yield
            return
        original = getattr(settings, "GRAVERLAB", None)
        settings.GRAVERLAB = dict(original or {}, **overrides)
        try:
            yield
        finally:
            if original is None:
                del settings.GRAVERLAB
            else:
                settings.GRAVERLAB = original

    # Inputs

    def require_input(self, options):
        if not options.get("input"):
            raise GraverLabInputError("Give an input file or --random D N")
        return load_json(options["input"])

    def load_instance(self, options, domain=None):
        domain = domain or options.get("domain")
        if options.get("random"):
            d, n = options["random"]
            return random_instance(options["seed"], d, n, domain=domain or INTEGER)
        instance = Instance.from_json(self.require_input(options))
        return instance.with_domain(domain) if domain else instance

    def load_matrix(self, options):
        """A matrix from a list of rows, or from the "A" of any document"""
        if options.get("random"):
            return self.load_instance(options).A
        data = self.require_input(options)
        if isinstance(data, dict):
            if "A" not in data:
                raise GraverLabInputError("Matrix document has no \"A\"")
            data = data["A"]
        return IntegerMatrix(data)

    # Output

    def emit(self, obj, data=None):
        self.write(render(obj, self.options["report_format"], data))

    def write(self, text):
        path = self.options.get("out")
        if path:
            try:
                with open(path, "w", encoding="utf-8") as f:
                    f.write(text)
            except OSError as err:
                raise GraverLabInputError("Can't write %s" % path) from err
        else:
            self.stdout.write(text, ending="")
