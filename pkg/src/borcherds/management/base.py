"""
The base class of the borcherds commands.

Every command takes ``--jobs``, ``--seed`` and ``--json DIR`` on top of
Django's own options, and turns library errors into ``CommandError``.
"""

import json
import logging
import sys
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError
from django.test.utils import override_settings

from borcherds.checks import format_table
from borcherds.conf import PREFIX
from borcherds.exceptions import BorcherdsError

LOG_LEVELS = {0: logging.ERROR, 1: logging.WARNING, 2: logging.INFO, 3: logging.DEBUG}


class BorcherdsCommand(BaseCommand):
    requires_system_checks = []

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        parser.add_argument(
            "--verbose",
            action="store_const",
            const=2,
            dest="verbosity",
            help="Log progress; the same as --verbosity 2.",
        )
        parser.add_argument(
            "--jobs",
            type=int,
            help="Number of worker processes (default: BORCHERDS_JOBS).",
        )
        parser.add_argument(
            "--seed", type=int, help="Random seed (default: BORCHERDS_SEED)."
        )
        parser.add_argument(
            "--json",
            metavar="DIR",
            help="Also write each result as a JSON record into DIR.",
        )
        return parser

    def execute(self, *args, **options):
        logging.basicConfig(
            stream=sys.stderr,
            level=LOG_LEVELS.get(options.get("verbosity", 1), logging.WARNING),
            format="%(levelname)s %(name)s: %(message)s",
        )
        overrides = {
            PREFIX + name: options[key]
            for key, name in (("jobs", "JOBS"), ("seed", "SEED"))
            if options.get(key) is not None
        }
        try:
            with override_settings(**overrides):
                return super().execute(*args, **options)
        except BorcherdsError as e:
            raise CommandError(str(e)) from e

    def write_checks(self, checks, verbosity=1):
        """Print the table of checks and fail when one did not pass."""
        checks = list(checks)
        failed = [check for check in checks if not check.passed]
        if verbosity or failed:
            self.stdout.write(format_table(checks if verbosity else failed))
        if failed:
            raise CommandError(f"{len(failed)} of {len(checks)} checks failed.")
        return checks

    def write_json(self, options, name, record):
        """Write ``record`` to ``DIR/<name>.json`` when ``--json DIR`` was given."""
        directory = options.get("json")
        if not directory:
            return None
        path = Path(directory)
        path.mkdir(parents=True, exist_ok=True)
        target = path / f"{name}.json"
        text = json.dumps(record, indent=2, sort_keys=True, default=str)
        target.write_text(text + "\n")
        return target
