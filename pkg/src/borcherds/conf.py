"""
Settings for borcherds.

Each setting ``NAME`` is read from the Django setting ``BORCHERDS_<NAME>``,
falling back to the default below. Inside a Django project, set them in the
project's settings module. Standalone, ``configure()`` sets Django up with
the defaults and any ``BORCHERDS_<NAME>`` environment variables.
"""

import os
from pathlib import Path

from django.conf import settings as django_settings

from borcherds.exceptions import ImproperlyConfigured

DEFAULTS = {
    # Directory holding the constant data files.
    "DATA_DIR": Path(__file__).resolve().parent / "data",
    # Expected-value manifest. None means DATA_DIR / "expected.json".
    "EXPECTED_FILE": None,
    "JOBS": 1,
    "SEED": 0,
    "MAX_CURVE_DEGREE": 46,
    # Degrees up to this bound use the lattice sieve for rational curves.
    "CURVE_SIEVE_DEGREE": 13,
    "VINBERG_FRONTIER_CAP": 100_000,
    # Chambers D_Y^g visited by the chamber method for rational curves.
    "CHAMBER_WALK_CAP": 2_000_000,
    "ENTROPY_MAX_WORD_LENGTH": 40,
}

PREFIX = "BORCHERDS_"
PATHS = ("DATA_DIR", "EXPECTED_FILE")


def from_environment(environ=None):
    """The ``BORCHERDS_<NAME>`` environment variables as Django settings."""
    environ = os.environ if environ is None else environ
    values = {}
    for name in DEFAULTS:
        raw = environ.get(PREFIX + name)
        if raw is not None:
            values[PREFIX + name] = cast(name, raw)
    return values


def cast(name, raw):
    if name in PATHS:
        path = Path(raw).expanduser()
        if not path.exists():
            raise ImproperlyConfigured(
                f"{PREFIX}{name} points to {path}, which does not exist."
            )
        return path
    try:
        value = int(raw)
    except ValueError:
        raise ImproperlyConfigured(f"{PREFIX}{name} must be an integer, not {raw!r}.")
    if value < 0:
        raise ImproperlyConfigured(f"{PREFIX}{name} must not be negative.")
    return value


def configure():
    """Set Django up for standalone use, unless a settings module is in charge."""
    if django_settings.configured or os.environ.get("DJANGO_SETTINGS_MODULE"):
        return
    django_settings.configure(INSTALLED_APPS=["borcherds"], **from_environment())


class Settings:
    def __getattr__(self, name):
        if name not in DEFAULTS:
            raise AttributeError(name)
        configure()
        value = getattr(django_settings, PREFIX + name, DEFAULTS[name])
        if name == "EXPECTED_FILE" and value is None:
            return Path(self.DATA_DIR) / "expected.json"
        return value


settings = Settings()
