import django
from django.core import management

from borcherds.conf import configure


def execute_from_command_line(argv=None):
    """The ``borcherds`` console script: Django's runner with borcherds set up."""
    configure()
    django.setup()
    management.execute_from_command_line(argv)
