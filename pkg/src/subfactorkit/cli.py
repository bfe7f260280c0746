"""
The ``subfactorkit`` console script.

    subfactorkit <subcommand> [options]

Subcommands are the management commands of this package; hyphens and
underscores are interchangeable (``verify-hadamard`` runs
``verify_hadamard``).
"""
import os
import sys

import django
from django.core.management import find_commands
from django.core.management import load_command_class

USAGE = "usage: subfactorkit <subcommand> [options]\n\nsubcommands:\n%s\n"


def available_commands():
    directory = os.path.join(os.path.dirname(__file__), "management")
    return sorted(find_commands(directory))


def usage():
    return USAGE % "\n".join(
        "  %s" % name.replace("_", "-") for name in available_commands()
    )


def main(argv=None):
    import subfactorkit.conf.settings  # noqa: configures standalone use

    django.setup()
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] in ("-h", "--help", "help"):
        sys.stdout.write(usage())
        return 0 if argv else 2
    name, rest = argv[0].replace("-", "_"), argv[1:]
    if name not in available_commands():
        sys.stderr.write("unknown subcommand %r\n\n" % argv[0])
        sys.stderr.write(usage())
        return 2
    command = load_command_class("subfactorkit", name)
    try:
        command.run_from_argv(["subfactorkit", name, *rest])
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
