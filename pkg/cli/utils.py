from typing import Sequence

from django.core.management import ManagementUtility


def run(argv: Sequence[str]) -> int:
    """
    Run one command line exactly as ``manage.py`` would and return the exit
    status: 0 on success, 1 for a FAIL verdict, 2 for usage and input errors
    """
    utility = ManagementUtility(["manage.py", *argv])
    try:
        utility.execute()
    except SystemExit as exit_:
        if exit_.code is None:
            return 0
        return exit_.code if isinstance(exit_.code, int) else 2
    return 0
