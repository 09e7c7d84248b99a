import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "permgraphAPI.settings")
django.setup()


def pytest_configure(config):
    # Mirror what Django's test runner does before running SimpleTestCase suites.
    from django.test.utils import setup_test_environment

    setup_test_environment()
