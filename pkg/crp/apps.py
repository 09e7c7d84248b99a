from django.apps import AppConfig


class CrpConfig(AppConfig):
    name = "crp"
    verbose_name = "Ewens distribution and the Chinese restaurant process"
