from django.apps import AppConfig


class PgmConfig(AppConfig):
    name = "pgm"
    verbose_name = "Permanental graph model"
