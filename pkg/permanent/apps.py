from django.apps import AppConfig


class PermanentConfig(AppConfig):
    name = "permanent"
    verbose_name = "Alpha-weighted permanents"
