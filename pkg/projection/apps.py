from django.apps import AppConfig


class ProjectionConfig(AppConfig):
    name = "projection"
    verbose_name = "Subselection and delete-and-repair projections"
