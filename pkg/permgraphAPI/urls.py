"""
URL configuration for permgraphAPI project.

Everything is served by the django-ninja API mounted under ``api/``.
"""
from django.urls import path
from .api import api

urlpatterns = [
    path("api/", api.urls),
]
