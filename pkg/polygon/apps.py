from django.apps import AppConfig


class PolygonConfig(AppConfig):
    name = "polygon"
    verbose_name = "Polygon identification oracle"
