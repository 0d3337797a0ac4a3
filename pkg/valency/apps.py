from django.apps import AppConfig


class ValencyConfig(AppConfig):
    name = "valency"
    verbose_name = "Valency calculus"
