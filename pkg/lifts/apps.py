from django.apps import AppConfig


class LiftsConfig(AppConfig):
    name = "lifts"
    verbose_name = "Lifts over the torus"
