from django.apps import AppConfig


class CarlitzConfig(AppConfig):
    name = "carlitz"
    verbose_name = "Carlitz special numbers"
