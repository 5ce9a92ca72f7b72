from django.apps import AppConfig


class CoreConfig(AppConfig):
    name = "core"
    verbose_name = "Exact algebra over F_r(T)"
