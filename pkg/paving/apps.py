from django.apps import AppConfig


class PavingConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'paving'
    verbose_name = 'a-paving cells and filtration'
